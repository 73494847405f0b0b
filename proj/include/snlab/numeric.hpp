#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace snlab {

// Single source of truth for floating-point length comparisons.
inline constexpr double kLengthTol = 1e-9;

inline bool len_eq(double a, double b, double tol = kLengthTol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

inline bool len_le(double a, double b, double tol = kLengthTol) {
  return a <= b || len_eq(a, b, tol);
}

// Geodesic length of a hyperbolic SL(2,R) class from |trace|.
inline double trace_to_length(double abs_trace) {
  return 2.0 * std::acosh(abs_trace / 2.0);
}

inline double length_to_trace(double length) {
  return 2.0 * std::cosh(length / 2.0);
}

// A mathematical precondition of an operation does not hold (CLI exit 4).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A surface construction is infeasible for the given parameters (CLI exit 2).
struct construction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A required artifact (catalog file, table entry) is absent (CLI exit 3).
struct missing_artifact_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration budget exceeded; results are refused rather than truncated.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Encountered a non-hyperbolic element on a supposedly discrete surface.
struct degeneracy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace snlab
