#pragma once

// Enumeration of oriented closed geodesics of length <= T as canonical
// conjugacy classes of the surface group.
//
// The search runs depth-first over freely reduced words that are kept (a)
// Dehn-reduced: no subword longer than half the relator matches a relator
// rotation, (b) swap-normalized: no half-relator window whose complement is
// lexicographically smaller, and (c) rotation-normalized: the first letter
// stays minimal. Every conjugacy class of length <= T retains its
// length-minimal, lexicographically least spelling under these filters, so
// nothing is lost while spelling blowup (notably block powers winding a thin
// neck) is cut to one path.
//
// Pruning uses the basepoint displacement cosh d(i, M i) = ||M||_F^2 / 2:
// prefixes of a minimal spelling of a class of length <= T stay within
// T + slack of the basepoint. The slack absorbs the excursion overhead of
// word paths whose axes run far from the basepoint (windings around a thin
// neck are the extreme case), so it is adapted at runtime: each sweep
// measures the largest observed overhead (max prefix displacement minus
// class length) and the sweep repeats with a larger slack until the value
// stabilizes below the margin. Catalog stability under enlarging the slack
// further is part of the test suite.
//
// Surfaces carrying a designated short separating curve are enumerated per
// one-holed-torus factor: any class not conjugate into a factor crosses the
// collar twice and has length at least 4 * collar_halfwidth(l_sep), so for
// T below that threshold the factor catalogs are provably complete.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "snlab/numeric.hpp"
#include "snlab/surface.hpp"
#include "snlab/word.hpp"

namespace snlab {

struct ConjugacyClass {
  Word canonical_word;
  double length = 0;
  double trace = 0;
  HomologyClass homology;
  int word_length = 0;
};

struct Catalog {
  double length_bound = 0;
  bool complete_flag = false;
  SurfaceKind kind = SurfaceKind::generic;
  int genus = 2;
  std::vector<ConjugacyClass> classes;  // sorted by (length, canonical word)
};

inline double systole(const Catalog& cat) {
  if (cat.classes.empty())
    throw missing_artifact_error("systole: catalog is empty");
  return cat.classes.front().length;
}

struct EnumOptions {
  int threads = 1;
  double prune_slack = 7.0;     // initial displacement slack, grown adaptively
  double slack_margin = 1.5;    // headroom over the measured excursion overhead
  std::size_t max_nodes = 600000000;
  int max_depth = 0;            // 0: adaptive
  int adaptive_rounds = 6;
};

namespace detail {

// membership of packed letter windows (4 bits per letter)
class WindowSet {
 public:
  WindowSet() = default;
  WindowSet(const std::vector<Letters>& windows, std::size_t len) : len_(len) {
    bits_ = 4 * len;
    if (bits_ <= 22) {
      table_.assign(std::size_t(1) << bits_, false);
      for (const auto& w : windows) table_[pack(w)] = true;
      use_table_ = true;
    } else {
      for (const auto& w : windows) set_.insert(pack(w));
    }
  }
  static std::uint32_t pack(const Letters& w) {
    std::uint32_t v = 0;
    for (Letter l : w) v = (v << 4) | l;
    return v;
  }
  std::uint32_t mask() const { return (std::uint32_t(1) << bits_) - 1; }
  bool contains(std::uint32_t packed) const {
    return use_table_ ? table_[packed] : set_.count(packed) > 0;
  }
  std::size_t window_length() const { return len_; }

 private:
  std::size_t len_ = 0, bits_ = 0;
  bool use_table_ = false;
  std::vector<bool> table_;
  std::unordered_set<std::uint32_t> set_;
};

struct ComponentFrame {
  std::vector<Letter> letters;  // allowed alphabet (positive and inverse)
  std::vector<Mat2> letter_mat; // indexed by letter value
};

// move the basepoint to roughly minimize the largest generator displacement;
// only pruning efficiency depends on this
inline std::vector<Mat2> recenter(const std::vector<Mat2>& mats) {
  auto objective = [&](double x, double logy) {
    double y = std::exp(logy);
    double sy = std::sqrt(y);
    Mat2 g{sy, x / sy, 0.0, 1.0 / sy};
    Mat2 gi = g.inverse();
    double worst = 0;
    for (const auto& m : mats) worst = std::max(worst, (gi * m * g).frobenius_sq());
    return worst;
  };
  double x = 0, ly = 0, step = 1.0, best = objective(x, ly);
  for (int iter = 0; iter < 200 && step > 1e-4; ++iter) {
    bool improved = false;
    const double dx[4] = {step, -step, 0, 0};
    const double dy[4] = {0, 0, step, -step};
    for (int k = 0; k < 4; ++k) {
      double v = objective(x + dx[k], ly + dy[k]);
      if (v < best) {
        best = v;
        x += dx[k];
        ly += dy[k];
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  double y = std::exp(ly), sy = std::sqrt(y);
  Mat2 g{sy, x / sy, 0.0, 1.0 / sy};
  Mat2 gi = g.inverse();
  std::vector<Mat2> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(gi * m * g);
  return out;
}

struct FoundClass {
  double length;
  double trace;
  HomologyClass homology;
  // smallest prefix-displacement excess over the class length among the
  // spellings seen; the completeness slack only has to cover one spelling
  double overhead;
};

struct SearchShared {
  const SurfaceRelator* relator;
  const HyperbolicSurface* surface;
  WindowSet shorten_windows;   // length half+1 relator prefixes
  WindowSet downswap_windows;  // length half windows with smaller complement
  double horizon;              // T
  double norm_cap_sq;          // 2 cosh(T + slack)
  double trace_cap;            // 2 cosh((T + eps)/2)
  int max_depth;
  std::atomic<std::size_t> nodes{0};
  std::size_t max_nodes;
  std::atomic<bool> budget_hit{false};
};

class Searcher {
 public:
  Searcher(SearchShared& sh, const ComponentFrame& frame)
      : sh_(sh), frame_(frame) {}

  std::map<std::string, FoundClass> found;

  void run_root(Letter l0, Letter l1) {
    letters_.clear();
    mats_.clear();
    maxfro_.clear();
    push(l0);
    if (!try_push(l1)) { pop(); return; }
    dfs();
    pop();
    pop();
  }

  void run_depth_one(Letter l0) {
    letters_.clear();
    mats_.clear();
    maxfro_.clear();
    push(l0);
    consider_candidate();
    pop();
  }

 private:
  SearchShared& sh_;
  const ComponentFrame& frame_;
  Letters letters_;
  std::vector<Mat2> mats_;
  std::vector<double> maxfro_;  // running max of ||prefix||_F^2
  std::uint32_t win4_ = 0, win5_ = 0;
  std::size_t local_nodes_ = 0;

  void push(Letter l) {
    const Mat2& m = frame_.letter_mat[l];
    mats_.push_back(letters_.empty() ? m : mats_.back() * m);
    maxfro_.push_back(std::max(maxfro_.empty() ? 0.0 : maxfro_.back(),
                               mats_.back().frobenius_sq()));
    letters_.push_back(l);
    win4_ = ((win4_ << 4) | l) & sh_.downswap_windows.mask();
    win5_ = ((win5_ << 4) | l) & sh_.shorten_windows.mask();
  }
  void pop() {
    letters_.pop_back();
    mats_.pop_back();
    maxfro_.pop_back();
    rebuild_windows();
  }
  void rebuild_windows() {
    win4_ = 0;
    win5_ = 0;
    std::size_t n = letters_.size();
    for (std::size_t i = n > 5 ? n - 5 : 0; i < n; ++i) {
      win4_ = ((win4_ << 4) | letters_[i]) & sh_.downswap_windows.mask();
      win5_ = ((win5_ << 4) | letters_[i]) & sh_.shorten_windows.mask();
    }
  }

  bool try_push(Letter l) {
    if (l == letter_inverse(letters_.back())) return false;
    if (l < letters_.front()) return false;
    push(l);
    std::size_t n = letters_.size();
    if (n >= sh_.shorten_windows.window_length() && sh_.shorten_windows.contains(win5_)) {
      pop();
      return false;
    }
    if (n >= sh_.downswap_windows.window_length() && sh_.downswap_windows.contains(win4_)) {
      pop();
      return false;
    }
    if (mats_.back().frobenius_sq() > sh_.norm_cap_sq) {
      pop();
      return false;
    }
    return true;
  }

  void consider_candidate() {
    if (letters_.back() == letter_inverse(letters_.front())) return;
    double tr = std::abs(mats_.back().trace());
    if (tr <= 2.0 + kLengthTol)
      throw degeneracy_error("enumeration hit a non-hyperbolic cyclically reduced word");
    if (tr > sh_.trace_cap) return;
    Letters mr = min_rotation(letters_);
    if (mr != letters_) return;
    Letters can = sh_.relator->canonical(letters_);
    if (can.empty()) return;
    std::string key(can.size(), '\0');
    for (std::size_t i = 0; i < can.size(); ++i) key[i] = letter_to_char(can[i]);
    double prefix_disp = std::acosh(std::max(1.0, maxfro_.back() / 2.0));
    auto it = found.find(key);
    if (it != found.end()) {
      it->second.overhead = std::min(it->second.overhead, prefix_disp - it->second.length);
      return;
    }
    Word cw{can};
    long double ctr = word_trace(*sh_.surface, cw);
    long double atr = std::abs(ctr);
    if (atr <= 2.0L + kLengthTol)
      throw degeneracy_error("canonical word is not hyperbolic");
    double len = static_cast<double>(2.0L * std::acosh(atr / 2.0L));
    if (!len_le(len, sh_.horizon)) return;
    found.emplace(std::move(key), FoundClass{len, static_cast<double>(ctr),
                                             word_homology(*sh_.surface, cw),
                                             prefix_disp - len});
  }

  void dfs() {
    consider_candidate();
    if (static_cast<int>(letters_.size()) >= sh_.max_depth) return;
    if (++local_nodes_ >= 4096) {
      if (sh_.nodes.fetch_add(local_nodes_) + local_nodes_ > sh_.max_nodes)
        sh_.budget_hit.store(true);
      local_nodes_ = 0;
    }
    if (sh_.budget_hit.load(std::memory_order_relaxed)) return;
    for (Letter l : frame_.letters) {
      if (!try_push(l)) continue;
      dfs();
      pop();
    }
  }
};

inline void merge_found(std::map<std::string, FoundClass>& into,
                        std::map<std::string, FoundClass>& from) {
  for (auto& [k, v] : from) {
    auto [it, fresh] = into.try_emplace(k, std::move(v));
    if (!fresh) it->second.overhead = std::min(it->second.overhead, v.overhead);
  }
}

// one enumeration sweep over a component at a fixed depth cap
inline std::map<std::string, FoundClass> sweep_component(SearchShared& sh,
                                                         const ComponentFrame& frame,
                                                         int threads) {
  std::map<std::string, FoundClass> all;
  {
    Searcher s(sh, frame);
    for (Letter l : frame.letters) s.run_depth_one(l);
    merge_found(all, s.found);
  }
  std::vector<std::pair<Letter, Letter>> tasks;
  for (Letter l0 : frame.letters)
    for (Letter l1 : frame.letters) tasks.emplace_back(l0, l1);

  if (threads <= 1) {
    Searcher s(sh, frame);
    for (auto [l0, l1] : tasks) s.run_root(l0, l1);
    merge_found(all, s.found);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::map<std::string, FoundClass>> results(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        Searcher s(sh, frame);
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
          s.run_root(tasks[i].first, tasks[i].second);
        results[t] = std::move(s.found);
      });
    for (auto& th : pool) th.join();
    for (auto& r : results) merge_found(all, r);
  }
  return all;
}

}  // namespace detail

inline Catalog enumerate_classes(const HyperbolicSurface& s, double T,
                                 const EnumOptions& opts = {}) {
  if (T <= 0) throw std::invalid_argument("enumeration horizon must be positive");
  check_surface_invariants(s);
  SurfaceRelator relator(s.genus);

  // relator windows for the packed filters
  std::vector<Letters> shorten_windows = relator.rotation_prefixes(relator.half_length() + 1);
  std::vector<Letters> down_windows(relator.down_swap_windows().begin(),
                                    relator.down_swap_windows().end());

  detail::SearchShared shared;
  shared.relator = &relator;
  shared.surface = &s;
  shared.shorten_windows = detail::WindowSet(shorten_windows, relator.half_length() + 1);
  shared.downswap_windows = detail::WindowSet(down_windows, relator.half_length());
  shared.horizon = T;
  shared.norm_cap_sq = 2.0 * std::cosh(T + opts.prune_slack);
  shared.trace_cap = 2.0 * std::cosh((T + 1e-6) / 2.0) + 1e-9;
  shared.max_nodes = opts.max_nodes;

  // component frames: factor mode when the designated neck certifies that
  // crossing classes exceed the horizon
  std::vector<detail::ComponentFrame> frames;
  bool factor_mode = false;
  if (s.kind == SurfaceKind::giraffe && s.l_sep && !s.factor_frames.empty()) {
    double crossing_bound = 4.0 * collar_halfwidth(*s.l_sep);
    if (T < crossing_bound) factor_mode = true;
  }
  if (factor_mode) {
    for (std::size_t f = 0; f < s.factor_frames.size(); ++f) {
      detail::ComponentFrame fr;
      std::vector<Mat2> gens{s.factor_frames[f][0], s.factor_frames[f][1]};
      gens = detail::recenter(gens);
      fr.letter_mat.resize(2 * s.alphabet());
      for (int k = 0; k < 2; ++k) {
        Letter pos = static_cast<Letter>(2 * (2 * f + k));
        fr.letters.push_back(pos);
        fr.letters.push_back(letter_inverse(pos));
        fr.letter_mat[pos] = gens[k];
        fr.letter_mat[letter_inverse(pos)] = gens[k].inverse();
      }
      frames.push_back(std::move(fr));
    }
  } else {
    detail::ComponentFrame fr;
    std::vector<Mat2> gens = detail::recenter(s.generators);
    fr.letter_mat.resize(2 * s.alphabet());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Letter pos = static_cast<Letter>(2 * k);
      fr.letters.push_back(pos);
      fr.letters.push_back(letter_inverse(pos));
      fr.letter_mat[pos] = gens[k];
      fr.letter_mat[letter_inverse(pos)] = gens[k].inverse();
    }
    frames.push_back(std::move(fr));
  }

  int threads = std::max(1, opts.threads);
  std::map<std::string, detail::FoundClass> found;
  int depth = opts.max_depth > 0 ? opts.max_depth : 48;
  double slack = opts.prune_slack;
  bool certified = false;
  for (int round = 0; round < std::max(1, opts.adaptive_rounds); ++round) {
    shared.max_depth = depth;
    shared.norm_cap_sq = 2.0 * std::cosh(T + slack);
    shared.nodes.store(0);
    shared.budget_hit.store(false);
    found.clear();
    for (const auto& fr : frames) {
      auto part = detail::sweep_component(shared, fr, threads);
      detail::merge_found(found, part);
    }
    if (shared.budget_hit.load())
      throw resource_error("enumeration node budget exceeded; refusing partial catalog");
    double min_rate = std::numeric_limits<double>::infinity();
    double overhead = 0;
    for (const auto& [k, v] : found) {
      min_rate = std::min(min_rate, v.length / static_cast<double>(k.size()));
      overhead = std::max(overhead, v.overhead);
    }
    int depth_req = found.empty() ? 1 : static_cast<int>(std::ceil(T / min_rate)) + 1;
    double slack_req = overhead + opts.slack_margin;
    certified = depth >= depth_req && slack >= slack_req;
    if (certified || opts.max_depth > 0) break;
    depth = std::max(depth, depth_req);
    slack = std::max(slack, slack_req);
  }

  Catalog cat;
  cat.length_bound = T;
  cat.kind = s.kind;
  cat.genus = s.genus;
  cat.complete_flag = certified;
  for (const auto& [k, v] : found) {
    ConjugacyClass c;
    c.canonical_word = Word::parse(k);
    c.length = v.length;
    c.trace = v.trace;
    c.homology = v.homology;
    c.word_length = static_cast<int>(k.size());
    cat.classes.push_back(std::move(c));
  }
  std::sort(cat.classes.begin(), cat.classes.end(), [](const auto& x, const auto& y) {
    if (x.length != y.length) return x.length < y.length;
    return x.canonical_word.str() < y.canonical_word.str();
  });
  return cat;
}

}  // namespace snlab
