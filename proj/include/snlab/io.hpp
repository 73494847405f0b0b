#pragma once

// File formats: surface specification JSON, catalog and stable-norm-table
// JSON lines, count series CSV, region JSON, giraffe report JSON. All
// numeric output uses 12 significant digits and files are written
// atomically (temp + rename).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "snlab/counting.hpp"
#include "snlab/enumeration.hpp"
#include "snlab/giraffe.hpp"
#include "snlab/region.hpp"
#include "snlab/stable_norm.hpp"
#include "snlab/surface.hpp"

namespace snlab {

using nlohmann::json;

inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw missing_artifact_error("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- surface specification -------------------------------------------------

struct SurfaceSpec {
  std::string kind;  // "flat_torus" | "octagon" | "giraffe"
  std::array<double, 2> u{1, 0}, v{0, 1};
  double l_sep = 0.1;
  std::array<double, 4> traces{3, 3, 3, 3};
};

inline SurfaceSpec surface_spec_from_json(const json& j) {
  SurfaceSpec s;
  s.kind = j.at("kind").get<std::string>();
  if (s.kind == "flat_torus") {
    auto u = j.at("u"), v = j.at("v");
    s.u = {u.at(0).get<double>(), u.at(1).get<double>()};
    s.v = {v.at(0).get<double>(), v.at(1).get<double>()};
  } else if (s.kind == "giraffe") {
    s.l_sep = j.at("l_sep").get<double>();
    if (j.contains("traces")) {
      auto t = j.at("traces");
      s.traces = {t.at(0).at(0).get<double>(), t.at(0).at(1).get<double>(),
                  t.at(1).at(0).get<double>(), t.at(1).at(1).get<double>()};
    }
  } else if (s.kind != "octagon") {
    throw std::invalid_argument("unknown surface kind: " + s.kind);
  }
  return s;
}

inline json surface_summary_json(const HyperbolicSurface& s) {
  json j;
  j["kind"] = s.kind == SurfaceKind::octagon ? "octagon"
              : s.kind == SurfaceKind::giraffe ? "giraffe"
                                               : "generic";
  j["genus"] = s.genus;
  j["relation_residual"] = s.relation_residual;
  json gens = json::array();
  for (const auto& g : s.generators) gens.push_back({g.a, g.b, g.c, g.d});
  j["generators"] = gens;
  if (s.l_sep) j["l_sep"] = *s.l_sep;
  if (!s.separating_words.empty()) {
    json ws = json::array();
    for (const auto& w : s.separating_words) ws.push_back(w.str());
    j["separating_words"] = ws;
  }
  return j;
}

// ---- catalog ----------------------------------------------------------------

inline std::string catalog_to_jsonl(const Catalog& cat) {
  std::ostringstream out;
  json header;
  header["length_bound"] = cat.length_bound;
  header["complete"] = cat.complete_flag;
  header["genus"] = cat.genus;
  header["kind"] = cat.kind == SurfaceKind::octagon ? "octagon"
                   : cat.kind == SurfaceKind::giraffe ? "giraffe"
                                                      : "generic";
  header["classes"] = cat.classes.size();
  out << header.dump() << "\n";
  for (const auto& c : cat.classes) {
    json j;
    j["word"] = c.canonical_word.str();
    j["length"] = c.length;
    j["trace"] = c.trace;
    j["homology"] = c.homology.c;
    out << j.dump() << "\n";
  }
  return out.str();
}

inline Catalog catalog_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("catalog file is empty");
  json header = json::parse(line);
  Catalog cat;
  cat.length_bound = header.at("length_bound").get<double>();
  cat.complete_flag = header.at("complete").get<bool>();
  cat.genus = header.at("genus").get<int>();
  std::string kind = header.value("kind", "generic");
  cat.kind = kind == "octagon" ? SurfaceKind::octagon
             : kind == "giraffe" ? SurfaceKind::giraffe
                                 : SurfaceKind::generic;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    ConjugacyClass c;
    c.canonical_word = Word::parse(j.at("word").get<std::string>());
    c.length = j.at("length").get<double>();
    c.trace = j.at("trace").get<double>();
    c.homology = HomologyClass(j.at("homology").get<std::vector<long long>>());
    c.word_length = static_cast<int>(c.canonical_word.size());
    cat.classes.push_back(std::move(c));
  }
  return cat;
}

// ---- stable norm table ------------------------------------------------------

inline std::string table_to_jsonl(const StableNormTable& table) {
  std::ostringstream out;
  json header;
  header["horizon"] = table.horizon;
  header["dim"] = table.dim;
  header["complete_source"] = table.from_complete_catalog;
  header["genericity_violations"] = table.genericity_violations.size();
  out << header.dump() << "\n";
  // deterministic order
  std::vector<const HomologyClass*> keys;
  for (const auto& [h, e] : table.values) keys.push_back(&h);
  std::sort(keys.begin(), keys.end(),
            [](const HomologyClass* a, const HomologyClass* b) { return *a < *b; });
  for (const HomologyClass* h : keys) {
    const TableEntry& e = table.values.at(*h);
    json j;
    j["homology"] = h->c;
    j["sn"] = e.sn;
    json w = json::array();
    for (const auto& p : e.witness)
      w.push_back({{"word", table.atoms[p.atom].label}, {"mult", p.mult}});
    j["witness"] = w;
    out << j.dump() << "\n";
  }
  return out.str();
}

// ---- regions ---------------------------------------------------------------

// polygon vertices as pairs of rationals, each rational a [num, den] pair
inline PlanarRegion region_from_json(const json& j) {
  PlanarRegion r;
  if (j.contains("polygon")) {
    for (const auto& v : j.at("polygon")) {
      auto rx = v.at(0), ry = v.at(1);
      r.polygon.push_back({Rat(Int(rx.at(0).get<long long>()), Int(rx.at(1).get<long long>())),
                           Rat(Int(ry.at(0).get<long long>()), Int(ry.at(1).get<long long>()))});
    }
    validate_polygon(r.polygon);
  } else if (j.contains("radial")) {
    RadialRegion rad;
    for (const auto& v : j.at("radial"))
      rad.rays.push_back({{v.at(0).get<long long>(), v.at(1).get<long long>()},
                          v.at(2).get<double>()});
    r.radial = std::move(rad);
  } else {
    throw std::invalid_argument("region JSON needs a 'polygon' or 'radial' key");
  }
  return r;
}

// parse a decimal string into an exact rational (for scan scales)
inline Rat rational_from_decimal(const std::string& s) {
  std::size_t dot = s.find('.');
  if (dot == std::string::npos) return Rat(Int(s), Int(1));
  std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
  bool neg = !ip.empty() && ip[0] == '-';
  Int den = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
  Int num = Int(ip.empty() || ip == "-" ? "0" : ip) * den;
  Int frac = fp.empty() ? Int(0) : Int(fp);
  num += neg ? -frac : frac;
  return Rat(num, den);
}

// ---- series ----------------------------------------------------------------

inline std::string series_to_csv(const CountSeries& series) {
  std::ostringstream out;
  out << "T,count,count_over_T2\n";
  for (const auto& [t, n] : series.samples)
    out << fmt12(t) << "," << n << "," << fmt12(n / (t * t)) << "\n";
  return out.str();
}

inline json fit_to_json(const GrowthFit& fit) {
  return json{{"c", fit.coefficient},
              {"residual", fit.residual},
              {"window", {fit.window_min, fit.window_max}}};
}

inline json giraffe_report_to_json(const GiraffeReport& rep,
                                   const std::vector<NeckCertificate>& necks) {
  json j;
  json ns = json::array();
  for (const auto& n : necks) {
    json nj;
    nj["curve"] = n.curve.str();
    nj["length"] = n.curve_length;
    nj["collar_bound"] = n.collar_bound;
    nj["criterion_value"] = n.criterion_value;
    if (n.feasible_r) nj["feasible_r"] = *n.feasible_r;
    ns.push_back(nj);
  }
  j["necks"] = ns;
  j["areas"] = rep.areas;
  j["area_sum"] = rep.area_sum;
  j["fit"] = fit_to_json(rep.fit);
  j["gap"] = rep.gap;
  j["pass"] = rep.pass;
  j["tolerance"] = rep.tolerance;
  return j;
}

}  // namespace snlab
