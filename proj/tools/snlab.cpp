// Command-line front end: surface construction, geodesic enumeration,
// stable-norm tables, counting runs, giraffe growth checks, and exact
// lattice counting, with reproducible file outputs.
//
// Exit codes: 0 success, 2 input error, 3 missing dependency artifact,
// 4 mathematical precondition failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "snlab/counting.hpp"
#include "snlab/enumeration.hpp"
#include "snlab/giraffe.hpp"
#include "snlab/io.hpp"
#include "snlab/region.hpp"
#include "snlab/stable_norm.hpp"
#include "snlab/surface.hpp"

using namespace snlab;

namespace {

struct RunConfig {
  std::string kind;
  std::array<double, 2> u{1, 0}, v{0, 1};
  double lsep = 0.1;
  std::vector<double> traces{3, 3, 3, 3};
  std::string spec_path;
  double horizon = 6.0;
  int threads = 1;
  int rays = 360;
  double tol = 0.15;
  unsigned seed = 1;
  std::string out;
  std::vector<std::string> grid;
  std::string gamma;
  std::vector<double> fit_window;
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
  json j = json::parse(read_file(path));
  if (j.contains("kind")) cfg.kind = j["kind"].get<std::string>();
  if (j.contains("spec")) cfg.spec_path = j["spec"].get<std::string>();
  if (j.contains("T")) cfg.horizon = j["T"].get<double>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  if (j.contains("rays")) cfg.rays = j["rays"].get<int>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("lsep")) cfg.lsep = j["lsep"].get<double>();
  if (j.contains("gamma")) cfg.gamma = j["gamma"].get<std::string>();
  if (j.contains("grid"))
    for (const auto& g : j["grid"]) cfg.grid.push_back(g.is_string() ? g.get<std::string>() : g.dump());
}

int effective_threads(int flag_value) {
  if (const char* env = std::getenv("STABLE_NORM_LAB_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1, flag_value);
}

HyperbolicSurface surface_from_config(const RunConfig& cfg) {
  SurfaceSpec spec;
  if (!cfg.spec_path.empty()) {
    spec = surface_spec_from_json(json::parse(read_file(cfg.spec_path)));
  } else {
    spec.kind = cfg.kind;
    spec.u = cfg.u;
    spec.v = cfg.v;
    spec.l_sep = cfg.lsep;
    if (cfg.traces.size() == 4)
      spec.traces = {cfg.traces[0], cfg.traces[1], cfg.traces[2], cfg.traces[3]};
  }
  if (spec.kind == "octagon") return build_octagon_surface();
  if (spec.kind == "giraffe") return build_giraffe_genus2(spec.l_sep, spec.traces);
  throw std::invalid_argument("not a hyperbolic surface kind: " + spec.kind);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    atomic_write(out_path, content);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i)
    g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  g.back() = hi;
  return g;
}

int cmd_surface(const RunConfig& cfg) {
  if (cfg.kind == "flat_torus" && cfg.spec_path.empty()) {
    FlatTorus t(cfg.u, cfg.v);
    json j{{"kind", "flat_torus"}, {"u", cfg.u}, {"v", cfg.v}, {"area", t.area()}};
    emit(cfg.out, j.dump(2) + "\n");
    return 0;
  }
  if (!cfg.spec_path.empty()) {
    SurfaceSpec spec = surface_spec_from_json(json::parse(read_file(cfg.spec_path)));
    if (spec.kind == "flat_torus") {
      FlatTorus t(spec.u, spec.v);
      json j{{"kind", "flat_torus"}, {"u", spec.u}, {"v", spec.v}, {"area", t.area()}};
      emit(cfg.out, j.dump(2) + "\n");
      return 0;
    }
  }
  HyperbolicSurface s = surface_from_config(cfg);
  emit(cfg.out, surface_summary_json(s).dump(2) + "\n");
  return 0;
}

int cmd_enum(const RunConfig& cfg) {
  HyperbolicSurface s = surface_from_config(cfg);
  EnumOptions opts;
  opts.threads = effective_threads(cfg.threads);
  Catalog cat = enumerate_classes(s, cfg.horizon, opts);
  emit(cfg.out, catalog_to_jsonl(cat));
  json stats{{"classes", cat.classes.size()},
             {"complete", cat.complete_flag},
             {"T", cat.length_bound}};
  if (!cat.classes.empty()) stats["systole"] = systole(cat);
  std::cerr << stats.dump() << "\n";
  return 0;
}

int cmd_stablenorm(const RunConfig& cfg, const std::string& catalog_path) {
  Catalog cat = catalog_from_jsonl(read_file(catalog_path));
  double T = cfg.horizon > 0 ? std::min(cfg.horizon, cat.length_bound) : cat.length_bound;
  StableNormTable table = build_stable_norm_table(cat, T);
  emit(cfg.out, table_to_jsonl(table));
  json stats{{"entries", table.values.size()},
             {"horizon", table.horizon},
             {"genericity_violations", table.genericity_violations.size()}};
  std::cerr << stats.dump() << "\n";
  return 0;
}

int cmd_count(const RunConfig& cfg, const std::string& catalog_path) {
  // flat-torus mode: analytic pipeline, no catalog artifact involved
  if (cfg.kind == "flat_torus") {
    FlatTorus torus(cfg.u, cfg.v);
    std::vector<double> grid;
    for (const auto& gstr : cfg.grid) grid.push_back(std::stod(gstr));
    if (grid.empty()) grid = log_grid(cfg.horizon / 20.0, cfg.horizon, 20);
    CountSeries series = flat_count_minimal(torus, grid);
    double wlo = cfg.fit_window.size() == 2 ? cfg.fit_window[0] : grid.back() / 2;
    double whi = cfg.fit_window.size() == 2 ? cfg.fit_window[1] : grid.back();
    GrowthFit fit = quadratic_fit(series, wlo, whi);
    emit(cfg.out, series_to_csv(series));
    std::cerr << fit_to_json(fit).dump() << "\n";
    return 0;
  }
  Catalog cat = catalog_from_jsonl(read_file(catalog_path));
  StableNormTable table = build_stable_norm_table(cat, cat.length_bound);
  std::vector<double> grid;
  for (const auto& gstr : cfg.grid) grid.push_back(std::stod(gstr));

  CountSeries series;
  if (!cfg.gamma.empty()) {
    SymplecticSpace space(cat.genus);
    SurfaceRelator rel(cat.genus);
    std::vector<ConjugacyClass> gamma;
    std::string word;
    std::istringstream ss(cfg.gamma);
    while (std::getline(ss, word, ',')) {
      Word cw = rel.canonical(Word::parse(word));
      bool hit = false;
      for (const auto& c : cat.classes)
        if (c.canonical_word == cw) {
          gamma.push_back(c);
          hit = true;
          break;
        }
      if (!hit) throw missing_artifact_error("gamma word not present in the catalog: " + word);
    }
    double glen = 0;
    for (const auto& g : gamma) glen += g.length;
    if (grid.empty()) grid = log_grid(cat.length_bound / 20.0, cat.length_bound - glen, 20);
    series = count_G_Gamma(table, cat, space, gamma, grid);
  } else {
    MinimalityReport report = minimality_flags(cat, table);
    if (grid.empty()) grid = log_grid(cat.length_bound / 20.0, cat.length_bound, 20);
    series = count_minimal(report, cat, grid);
  }
  double wlo = cfg.fit_window.size() == 2 ? cfg.fit_window[0] : grid.back() / 2;
  double whi = cfg.fit_window.size() == 2 ? cfg.fit_window[1] : grid.back();
  GrowthFit fit = quadratic_fit(series, wlo, whi);
  emit(cfg.out, series_to_csv(series));
  std::cerr << fit_to_json(fit).dump() << "\n";
  return 0;
}

int cmd_lattice(const RunConfig& cfg, const std::string& region_path) {
  PlanarRegion region = region_from_json(json::parse(read_file(region_path)));
  std::vector<Rat> ts;
  for (const auto& gstr : cfg.grid) ts.push_back(rational_from_decimal(gstr));
  if (ts.empty()) ts = {Rat(10), Rat(100), Rat(1000)};
  std::ostringstream csv;
  if (region.is_polygon()) {
    Rat area = polygon_area(region.polygon);
    csv << "# area=" << fmt12(boost::rational_cast<double>(area)) << " exact="
        << area.numerator().str() << "/" << area.denominator().str() << "\n";
  }
  csv << "t,count,count_over_t2\n";
  for (const Rat& t : ts) {
    long long c = lattice_count(region, t);
    double td = boost::rational_cast<double>(t);
    csv << fmt12(td) << "," << c << "," << fmt12(c / (td * td)) << "\n";
  }
  emit(cfg.out, csv.str());
  return 0;
}

int cmd_giraffe(const RunConfig& cfg) {
  HyperbolicSurface s = surface_from_config(cfg);
  EnumOptions opts;
  opts.threads = effective_threads(cfg.threads);
  Catalog cat = enumerate_classes(s, cfg.horizon, opts);
  GiraffeDecomposition dec = decompose(s, cat);  // exit 4 if necks fail
  StableNormTable table = build_stable_norm_table(cat, cat.length_bound);
  MinimalityReport report = minimality_flags(cat, table);
  std::vector<double> grid = log_grid(cfg.horizon / 4.0, cfg.horizon, 20);
  CountSeries series = count_minimal(report, cat, grid);
  series.provenance = SurfaceKind::giraffe;
  std::vector<double> areas;
  for (const auto& plane : dec.planes)
    areas.push_back(plane_ball_area(table, plane, cfg.rays).area);
  double wlo = cfg.fit_window.size() == 2 ? cfg.fit_window[0] : cfg.horizon / 2;
  double whi = cfg.fit_window.size() == 2 ? cfg.fit_window[1] : cfg.horizon;
  GiraffeReport rep = giraffe_theorem_check(series, areas, cfg.tol, wlo, whi);
  emit(cfg.out, giraffe_report_to_json(rep, dec.necks).dump(2) + "\n");
  return 0;  // the report carries the verdict
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable-norm laboratory: homologically minimal geodesic counting"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, catalog_path, region_path, traces_csv, u_csv, v_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file; flags override it");
    sub->add_option("--kind", cfg.kind, "surface kind: octagon | giraffe | flat_torus");
    sub->add_option("--spec", cfg.spec_path, "surface specification JSON file");
    sub->add_option("--lsep", cfg.lsep, "giraffe separating length");
    sub->add_option("--traces", traces_csv, "giraffe torus traces (x1,y1,x2,y2)");
    sub->add_option("--u", u_csv, "flat torus basis vector u (x,y)");
    sub->add_option("--v", v_csv, "flat torus basis vector v (x,y)");
    sub->add_option("--T", cfg.horizon, "length horizon");
    sub->add_option("--threads", cfg.threads, "worker count (STABLE_NORM_LAB_THREADS overrides)");
    sub->add_option("--seed", cfg.seed, "seed for randomized test-data generation");
    sub->add_option("--out", cfg.out, "output file (stdout when omitted)");
    sub->add_option("--grid", cfg.grid, "explicit grid values")->delimiter(',');
    sub->add_option("--fit-window", cfg.fit_window, "fit window lo,hi")->delimiter(',');
  };

  CLI::App* c_surface = app.add_subcommand("surface", "construct a surface and print a summary");
  add_common(c_surface);
  CLI::App* c_enum = app.add_subcommand("enum", "enumerate closed geodesics up to length T");
  add_common(c_enum);
  CLI::App* c_sn = app.add_subcommand("stablenorm", "build a stable-norm table from a catalog");
  add_common(c_sn);
  c_sn->add_option("--catalog", catalog_path, "catalog JSONL file")->required();
  CLI::App* c_count = app.add_subcommand("count", "counting series and quadratic fit");
  add_common(c_count);
  c_count->add_option("--catalog", catalog_path, "catalog JSONL file");
  c_count->add_option("--gamma", cfg.gamma, "comma-separated words: switch to N_Gamma mode");
  CLI::App* c_lattice = app.add_subcommand("lattice", "exact lattice counts for a region");
  add_common(c_lattice);
  c_lattice->add_option("--region", region_path, "region JSON file")->required();
  CLI::App* c_giraffe = app.add_subcommand("giraffe", "full giraffe growth-theorem pipeline");
  add_common(c_giraffe);
  c_giraffe->add_option("--rays", cfg.rays, "radial integration ray count");
  c_giraffe->add_option("--tol", cfg.tol, "pass tolerance for the growth gap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* active = nullptr;
  for (CLI::App* sub : {c_surface, c_enum, c_sn, c_count, c_lattice, c_giraffe})
    if (sub->parsed()) active = sub;

  try {
    if (!config_path.empty() && active) {
      // config supplies values for flags the caller did not give explicitly
      RunConfig file_cfg = cfg;
      apply_config_file(file_cfg, config_path);
      auto unset = [&](const std::string& name) { return active->count(name) == 0; };
      if (unset("--kind")) cfg.kind = file_cfg.kind;
      if (unset("--spec")) cfg.spec_path = file_cfg.spec_path;
      if (unset("--T")) cfg.horizon = file_cfg.horizon;
      if (unset("--threads")) cfg.threads = file_cfg.threads;
      if (unset("--seed")) cfg.seed = file_cfg.seed;
      if (unset("--out")) cfg.out = file_cfg.out;
      if (unset("--lsep")) cfg.lsep = file_cfg.lsep;
      if (unset("--grid")) cfg.grid = file_cfg.grid;
      if (active == c_count && unset("--gamma")) cfg.gamma = file_cfg.gamma;
      if (active == c_giraffe) {
        if (unset("--rays")) cfg.rays = file_cfg.rays;
        if (unset("--tol")) cfg.tol = file_cfg.tol;
      }
    }
    auto parse_pair = [](const std::string& s) {
      std::array<double, 2> a{};
      if (std::sscanf(s.c_str(), "%lf,%lf", &a[0], &a[1]) != 2)
        throw std::invalid_argument("expected two comma-separated numbers: " + s);
      return a;
    };
    if (!u_csv.empty()) cfg.u = parse_pair(u_csv);
    if (!v_csv.empty()) cfg.v = parse_pair(v_csv);
    if (!traces_csv.empty()) {
      double a, b, c, d;
      if (std::sscanf(traces_csv.c_str(), "%lf,%lf,%lf,%lf", &a, &b, &c, &d) != 4)
        throw std::invalid_argument("expected four comma-separated traces");
      cfg.traces = {a, b, c, d};
    }

    if (c_surface->parsed()) return cmd_surface(cfg);
    if (c_enum->parsed()) return cmd_enum(cfg);
    if (c_sn->parsed()) return cmd_stablenorm(cfg, catalog_path);
    if (c_count->parsed()) return cmd_count(cfg, catalog_path);
    if (c_lattice->parsed()) return cmd_lattice(cfg, region_path);
    if (c_giraffe->parsed()) return cmd_giraffe(cfg);
    return 2;
  } catch (const missing_artifact_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const degeneracy_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const construction_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
