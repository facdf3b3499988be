// wvg: exact power-index computations for weighted voting games.
//
// Exit codes: 0 success, 1 asserted bound violated, 2 bad input,
// 3 capability cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wvg/families.hpp"
#include "wvg/gamedoc.hpp"
#include "wvg/lemmas.hpp"
#include "wvg/nucleolus.hpp"

using namespace wvg;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCap = 3;

struct Rendering {
  unsigned precision = 12;
  std::string frac(const Rat& r) const { return fraction_string(r); }
  std::string dec(const Rat& r) const { return decimal_string(r, precision); }
  ordered_json value(const Rat& r) const {
    return ordered_json{{"frac", frac(r)}, {"dec", dec(r)}};
  }
};

WeightedGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open game file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return GameDocument::parse(buffer.str()).to_game();
}

ordered_json game_json(const WeightedGame& g) {
  return ordered_json::parse(GameDocument::from_game(g).serialize());
}

// ---- compute ----

struct IndexResult {
  std::string name;
  PowerVector power;
  Rat l1;
  Rat linf;
};

int run_compute(const std::string& path, const std::string& index,
                const std::string& format, const Rendering& render) {
  WeightedGame g = load_game(path);
  WeightVector w = g.relative_weights();
  WeightStats stats = weight_stats(w);

  std::vector<IndexResult> results;
  auto add = [&](const std::string& name, PowerVector p) {
    IndexResult r;
    r.name = name;
    r.l1 = l1_distance(p.values, w);
    r.linf = linf_distance(p.values, w);
    r.power = std::move(p);
    results.push_back(std::move(r));
  };
  if (index == "banzhaf" || index == "all") add("banzhaf", banzhaf(g));
  if (index == "ssi" || index == "all") add("shapley-shubik", shapley_shubik(g));
  if (index == "nucleolus" || index == "all") add("nucleolus", nucleolus(g));

  if (format == "json") {
    ordered_json j;
    j["n"] = g.n();
    j["quota"] = render.frac(g.quota_scaled());
    j["total_weight"] = g.total_weight().get_str();
    j["relative_quota"] = render.frac(g.relative_quota());
    j["stats"] = ordered_json{{"delta", render.value(stats.delta)},
                              {"lambda", render.value(stats.lambda)},
                              {"laakso", render.value(stats.laakso)}};
    ordered_json indices = ordered_json::object();
    for (const auto& r : results) {
      ordered_json values = ordered_json::array();
      for (const Rat& v : r.power.values) values.push_back(render.value(v));
      indices[r.name] = ordered_json{{"values", std::move(values)},
                                     {"l1_deviation", render.value(r.l1)},
                                     {"linf_deviation", render.value(r.linf)}};
    }
    j["indices"] = std::move(indices);
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "metric,player,fraction,decimal\n";
    auto row = [&](const std::string& metric, const std::string& player, const Rat& v) {
      std::cout << metric << "," << player << "," << render.frac(v) << ","
                << render.dec(v) << "\n";
    };
    row("delta", "", stats.delta);
    row("lambda", "", stats.lambda);
    row("laakso", "", stats.laakso);
    for (const auto& r : results) {
      for (std::size_t i = 0; i < r.power.values.size(); ++i)
        row(r.name, std::to_string(i + 1), r.power.values[i]);
      row(r.name + "-l1", "", r.l1);
      row(r.name + "-linf", "", r.linf);
    }
  } else {
    std::cout << "players: " << g.n() << "\n";
    std::cout << "quota: " << render.frac(g.quota_scaled()) << " of "
              << g.total_weight().get_str()
              << " (relative " << render.frac(g.relative_quota()) << ")\n";
    std::cout << "delta: " << render.frac(stats.delta) << " (" << render.dec(stats.delta)
              << ")  lambda: " << render.frac(stats.lambda) << " ("
              << render.dec(stats.lambda) << ")  laakso: " << render.frac(stats.laakso)
              << " (" << render.dec(stats.laakso) << ")\n";
    for (const auto& r : results) {
      std::cout << r.name << ":\n";
      for (std::size_t i = 0; i < r.power.values.size(); ++i)
        std::cout << "  player " << i + 1 << ": " << render.frac(r.power.values[i])
                  << " (" << render.dec(r.power.values[i]) << ")\n";
      std::cout << "  l1 deviation from weights: " << render.frac(r.l1) << " ("
                << render.dec(r.l1) << ")\n";
      std::cout << "  linf deviation from weights: " << render.frac(r.linf) << " ("
                << render.dec(r.linf) << ")\n";
    }
  }
  return kExitOk;
}

// ---- family ----

int print_bounds(const FamilyInstance& inst, const Rendering& render) {
  bool all_ok = true;
  for (const auto& b : inst.bounds) {
    bool counted = b.asserted && !b.satisfied;
    if (counted) all_ok = false;
    std::cout << "  " << b.name << ": value " << render.dec(b.value) << ", bound "
              << render.dec(b.bound) << " -> "
              << (b.satisfied ? "PASS" : (b.asserted ? "FAIL" : "not asserted"))
              << "\n";
  }
  return all_ok ? kExitOk : kExitViolation;
}

int run_family_prop(int which, long n, const Rendering& render) {
  if (which == 1) {
    auto r = prop1_instance(n);
    std::cout << "prop1 n=" << n << ": " << r.instance.game.n()
              << " players, quota " << r.instance.game.quota_int().get_str() << "\n";
    std::cout << "  BZI_1 = " << render.frac(r.bzi.values[0]) << " ("
              << render.dec(r.bzi.values[0]) << ")\n";
    std::cout << "  ||BZI-w||_1 = " << render.dec(r.deviation.l1)
              << ", ||BZI-w||_inf = " << render.dec(r.deviation.linf) << "\n";
    return print_bounds(r.instance, render);
  }
  auto r = prop2_instance(n);
  std::cout << "prop2 n=" << n << ": " << r.instance.game.n()
            << " players, quota " << r.instance.game.quota_int().get_str() << "\n";
  std::cout << "  BZI_1 = " << render.frac(r.bzi.values[0]) << " ("
            << render.dec(r.bzi.values[0]) << ")\n";
  std::cout << "  ||BZI-w||_1 = " << render.dec(r.deviation.l1) << "\n";
  return print_bounds(r.instance, render);
}

int run_family_vnq(long n, const Rat& q, const Rendering& render) {
  auto r = vnq_instance(n, q);
  auto printed = vnq_eta_printed(n, q);
  std::cout << "vnq n=" << n << " q=" << render.frac(q) << ": quota "
            << r.point.quota << "\n";
  std::cout << "  f_n(q) = " << render.frac(r.point.f) << " ("
            << render.dec(r.point.f) << ")\n";
  std::cout << "  eta(weight 2): DP " << printed.dp_eta_weight2.get_str()
            << ", printed-formula " << printed.printed_eta_weight2.get_str() << "\n";
  std::cout << "  eta(weight 1): DP " << printed.dp_eta_weight1.get_str()
            << ", printed-formula " << printed.printed_eta_weight1.get_str() << "\n";
  return kExitOk;
}

// ---- fcurve ----

std::vector<Rat> parse_grid(const std::string& spec) {
  auto first = spec.find(':');
  auto second = spec.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("grid must be start:stop:step");
  Rat start = parse_rational(spec.substr(0, first));
  Rat stop = parse_rational(spec.substr(first + 1, second - first - 1));
  Rat step = parse_rational(spec.substr(second + 1));
  if (step <= 0 || stop < start) throw std::invalid_argument("bad grid range");
  std::vector<Rat> grid;
  for (Rat q = start; q <= stop; q += step) grid.push_back(q);
  return grid;
}

int run_fcurve(long n, const std::string& grid_spec, const std::string& out_path,
               const Rendering& render) {
  auto report = f_curve(n, parse_grid(grid_spec));
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write output file: " + out_path);
    out = &file;
  }
  *out << "q,quota,f_frac,f_dec,cand_cubic,cand_entropy,g\n";
  for (const auto& p : report.points) {
    *out << render.dec(p.point.q) << "," << p.point.quota << ","
         << render.frac(p.point.f) << "," << render.dec(p.point.f) << ","
         << render.dec(p.cand_cubic) << "," << render.dec(p.cand_entropy) << ","
         << render.dec(p.g) << "\n";
  }
  std::cerr << "n=" << report.n << " points=" << report.points.size()
            << " nondecreasing-on-[1/2,1]=" << (report.nondecreasing_upper_half ? "yes" : "no")
            << " duality=" << (report.duality_ok ? "exact" : "BROKEN")
            << " max|f-cubic|=" << render.dec(report.max_abs_error_cubic)
            << " max|f-entropy|=" << render.dec(report.max_abs_error_entropy) << "\n";
  return kExitOk;
}

// ---- scans ----

int run_scan_bzi(const BziScanConfig& config, const Rendering& render) {
  auto report = conjecture_bzi_scan(config);
  ordered_json j;
  j["kind"] = "bzi-scan";
  j["seed"] = config.seed;
  j["samples"] = config.samples;
  j["n_min"] = config.n_min;
  j["n_max"] = config.n_max;
  j["max_weight"] = config.max_weight;
  j["include_families"] = config.include_families;
  ordered_json rows = ordered_json::array();
  for (const auto& s : report.samples) {
    rows.push_back(ordered_json{{"label", s.label},
                                {"n", s.n},
                                {"l1", render.frac(s.l1)},
                                {"delta_lambda", render.frac(s.delta_lambda)},
                                {"ratio", render.frac(s.ratio)},
                                {"ratio_dec", render.dec(s.ratio)}});
  }
  j["results"] = std::move(rows);
  j["max_ratio"] = render.frac(report.max_ratio);
  j["max_ratio_dec"] = render.dec(report.max_ratio);
  if (report.argmax_game) {
    j["argmax"] = ordered_json{{"label", report.argmax_game->label},
                               {"game", game_json(report.argmax_game->game)}};
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;  // report-only scan
}

int run_scan_ssi(const SsiScanConfig& config, const Rendering& render) {
  auto report = conjecture_ssi_scan(config);
  ordered_json j;
  j["kind"] = "ssi-scan";
  j["seed"] = config.seed;
  j["samples"] = config.samples;
  j["n_min"] = config.n_min;
  j["n_max"] = config.n_max;
  j["max_weight"] = config.max_weight;
  j["include_families"] = config.include_families;
  ordered_json grid = ordered_json::array();
  for (const Rat& q : report.config.q_grid) grid.push_back(render.frac(q));
  j["q_grid"] = std::move(grid);
  ordered_json rows = ordered_json::array();
  for (const auto& s : report.samples) {
    rows.push_back(ordered_json{{"label", s.label},
                                {"n", s.n},
                                {"q", render.frac(s.q)},
                                {"l1", render.frac(s.l1)},
                                {"bound", render.frac(s.bound)},
                                {"ratio", render.frac(s.ratio)},
                                {"ratio_dec", render.dec(s.ratio)},
                                {"violated", s.violated}});
  }
  j["results"] = std::move(rows);
  j["max_ratio"] = render.frac(report.max_ratio);
  j["max_ratio_dec"] = render.dec(report.max_ratio);
  j["violations"] = report.violations;
  if (report.argmax_game) {
    j["argmax"] = ordered_json{{"label", report.argmax_game->label},
                               {"game", game_json(report.argmax_game->game)}};
  }
  std::cout << j.dump(2) << "\n";
  return report.violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact voting-power computations for weighted games"};
  app.require_subcommand(1);
  Rendering render;
  app.add_option("--precision", render.precision, "significant digits for decimals")
      ->capture_default_str();

  // compute
  std::string game_path, index = "all", format = "plain";
  auto* compute = app.add_subcommand("compute", "indices of a game document");
  compute->add_option("game", game_path, "JSON game document")->required();
  compute->add_option("--index", index, "banzhaf|ssi|nucleolus|all")
      ->check(CLI::IsMember({"banzhaf", "ssi", "nucleolus", "all"}));
  compute->add_option("--format", format, "plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  // family
  long family_n = 11;
  std::string vnq_q = "1/2";
  auto* family = app.add_subcommand("family", "paper game families with their bounds");
  family->require_subcommand(1);
  auto* prop1 = family->add_subcommand("prop1", "one big player vs 2n^3 small ones");
  prop1->add_option("--n", family_n, "family parameter")->required();
  auto* prop2 = family->add_subcommand("prop2", "2n+1 big players vs 2n^3 small ones");
  prop2->add_option("--n", family_n, "family parameter")->required();
  auto* vnq = family->add_subcommand("vnq", "n players of weight 2, n of weight 1");
  vnq->add_option("--n", family_n, "family parameter")->required();
  vnq->add_option("--q", vnq_q, "relative quota in [0,1]");

  // fcurve
  long fcurve_n = 200;
  std::string grid_spec = "0.5:1.0:0.05", out_path;
  auto* fcurve = app.add_subcommand("fcurve", "finite-n deviation curve as CSV");
  fcurve->add_option("--n", fcurve_n, "family parameter")->required();
  fcurve->add_option("--grid", grid_spec, "start:stop:step")->capture_default_str();
  fcurve->add_option("--out", out_path, "output CSV path (default stdout)");

  // scan
  auto* scan = app.add_subcommand("scan", "empirical conjecture scans");
  scan->require_subcommand(1);
  long samples = 100, nmax = 10, nmin = 2, max_weight = 20, scan_family_n = 11;
  unsigned long long seed = 1;
  bool no_families = false;
  std::string qgrid_spec;
  for (auto* sub : {scan->add_subcommand("bzi", "||BZI-w||_1 vs Delta*Lambda at q=1/2"),
                    scan->add_subcommand("ssi", "||SSI-w||_1 vs 5*Delta/min{q,1-q}")}) {
    sub->add_option("--samples", samples, "number of random games")->capture_default_str();
    sub->add_option("--seed", seed, "suite seed")->capture_default_str();
    sub->add_option("--nmax", nmax, "largest player count")->capture_default_str();
    sub->add_option("--nmin", nmin, "smallest player count")->capture_default_str();
    sub->add_option("--max-weight", max_weight, "weights drawn from 1..max")
        ->capture_default_str();
    sub->add_flag("--no-families", no_families, "skip the three paper families");
    sub->add_option("--family-n", scan_family_n, "family parameter")->capture_default_str();
    if (sub->get_name() == "ssi")
      sub->add_option("--qgrid", qgrid_spec, "comma-separated quotas in (0,1)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      try {
        return run_compute(game_path, index, format, render);
      } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
      }
    }
    if (*family) {
      if (*prop1) return run_family_prop(1, family_n, render);
      if (*prop2) return run_family_prop(2, family_n, render);
      return run_family_vnq(family_n, parse_rational(vnq_q), render);
    }
    if (*fcurve) return run_fcurve(fcurve_n, grid_spec, out_path, render);
    if (*scan) {
      if (*scan->get_subcommand("bzi")) {
        BziScanConfig config;
        config.samples = samples;
        config.seed = seed;
        config.n_min = nmin;
        config.n_max = nmax;
        config.max_weight = max_weight;
        config.include_families = !no_families;
        config.family_n = scan_family_n;
        return run_scan_bzi(config, render);
      }
      SsiScanConfig config;
      config.samples = samples;
      config.seed = seed;
      config.n_min = nmin;
      config.n_max = nmax;
      config.max_weight = max_weight;
      config.include_families = !no_families;
      config.family_n = scan_family_n;
      if (!qgrid_spec.empty()) {
        std::stringstream ss(qgrid_spec);
        std::string token;
        while (std::getline(ss, token, ',')) config.q_grid.push_back(parse_rational(token));
      }
      return run_scan_ssi(config, render);
    }
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
