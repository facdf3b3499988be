// Python bindings: exact values cross the boundary as fractions.Fraction
// (or int for swing counts); floats never enter or leave.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wvg/families.hpp"
#include "wvg/gamedoc.hpp"
#include "wvg/lemmas.hpp"
#include "wvg/nucleolus.hpp"

namespace py = pybind11;
using namespace wvg;

namespace {

py::object fraction_type() {
  return py::module_::import("fractions").attr("Fraction");
}

py::object to_fraction(const Rat& r) { return fraction_type()(fraction_string(r)); }

py::object to_pyint(const Int& z) {
  return py::module_::import("builtins").attr("int")(z.get_str());
}

py::list to_fraction_list(const std::vector<Rat>& values) {
  py::list out;
  for (const Rat& v : values) out.append(to_fraction(v));
  return out;
}

py::list to_int_list(const std::vector<Int>& values) {
  py::list out;
  for (const Int& v : values) out.append(to_pyint(v));
  return out;
}

Rat rat_from_py(py::handle h) {
  if (py::isinstance<py::int_>(h))
    return Rat(Int(py::str(h).cast<std::string>(), 10));
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    Int num(py::str(h.attr("numerator")).cast<std::string>(), 10);
    Int den(py::str(h.attr("denominator")).cast<std::string>(), 10);
    return make_rat(num, den);
  }
  throw py::type_error(
      "expected an int, a Fraction, or an exact 'p/q'/decimal string "
      "(floats are rejected: they are not exact)");
}

WeightVector weights_from_py(const py::sequence& seq) {
  WeightVector w;
  w.reserve(seq.size());
  for (py::handle h : seq) w.push_back(rat_from_py(h));
  return w;
}

WeightedGame game_from_py(py::handle quota, py::object weights, py::object classes) {
  if (weights.is_none() == classes.is_none())
    throw py::value_error("pass exactly one of weights= or classes=");
  Rat q = rat_from_py(quota);
  if (!weights.is_none())
    return WeightedGame::from_weights(q, weights_from_py(weights.cast<py::sequence>()));
  std::vector<RatClass> cls;
  for (py::handle item : classes.cast<py::sequence>()) {
    auto pair = item.cast<py::sequence>();
    if (pair.size() != 2) throw py::value_error("classes entries are (weight, count)");
    cls.push_back({rat_from_py(pair[0]), pair[1].cast<long>()});
  }
  return WeightedGame::make(q, cls);
}

py::dict bound_check_dict(const BoundCheck& b) {
  py::dict d;
  d["name"] = b.name;
  d["value"] = to_fraction(b.value);
  d["bound"] = to_fraction(b.bound);
  d["satisfied"] = b.satisfied;
  d["asserted"] = b.asserted;
  return d;
}

py::dict family_dict(const FamilyInstance& inst, const PowerVector& bzi) {
  py::dict d;
  d["family"] = inst.family;
  d["n"] = inst.n;
  d["players"] = inst.game.n();
  d["quota"] = to_pyint(inst.game.quota_int());
  d["relative_quota"] = to_fraction(inst.relative_quota);
  d["bzi_class_values"] = py::make_tuple(to_fraction(bzi.values.front()),
                                         to_fraction(bzi.values.back()));
  py::list bounds;
  for (const auto& b : inst.bounds) bounds.append(bound_check_dict(b));
  d["bounds"] = std::move(bounds);
  d["asserted_bounds_ok"] = inst.asserted_bounds_ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact voting-power computations for weighted games";

  py::register_exception<cap_error>(m, "CapError", PyExc_RuntimeError);

  py::class_<WeightedGame>(m, "Game")
      .def(py::init([](py::handle quota, py::object weights, py::object classes) {
             return game_from_py(quota, std::move(weights), std::move(classes));
           }),
           py::arg("quota"), py::arg("weights") = py::none(),
           py::arg("classes") = py::none())
      .def_property_readonly("n", &WeightedGame::n)
      .def_property_readonly("quota",
                             [](const WeightedGame& g) { return to_pyint(g.quota_int()); })
      .def_property_readonly(
          "total_weight",
          [](const WeightedGame& g) { return to_pyint(g.total_weight()); })
      .def_property_readonly(
          "relative_quota",
          [](const WeightedGame& g) { return to_fraction(g.relative_quota()); })
      .def("relative_weights",
           [](const WeightedGame& g) { return to_fraction_list(g.relative_weights()); })
      .def("is_winning",
           [](const WeightedGame& g, const std::vector<long>& coalition) {
             return g.is_winning(coalition);
           })
      .def("dual", [](const WeightedGame& g) { return dual_game(g); })
      .def("document",
           [](const WeightedGame& g) { return GameDocument::from_game(g).serialize(); })
      .def("__repr__", [](const WeightedGame& g) {
        return "Game(n=" + std::to_string(g.n()) + ", quota=" +
               g.quota_int().get_str() + "/" + g.total_weight().get_str() + ")";
      });

  m.def("parse_game", [](const std::string& text) {
    return GameDocument::parse(text).to_game();
  });

  m.def("banzhaf",
        [](const WeightedGame& g) { return to_fraction_list(banzhaf(g).values); });
  m.def("shapley_shubik", [](const WeightedGame& g) {
    return to_fraction_list(shapley_shubik(g).values);
  });
  m.def("nucleolus",
        [](const WeightedGame& g) { return to_fraction_list(nucleolus(g).values); });
  m.def("swing_counts", [](const WeightedGame& g) {
    auto eta = swing_counts(g);
    return py::make_tuple(to_int_list(eta.per_player), to_pyint(eta.total));
  });
  m.def("brute_force_banzhaf", [](const WeightedGame& g) {
    return to_fraction_list(brute_force_indices(g).banzhaf.values);
  });
  m.def("brute_force_shapley_shubik", [](const WeightedGame& g) {
    return to_fraction_list(brute_force_indices(g).shapley_shubik.values);
  });
  m.def("eta_one_big", [](long k, long m_players, long quota) {
    auto r = eta_one_big(k, m_players, quota);
    return py::make_tuple(to_pyint(r.eta_big), to_pyint(r.eta_small));
  });

  m.def("normalize", [](const py::sequence& w) {
    return to_fraction_list(normalize(weights_from_py(w)));
  });
  m.def("l1_distance", [](const py::sequence& x, const py::sequence& y) {
    return to_fraction(l1_distance(weights_from_py(x), weights_from_py(y)));
  });
  m.def("linf_distance", [](const py::sequence& x, const py::sequence& y) {
    return to_fraction(linf_distance(weights_from_py(x), weights_from_py(y)));
  });
  m.def("weight_stats", [](const py::sequence& w) {
    auto s = weight_stats(weights_from_py(w));
    py::dict d;
    d["delta"] = to_fraction(s.delta);
    d["lambda"] = to_fraction(s.lambda);
    d["laakso"] = to_fraction(s.laakso);
    d["alpha"] = to_fraction(s.alpha);
    return d;
  });
  m.def("check_lt_bounds", [](const py::sequence& w) {
    auto r = check_lt_bounds(weights_from_py(w));
    py::dict d;
    d["laakso"] = to_fraction(r.stats.laakso);
    d["chain"] = py::make_tuple(to_fraction(r.inv_delta), to_fraction(r.refined_lower),
                                to_fraction(r.stats.laakso), to_fraction(r.upper),
                                to_fraction(r.inv_delta_sq));
    d["all_ok"] = r.all_ok();
    return d;
  });

  m.def("prop1", [](long n) {
    auto r = prop1_instance(n);
    auto d = family_dict(r.instance, r.bzi);
    d["eta_big"] = to_pyint(r.eta_big);
    d["eta_small"] = to_pyint(r.eta_small);
    d["l1"] = to_fraction(r.deviation.l1);
    d["linf"] = to_fraction(r.deviation.linf);
    return d;
  });
  m.def("prop2", [](long n) {
    auto r = prop2_instance(n);
    auto d = family_dict(r.instance, r.bzi);
    d["eta_large"] = to_pyint(r.eta_large);
    d["eta_small"] = to_pyint(r.eta_small);
    d["l1"] = to_fraction(r.deviation.l1);
    return d;
  });
  m.def("vnq", [](long n, py::handle q) {
    auto r = vnq_instance(n, rat_from_py(q));
    py::dict d;
    d["n"] = n;
    d["q"] = to_fraction(r.point.q);
    d["quota"] = r.point.quota;
    d["f"] = to_fraction(r.point.f);
    d["bzi_class_values"] = py::make_tuple(to_fraction(r.bzi.values.front()),
                                           to_fraction(r.bzi.values.back()));
    return d;
  });
  m.def("vnq_eta_printed", [](long n, py::handle q) {
    auto r = vnq_eta_printed(n, rat_from_py(q));
    py::dict d;
    d["printed_quota"] = r.printed_quota;
    d["printed_eta_weight2"] = to_pyint(r.printed_eta_weight2);
    d["printed_eta_weight1"] = to_pyint(r.printed_eta_weight1);
    d["dp_eta_weight2"] = to_pyint(r.dp_eta_weight2);
    d["dp_eta_weight1"] = to_pyint(r.dp_eta_weight1);
    return d;
  });
  m.def("f_curve", [](long n, const py::sequence& grid) {
    std::vector<Rat> qs;
    for (py::handle h : grid) qs.push_back(rat_from_py(h));
    auto report = f_curve(n, std::move(qs));
    py::list points;
    for (const auto& p : report.points) {
      py::dict d;
      d["q"] = to_fraction(p.point.q);
      d["quota"] = p.point.quota;
      d["f"] = to_fraction(p.point.f);
      d["duality_ok"] = p.duality_ok;
      d["cand_cubic"] = to_fraction(p.cand_cubic);
      d["cand_entropy"] = to_fraction(p.cand_entropy);
      d["g"] = to_fraction(p.g);
      points.append(std::move(d));
    }
    py::dict d;
    d["n"] = report.n;
    d["points"] = std::move(points);
    d["nondecreasing_upper_half"] = report.nondecreasing_upper_half;
    d["duality_ok"] = report.duality_ok;
    return d;
  });
  m.def("analytic_curves", [](py::handle q, unsigned digits) {
    auto c = analytic_curves(rat_from_py(q), digits);
    py::dict d;
    d["g"] = to_fraction(c.g);
    d["g_tilde"] = to_fraction(c.g_tilde);
    d["entropy"] = to_fraction(c.entropy);
    d["cand_cubic"] = to_fraction(c.cand_cubic);
    d["cand_entropy"] = to_fraction(c.cand_entropy);
    d["q_le_g"] = c.q_le_g;
    d["g_le_107q"] = c.g_le_107q;
    return d;
  }, py::arg("q"), py::arg("digits") = kDefaultDecimalDigits);
  m.def("argmax_summand", [](long n, py::handle q) {
    auto r = argmax_summand(n, rat_from_py(q));
    py::dict d;
    d["i_star"] = r.i_star;
    d["n_times_g"] = to_fraction(r.n_times_g);
    d["relative_gap"] = to_fraction(r.relative_gap);
    return d;
  });

  m.def("random_game", [](long n, py::handle q, unsigned long long seed, long max_weight) {
    return random_game(n, rat_from_py(q), seed, UniformIntDist{max_weight});
  }, py::arg("n"), py::arg("q"), py::arg("seed"), py::arg("max_weight") = 20);

  m.def("bzi_scan",
        [](long samples, unsigned long long seed, long nmax, long nmin,
           bool include_families, long family_n) {
          BziScanConfig config;
          config.samples = samples;
          config.seed = seed;
          config.n_max = nmax;
          config.n_min = nmin;
          config.include_families = include_families;
          config.family_n = family_n;
          auto report = conjecture_bzi_scan(config);
          py::list rows;
          for (const auto& s : report.samples) {
            py::dict d;
            d["label"] = s.label;
            d["n"] = s.n;
            d["l1"] = to_fraction(s.l1);
            d["delta_lambda"] = to_fraction(s.delta_lambda);
            d["ratio"] = to_fraction(s.ratio);
            rows.append(std::move(d));
          }
          py::dict d;
          d["results"] = std::move(rows);
          d["max_ratio"] = to_fraction(report.max_ratio);
          return d;
        },
        py::arg("samples"), py::arg("seed"), py::arg("nmax") = 10, py::arg("nmin") = 2,
        py::arg("include_families") = false, py::arg("family_n") = 11);

  m.def("ssi_scan",
        [](long samples, unsigned long long seed, long nmax, long nmin,
           bool include_families, long family_n) {
          SsiScanConfig config;
          config.samples = samples;
          config.seed = seed;
          config.n_max = nmax;
          config.n_min = nmin;
          config.include_families = include_families;
          config.family_n = family_n;
          auto report = conjecture_ssi_scan(config);
          py::list rows;
          for (const auto& s : report.samples) {
            py::dict d;
            d["label"] = s.label;
            d["n"] = s.n;
            d["q"] = to_fraction(s.q);
            d["l1"] = to_fraction(s.l1);
            d["bound"] = to_fraction(s.bound);
            d["ratio"] = to_fraction(s.ratio);
            d["violated"] = s.violated;
            rows.append(std::move(d));
          }
          py::dict d;
          d["results"] = std::move(rows);
          d["max_ratio"] = to_fraction(report.max_ratio);
          d["violations"] = report.violations;
          return d;
        },
        py::arg("samples"), py::arg("seed"), py::arg("nmax") = 10, py::arg("nmin") = 2,
        py::arg("include_families") = false, py::arg("family_n") = 11);

  m.def("decimal_str", [](py::handle value, unsigned digits) {
    return decimal_string(rat_from_py(value), digits);
  }, py::arg("value"), py::arg("digits") = 12);

#ifdef WVG_VERSION
  m.attr("__version__") = WVG_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
