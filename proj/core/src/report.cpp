#include "sublab/report.hpp"

#include <exception>
#include <future>
#include <sstream>
#include <utility>

namespace sublab {

namespace {

Json groups_json(const std::vector<std::vector<std::size_t>>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back(g);
  return out;
}

Json strings_json(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

Json scenario_json(const ChainScenario& sc, const CatalogEntry& row,
                   const Fixture& fx) {
  Json j;
  j["fixture"] = fx.id;
  j["row"] = row.index;
  j["label"] = sc.label;
  j["note"] = sc.note;
  j["n"] = sc.n;
  j["ambient"] = sc.ambient;
  j["base"] = fx.base;
  j["expect"] = fx.expect;
  j["constructible"] = true;
  Json dims;
  dims["g"] = sc.g.dim();
  dims["k1"] = sc.k1.dim();
  dims["k2"] = sc.k2.dim();
  dims["h"] = sc.h.dim();
  if (sc.l) dims["l"] = sc.l->dim();
  dims["m"] = sc.m_total.size();
  dims["fiber"] = sc.fiber.size();
  dims["m2"] = sc.m2.size();
  j["dims"] = dims;
  return j;
}

Json metric_json(const MetricConstants& mc, const InducedMetric& metric,
                 const ChainScenario& sc, const Decomposition& dec,
                 const Fixture& fx) {
  Json j;
  Json lambdas = Json::array();
  Json ratios = Json::array();
  for (const auto& c : mc.constants) {
    lambdas.push_back(to_fraction_string(c.lambda));
    ratios.push_back(to_fraction_string(c.ratio));
  }
  j["lambdas"] = lambdas;
  j["ratios"] = ratios;
  j["all_proportional"] = mc.all_proportional;
  if (mc.witness) {
    Json w;
    w["summand"] = mc.witness->summand;
    w["i"] = mc.witness->i;
    w["j"] = mc.witness->j;
    w["got"] = to_fraction_string(mc.witness->got);
    w["expected"] = to_fraction_string(mc.witness->expected);
    j["mix_witness"] = w;
  } else {
    j["mix_witness"] = nullptr;
  }

  std::vector<RVec> all_rows;
  for (const auto& s : dec.summands)
    all_rows.insert(all_rows.end(), s.basis.begin(), s.basis.end());
  RationalMatrix gram = metric_gram(metric, all_rows);
  j["gram_det"] = to_fraction_string(gram_determinant(gram));
  j["positive_definite"] = is_positive_definite(gram);
  j["ad_invariant"] = is_ad_invariant(metric, sc.h_act, sc.m_total);

  Json checks = Json::array();
  bool ok_all = true;
  for (const auto& a : fx.constants) {
    Json c;
    c["summand"] = a.summand;
    std::string expected = to_fraction_string(a.ratio.eval(sc.n));
    c["expected"] = expected;
    if (a.summand == 0 || a.summand > mc.constants.size()) {
      c["got"] = nullptr;
      c["ok"] = false;
      ok_all = false;
    } else {
      std::string got =
          to_fraction_string(mc.constants[a.summand - 1].ratio);
      c["got"] = got;
      c["ok"] = (got == expected);
      if (got != expected) ok_all = false;
    }
    checks.push_back(c);
  }
  j["constant_checks"] = checks;
  j["constants_ok"] = ok_all;
  return j;
}

Json verdict_json(const SubmersionConditions& cond, const Fixture& fx) {
  Json j;
  j["is_riemannian_submersion"] = cond.holds;
  j["isotypic_match"] = cond.isotypic_match;
  j["fiber_clean"] = cond.fiber_clean;
  j["pairwise_consistent"] = cond.pairwise_consistent;
  j["q_dims"] = cond.q_dims;
  j["q_l_types"] = strings_json(cond.q_l_types);
  j["q_h_split"] = groups_json(cond.q_h_split);
  Json qh = Json::array();
  for (const auto& t : cond.q_h_types)
    qh.push_back(t ? Json(*t) : Json(nullptr));
  j["q_h_types"] = qh;
  j["fiber_dims"] = cond.fiber_dims;
  j["fiber_hom"] = groups_json(cond.fiber_hom);
  Json pairs = Json::array();
  for (const auto& p : cond.pairs) {
    Json e;
    e["i"] = p.i;
    e["j"] = p.j;
    e["hom_h"] = p.hom_h;
    e["hom_l"] = p.hom_l;
    e["consistent"] = p.consistent;
    pairs.push_back(e);
  }
  j["pairs"] = pairs;
  j["witnesses"] = strings_json(cond.witnesses);
  bool expected_holds = (fx.expect == "submersion");
  j["expected"] = fx.expect;
  j["matches_expectation"] = (cond.holds == expected_holds);
  return j;
}

}  // namespace

Json decomposition_json(const Decomposition& d) {
  Json j;
  j["dims"] = d.dims();
  Json types = Json::array();
  Json trivial = Json::array();
  Json certified = Json::array();
  for (const auto& s : d.summands) {
    types.push_back(s.type);
    trivial.push_back(s.trivial);
    certified.push_back(s.certified);
  }
  j["types"] = types;
  j["trivial"] = trivial;
  j["certified"] = certified;
  j["classes"] = groups_json(d.classes);
  j["commutant_dim"] = d.commutant_dim;
  j["commutant_sym_dim"] = d.commutant_sym_dim;
  j["fully_certified"] = d.fully_certified;
  Json fc;
  fc["ran"] = d.float_check.ran;
  fc["seed"] = d.float_check.seed;
  fc["reseeds"] = d.float_check.reseeds;
  fc["residual"] = d.float_check.residual;
  fc["cluster_dims"] = d.float_check.cluster_dims;
  j["float_check"] = fc;
  return j;
}

Json obstruction_json(const ObstructionResult& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["raw_gap"] = r.raw_gap;
  j["required_dim"] = r.required_dim;
  j["torus_rank"] = r.torus_rank;
  j["simple_factors"] = r.simple_factors;
  j["pi1"] = r.pi1.str();
  j["pi3"] = r.pi3.str();
  j["pi5"] = r.pi5.str();
  Json survivors = Json::array();
  for (const auto& c : r.survivors) {
    Json s;
    s["name"] = c.name;
    s["dim"] = c.dim;
    s["pi5"] = c.pi5.str();
    survivors.push_back(s);
  }
  j["survivors"] = survivors;
  j["reasons"] = strings_json(r.reasons);
  Json steps = Json::array();
  for (const auto& st : r.steps) {
    Json s;
    s["rule"] = st.rule;
    s["input"] = st.input;
    s["output"] = st.output;
    s["paper_anchor"] = st.anchor;
    steps.push_back(s);
  }
  j["steps"] = steps;
  return j;
}

Json framed_obstruction(const SpaceDescriptor& total,
                        const SpaceDescriptor& base) {
  Json inner = obstruction_json(obstruct_quotient(total, base));
  Json framed;
  framed["total"] = total.str();
  framed["base"] = base.str();
  for (auto it = inner.begin(); it != inner.end(); ++it)
    framed[it.key()] = *it;
  return framed;
}

SpaceDescriptor group_descriptor(const std::string& label, std::size_t n) {
  auto factors = parse_label(label);
  if (factors.size() != 1)
    throw InputError("group descriptor needs a single-factor label, got '" +
                     label + "'");
  const auto& f = factors[0];
  if (f.family != "so" && f.family != "su" && f.family != "sp")
    throw InputError("group descriptor supports so, su, sp only, got '" +
                     label + "'");
  long m = f.rank.eval(n);
  if (m <= 0)
    throw InputError("group descriptor '" + label + "' has size " +
                     std::to_string(m) + " at n = " + std::to_string(n));
  return SpaceDescriptor::group(f.family, static_cast<std::size_t>(m));
}

Json run_fixture(const CatalogEntry& row, const Fixture& fx, std::size_t n,
                 const DecomposeOptions& opt, const ReportSections& sections) {
  Json report;
  report["version"] = "1";

  bool build = fx.expect != "out-of-scope" &&
               (sections.decomposition || sections.metric || sections.verdict);
  if (build) {
    ChainScenario sc = build_scenario(row, n, fx.l);
    report["scenario"] = scenario_json(sc, row, fx);

    Decomposition dec;
    if (sections.decomposition || sections.metric) {
      dec = irreducible_decomposition(sc.h_act, sc.m_total, opt);
      report["decomposition"] = decomposition_json(dec);
    } else {
      report["decomposition"] = nullptr;
    }

    InducedMetric metric =
        induced_metric(so_dim(sc.ambient), sc.k1.coords());
    if (sections.metric) {
      MetricConstants mc = metric_constants(metric, dec);
      report["metric"] = metric_json(mc, metric, sc, dec, fx);
    } else {
      report["metric"] = nullptr;
    }

    if (sections.verdict && sc.l) {
      SubmersionConditions cond = check_submersion_conditions(
          sc.h_act, sc.l_act, sc.fiber, sc.m2, metric, opt);
      Json v = verdict_json(cond, fx);
      Json witness = nullptr;
      if (!cond.holds) {
        Decomposition qdec = irreducible_decomposition(sc.l_act, sc.m2, opt);
        for (std::size_t i = 0; i < qdec.summands.size() && witness.is_null();
             ++i)
          for (std::size_t j = i + 1; j < qdec.summands.size(); ++j) {
            auto hit = first_nonorthogonal_pair(metric, qdec.summands[i].basis,
                                                qdec.summands[j].basis);
            if (hit) {
              witness = Json{{"kind", "base-base"},
                             {"qi", i},
                             {"qj", j},
                             {"left", hit->left},
                             {"right", hit->right},
                             {"value", to_fraction_string(hit->value)}};
              break;
            }
          }
        if (witness.is_null()) {
          auto hit = first_nonorthogonal_pair(metric, sc.fiber, sc.m2);
          if (hit)
            witness = Json{{"kind", "fiber-base"},
                           {"left", hit->left},
                           {"right", hit->right},
                           {"value", to_fraction_string(hit->value)}};
        }
      }
      v["non_orthogonal_witness"] = witness;
      report["verdict"] = v;
    } else {
      report["verdict"] = nullptr;
    }
  } else {
    Json j;
    j["fixture"] = fx.id;
    j["row"] = row.index;
    j["label"] = row.g + "/" + row.k1;
    j["n"] = n;
    j["base"] = fx.base;
    j["expect"] = fx.expect;
    // constructible is only stated when the build was attempted or ruled out;
    // a skipped build leaves the key absent
    if (fx.expect == "out-of-scope") {
      j["constructible"] = false;
      std::string reason = "outside the embedding registry";
      try {
        build_scenario(row, n, fx.l);
        reason = "marked out of scope";
      } catch (const InputError& e) {
        reason = e.what();
      }
      j["reason"] = reason;
    }
    report["scenario"] = j;
    report["decomposition"] = nullptr;
    report["metric"] = nullptr;
    report["verdict"] = nullptr;
  }

  if (sections.obstruction && !fx.obstruct.empty()) {
    report["obstruction"] = framed_obstruction(group_descriptor(row.g, n),
                                               parse_space(fx.obstruct, n));
  } else {
    report["obstruction"] = nullptr;
  }
  return report;
}

Json sweep_fixture(const CatalogEntry& row, const Fixture& fx,
                   std::size_t n_min, std::size_t n_max,
                   const DecomposeOptions& opt, bool obstruct_only,
                   bool parallel) {
  if (n_min == 0 || n_min > n_max)
    throw InputError("sweep needs 1 <= n_min <= n_max, got " +
                     std::to_string(n_min) + ".." + std::to_string(n_max));
  Json out;
  out["version"] = "1";
  out["fixture"] = fx.id;
  out["row"] = row.index;
  out["n_min"] = n_min;
  out["n_max"] = n_max;
  out["obstruct_only"] = obstruct_only;

  ReportSections sections =
      obstruct_only ? ReportSections::obstruct_only() : ReportSections::full();

  auto run_one = [&](std::size_t n) -> std::pair<Json, std::string> {
    try {
      return {run_fixture(row, fx, n, opt, sections), ""};
    } catch (const std::exception& e) {
      return {Json(nullptr), e.what()};
    }
  };

  std::size_t count = n_max - n_min + 1;
  std::vector<std::pair<Json, std::string>> results(count);
  if (parallel && count > 1) {
    std::vector<std::future<std::pair<Json, std::string>>> futures;
    futures.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
      futures.push_back(std::async(std::launch::async, run_one, n_min + i));
    for (std::size_t i = 0; i < count; ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < count; ++i) results[i] = run_one(n_min + i);
  }

  const bool has_obstruct_range = fx.obstruct_n_min > 0;
  auto run_ok = [&](std::size_t n, const Json& rep) {
    if (rep.contains("scenario") && rep["scenario"].is_object() &&
        rep["scenario"].value("constructible", true) == false &&
        fx.expect != "out-of-scope")
      return false;
    if (rep.contains("verdict") && rep["verdict"].is_object() &&
        rep["verdict"].value("matches_expectation", true) == false)
      return false;
    if (rep.contains("metric") && rep["metric"].is_object()) {
      const Json& m = rep["metric"];
      if (m.value("constants_ok", true) == false) return false;
      if (m.value("positive_definite", true) == false) return false;
    }
    if (rep.contains("obstruction") && rep["obstruction"].is_object() &&
        has_obstruct_range && n >= fx.obstruct_n_min &&
        n <= fx.obstruct_n_max &&
        rep["obstruction"]["verdict"] != "certificate")
      return false;
    return true;
  };

  Json runs = Json::array();
  Json errors = Json::array();
  std::size_t certificates = 0, negatives = 0;
  bool all_ok = true;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = n_min + i;
    if (!results[i].second.empty()) {
      Json e;
      e["n"] = n;
      e["error"] = results[i].second;
      errors.push_back(e);
      all_ok = false;
      continue;
    }
    const Json& rep = results[i].first;
    Json entry;
    entry["n"] = n;
    entry["ok"] = run_ok(n, rep);
    entry["report"] = rep;
    if (entry["ok"] == false) all_ok = false;
    if (rep.contains("obstruction") && rep["obstruction"].is_object() &&
        rep["obstruction"]["verdict"] == "certificate")
      ++certificates;
    if (rep.contains("verdict") && rep["verdict"].is_object() &&
        rep["verdict"]["is_riemannian_submersion"] == false)
      ++negatives;
    runs.push_back(entry);
  }
  out["runs"] = runs;
  out["errors"] = errors;
  Json summary;
  summary["completed"] = runs.size();
  summary["failed"] = errors.size();
  summary["certificates"] = certificates;
  summary["negative_verdicts"] = negatives;
  summary["all_ok"] = all_ok;
  out["summary"] = summary;
  return out;
}

namespace {

void render_one(std::ostringstream& os, const Json& report) {
  if (report.contains("scenario") && report["scenario"].is_object()) {
    const Json& sc = report["scenario"];
    os << "scenario: " << sc.value("label", std::string("?"));
    if (sc.contains("n")) os << " at n = " << sc["n"];
    if (sc.contains("base") && sc["base"].is_string() &&
        !sc["base"].get<std::string>().empty())
      os << "  base " << sc["base"].get<std::string>();
    os << "\n";
    if (sc.contains("constructible") && sc["constructible"] == false) {
      os << "  not constructed: "
         << sc.value("reason", std::string("out of scope")) << "\n";
    } else if (sc.contains("dims")) {
      os << "  dims:";
      for (auto it = sc["dims"].begin(); it != sc["dims"].end(); ++it)
        os << " " << it.key() << "=" << it.value();
      os << "\n";
    }
  }
  if (report.contains("decomposition") &&
      report["decomposition"].is_object()) {
    const Json& d = report["decomposition"];
    os << "decomposition: dims " << d["dims"].dump() << " types "
       << d["types"].dump() << "\n";
    os << "  classes " << d["classes"].dump() << "  commutant dim "
       << d["commutant_dim"] << " (self-adjoint " << d["commutant_sym_dim"]
       << ")";
    if (d.value("fully_certified", false)) os << "  certified";
    os << "\n";
    const Json& fc = d["float_check"];
    if (fc.value("ran", false))
      os << "  float check: clusters " << fc["cluster_dims"].dump()
         << " residual " << fc["residual"] << " seed " << fc["seed"] << "\n";
  }
  if (report.contains("metric") && report["metric"].is_object()) {
    const Json& m = report["metric"];
    os << "metric: lambdas " << m["lambdas"].dump();
    os << (m.value("all_proportional", false) ? "  proportional"
                                              : "  mixed");
    os << "  pd=" << (m.value("positive_definite", false) ? "yes" : "no")
       << "\n";
    if (m.contains("mix_witness") && m["mix_witness"].is_object()) {
      const Json& w = m["mix_witness"];
      os << "  mix witness: summand " << w["summand"] << " pair ("
         << w["i"] << "," << w["j"] << ") got "
         << w["got"].get<std::string>() << " expected "
         << w["expected"].get<std::string>() << "\n";
    }
    if (m.contains("constant_checks") && !m["constant_checks"].empty()) {
      os << "  constant checks: "
         << (m.value("constants_ok", false) ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (report.contains("verdict") && report["verdict"].is_object()) {
    const Json& v = report["verdict"];
    bool holds = v.value("is_riemannian_submersion", false);
    os << "verdict: " << (holds ? "riemannian submersion" : "no submersion")
       << " (irreducible-match "
       << (v.value("isotypic_match", false) ? "yes" : "no") << ", fiber-clean "
       << (v.value("fiber_clean", false) ? "yes" : "no") << ", pairs "
       << (v.value("pairwise_consistent", false) ? "yes" : "no") << ")\n";
    if (v.contains("witnesses"))
      for (const auto& w : v["witnesses"])
        os << "  witness: " << w.get<std::string>() << "\n";
    if (v.contains("non_orthogonal_witness") &&
        v["non_orthogonal_witness"].is_object()) {
      const Json& w = v["non_orthogonal_witness"];
      os << "  non-orthogonal pair (" << w.value("kind", std::string("?"))
         << "): value " << w["value"].get<std::string>() << "\n";
    }
    if (v.contains("matches_expectation"))
      os << "  expectation (" << v.value("expected", std::string("?"))
         << "): " << (v["matches_expectation"] == true ? "match" : "MISMATCH")
         << "\n";
  }
  if (report.contains("obstruction") && report["obstruction"].is_object()) {
    const Json& o = report["obstruction"];
    os << "obstruction: " << o.value("verdict", std::string("?")) << " for "
       << o.value("total", std::string("?")) << " -> "
       << o.value("base", std::string("?")) << " (required dim "
       << o["required_dim"] << ")\n";
    if (o.contains("reasons"))
      for (const auto& r : o["reasons"])
        os << "  " << r.get<std::string>() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  if (report.contains("runs")) {
    os << "sweep " << report.value("fixture", std::string("?")) << " n in ["
       << report["n_min"] << ", " << report["n_max"] << "]\n";
    for (const auto& entry : report["runs"]) {
      os << "--- n = " << entry["n"] << "\n";
      render_one(os, entry["report"]);
    }
    for (const auto& e : report["errors"])
      os << "--- n = " << e["n"] << " failed: "
         << e["error"].get<std::string>() << "\n";
    const Json& s = report["summary"];
    os << "summary: " << s["completed"] << " completed, " << s["failed"]
       << " failed, " << s["certificates"] << " certificates, "
       << s["negative_verdicts"] << " negative verdicts, "
       << (s.value("all_ok", false) ? "all ok" : "NOT OK") << "\n";
  } else {
    render_one(os, report);
  }
  return os.str();
}

}  // namespace sublab
