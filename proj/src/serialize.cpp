#include "radsupp/serialize.hpp"

#include <map>

namespace radsupp {

namespace {

Json header(const char* kind) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json strings(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json monomial_strings(const RingSpec& ring, const std::vector<Monomial>& monos) {
  Json out = Json::array();
  for (const auto& m : monos) out.push_back(to_string(ring, m));
  return out;
}

Monomial parse_monomial(const RingSpec& ring, const std::string& text) {
  const Polynomial p = parse_polynomial(ring, text);
  if (p.size() != 1 || p.terms()[0].coeff != 1) throw Error("expected a monomial, got '" + text + "'");
  return p.terms()[0].mono;
}

std::string scalar_string(const Scalar& s) { return s.get_str(); }

}  // namespace

Json to_json(const Support& support) {
  Json sets = Json::array();
  for (const auto& a : support.sets()) sets.push_back(a.members());
  return Json{{"n", support.n()}, {"sets", sets}};
}

Json to_json(const LabeledCycle& cycle) {
  Json vertices = Json::array();
  for (int v : cycle.vertices) vertices.push_back(v + 1);
  return Json{{"vertices", vertices}, {"labels", cycle.labels}};
}

Json to_json(const Support& support, const SupportVerdict& verdict) {
  Json j = header("verdict");
  j["support"] = to_json(support);
  j["radical_support"] = verdict.is_radical_support;
  if (verdict.forest) {
    Json inc = Json::array();
    for (auto [label, vertex] : verdict.forest->incidences) inc.push_back(Json{{"label", label}, {"vertex", vertex + 1}});
    j["forest"] = Json{{"incidences", inc}, {"components", verdict.forest->components}};
  }
  if (verdict.cycle) j["cycle"] = to_json(*verdict.cycle);
  return j;
}

Json to_json(const RingSpec& ring) { return Json{{"field", ring.field().tag()}, {"m", ring.m()}}; }

Json to_json(const RingSpec& ring, const TermOrder& order) {
  Json ranking = Json::array();
  for (int v : order.ranking()) ranking.push_back(ring.var_name(v));
  return Json{{"kind", order.kind() == TermOrder::Kind::Lex ? "lex" : "degrevlex"}, {"ranking", ranking}};
}

Json to_json(const IntPoly& k) {
  Json out = Json::array();
  for (const auto& [e, c] : k.terms()) out.push_back(Json{{"exponents", e}, {"coefficient", c}});
  return out;
}

Json to_json(const MonomialIdeal& ideal) { return ideal.gen_strings(); }

Json to_json(const WitnessVerification& v) {
  return Json{{"field", v.field},
              {"order", v.order},
              {"groebner_basis", v.groebner_basis},
              {"witness_normal_form", v.witness_normal_form},
              {"witness_outside", v.witness_outside},
              {"square_inside", v.square_inside},
              {"passed", v.passed()}};
}

Json to_json(const NonRadicalWitness& w) {
  Json j = header("witness");
  if (w.support) j["support"] = to_json(*w.support);
  j["ring"] = to_json(w.ring);
  j["order"] = to_json(w.ring, w.order);
  j["cycle"] = to_json(w.cycle);
  j["cycle_labels"] = w.cycle_labels;
  j["padding_labels"] = w.padding_labels;
  j["generators"] = strings(w.generators);
  Json degrees = Json::array();
  for (const auto& d : w.degrees) degrees.push_back(d.members());
  j["degrees"] = degrees;
  j["witness"] = to_string(w.ring, w.witness);
  j["verification"] = to_json(w.verification);
  return j;
}

Json to_json(const RegularSequenceCert& cert) {
  Json j = header("regular_sequence");
  j["support"] = to_json(cert.support);
  j["ring"] = to_json(cert.ring);
  Json degrees = Json::array();
  for (const auto& d : cert.degrees) degrees.push_back(d.members());
  j["degrees"] = degrees;
  j["monomials"] = monomial_strings(cert.ring, cert.monomials);
  j["squarefree"] = cert.squarefree;
  j["pairwise_coprime"] = cert.pairwise_coprime;
  j["degrees_match"] = cert.degrees_match;
  j["valid"] = cert.valid();
  return j;
}

Json to_json(const CSCertificate& cert) {
  Json j = header("cs_certificate");
  j["support"] = to_json(cert.support);
  j["e"] = to_json(cert.e);
  j["generator_count"] = cert.generator_count;
  j["expected_count"] = cert.expected_count;
  j["k_support"] = to_json(cert.k_support);
  j["k_dual_support"] = to_json(cert.k_dual_support);
  j["k_ideal"] = to_json(cert.k_ideal);
  j["k_ideal_text"] = cert.k_ideal.to_string();
  j["dual_matches"] = cert.dual_matches;
  j["identity_holds"] = cert.identity_holds;
  j["taylor_agrees"] = cert.taylor_agrees;
  j["exponent_bound_holds"] = cert.exponent_bound_holds;
  j["valid"] = cert.valid();
  return j;
}

Json to_json(const SupportTrial& trial) {
  Json j = header("trial");
  j["support"] = to_json(trial.support);
  j["m"] = trial.m;
  j["field"] = trial.field;
  j["seed"] = trial.seed;
  j["retries"] = trial.retries;
  j["generators"] = strings(trial.generators);
  Json attempts = Json::array();
  for (const auto& a : trial.brad.attempts) {
    Json blocks = Json::array();
    for (const auto& b : a.change.blocks()) {
      Json rows = Json::array();
      for (const auto& row : b) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(scalar_string(x));
        rows.push_back(r);
      }
      blocks.push_back(rows);
    }
    attempts.push_back(Json{{"seed", a.seed}, {"blocks", blocks}, {"initial", to_json(a.initial)}, {"in_brad", a.in_brad}});
  }
  j["attempts"] = attempts;
  j["status"] = trial.brad.in_brad() ? "in_brad" : "indeterminate";
  j["initial"] = to_json(trial.brad.initial);
  return j;
}

// ---------------------------------------------------------------------------

Support support_from_json(const Json& j) {
  std::vector<Multidegree> sets;
  for (const auto& s : j.at("sets")) sets.emplace_back(s.get<std::vector<int>>());
  return Support(j.at("n").get<int>(), std::move(sets));
}

RingSpec ring_from_json(const Json& j) {
  return RingSpec(j.at("m").get<std::vector<int>>(), Field::parse(j.at("field").get<std::string>()));
}

TermOrder order_from_json(const RingSpec& ring, const Json& j) {
  std::map<std::string, int> by_name;
  for (int v = 0; v < ring.num_vars(); ++v) by_name[ring.var_name(v)] = v;
  std::vector<int> ranking;
  for (const auto& name : j.at("ranking")) {
    auto it = by_name.find(name.get<std::string>());
    if (it == by_name.end()) throw Error("unknown variable in order: " + name.get<std::string>());
    ranking.push_back(it->second);
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "lex" && kind != "degrevlex") throw Error("unknown order kind: " + kind);
  return TermOrder::with_ranking(kind == "lex" ? TermOrder::Kind::Lex : TermOrder::Kind::DegRevLex,
                                 std::move(ranking));
}

namespace {

ReplayReport compare(std::string kind, const Json& stored, const Json& fresh) {
  ReplayReport r{std::move(kind), stored.dump() == fresh.dump(), {}};
  r.detail = r.reproduced ? "identical record" : "recomputed record differs";
  return r;
}

ReplayReport replay_witness(const Json& record) {
  // Independent of how the witness was built: rerun the membership checks
  // on the stored generators.
  const RingSpec ring = ring_from_json(record.at("ring"));
  const TermOrder order = order_from_json(ring, record.at("order"));
  std::vector<Polynomial> gens;
  for (const auto& g : record.at("generators")) gens.push_back(parse_polynomial(ring, g.get<std::string>()));
  const Monomial w = parse_monomial(ring, record.at("witness").get<std::string>());
  const WitnessVerification v = verify_witness(ring, order, gens, w);
  if (!v.passed()) return {"witness", false, "stored witness does not pass the normal-form checks"};
  if (to_json(v).dump() != record.at("verification").dump())
    return {"witness", false, "verification record differs from recomputation"};
  if (record.contains("support")) {
    const Support support = support_from_json(record.at("support"));
    LabeledCycle cycle;
    for (const auto& v1 : record.at("cycle").at("vertices")) cycle.vertices.push_back(v1.get<int>() - 1);
    cycle.labels = record.at("cycle").at("labels").get<std::vector<int>>();
    Json stored = record;
    if (stored.contains("reverification")) {
      for (const auto& entry : stored.at("reverification")) {
        const Field f = Field::parse(entry.at("field").get<std::string>());
        if (padded_witness(support, cycle, f).verification.passed() != entry.at("passed").get<bool>())
          return {"witness", false, "re-verification over " + f.tag() + " differs"};
      }
      stored.erase("reverification");
    }
    return compare("witness", stored, to_json(padded_witness(support, cycle, ring.field())));
  }
  return {"witness", true, "normal-form checks reproduced"};
}

}  // namespace

ReplayReport replay(const Json& record) {
  if (!record.is_object() || record.value("schema", "") != kSchemaVersion)
    throw Error(std::string("record is not tagged with schema ") + kSchemaVersion);
  const std::string kind = record.at("kind").get<std::string>();
  if (kind == "witness") return replay_witness(record);
  if (kind == "cs_certificate")
    return compare(kind, record, to_json(cs_certificate(support_from_json(record.at("support")))));
  if (kind == "regular_sequence") {
    return compare(kind, record,
                   to_json(regular_sequence(support_from_json(record.at("support")),
                                            record.at("ring").at("m").get<std::vector<int>>())));
  }
  if (kind == "trial") {
    const Support support = support_from_json(record.at("support"));
    SupportTrial t = random_support_trial(support, Field::parse(record.at("field").get<std::string>()),
                                          record.at("seed").get<std::uint64_t>(),
                                          record.at("m").get<std::vector<int>>(), record.at("retries").get<int>());
    return compare(kind, record, to_json(t));
  }
  if (kind == "verdict") {
    const Support support = support_from_json(record.at("support"));
    return compare(kind, record, to_json(support, is_radical_support(support)));
  }
  throw Error("unknown record kind: " + kind);
}

}  // namespace radsupp
