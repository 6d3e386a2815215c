#include "radsupp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "radsupp/sweep.hpp"

namespace radsupp {

std::string CommandResult::output() const {
  if (json && !payload.is_null()) return payload.dump(2) + "\n";
  return text;
}

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Input {
  std::string positional;
  std::string file;
  std::optional<int> n;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("support", in.positional, "support text \"1 2; 2 3\" or JSON {\"n\":..,\"sets\":..}");
  cmd->add_option("--file", in.file, "read the input from a file");
  cmd->add_option("--n", in.n, "number of labels (text input only; default: largest label)")->check(CLI::PositiveNumber);
}

std::string read_input(const Input& in) {
  if (!in.positional.empty() && !in.file.empty()) throw Error("give the input either positionally or with --file, not both");
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw Error("cannot read " + in.file);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  if (in.positional.empty()) throw Error("missing input");
  return in.positional;
}

Support load_support(const Input& in) { return parse_support(read_input(in), in.n); }

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + std::to_string(xs[k]);
  return out;
}

std::string describe_cycle(const LabeledCycle& c) {
  std::vector<int> vertices;
  for (int v : c.vertices) vertices.push_back(v + 1);
  return "vertices " + join(vertices) + ", labels " + join(c.labels);
}

CommandResult make(Status status, Json payload, std::string text) {
  CommandResult r;
  r.status = status;
  r.payload = std::move(payload);
  r.text = std::move(text);
  return r;
}

CommandResult cmd_check(const Support& s) {
  const SupportVerdict v = is_radical_support(s);
  std::string text;
  if (v.is_radical_support) {
    text = "radical support\nincidence forest: " + std::to_string(v.forest->incidences.size()) + " incidences, " +
           std::to_string(v.forest->components) + " components\n";
  } else {
    text = "not a radical support\ncycle with distinct labels: " + describe_cycle(*v.cycle) + "\n";
  }
  return make(v.is_radical_support ? Status::Ok : Status::NotRadicalSupport, to_json(s, v), text);
}

CommandResult cmd_witness(const Support& s, const Field& field, const std::vector<std::string>& verify_fields) {
  const SupportVerdict v = is_radical_support(s);
  if (v.is_radical_support) throw Error("no witness exists: the input is a radical support");
  const NonRadicalWitness w = padded_witness(s, *v.cycle, field);
  Json payload = to_json(w);
  std::ostringstream text;
  text << "cycle: " << describe_cycle(w.cycle) << "\n";
  text << "ring: m = (" << join(w.ring.m(), ",") << ") over " << w.ring.field().tag() << "\n";
  text << "order: " << w.verification.order << "\n";
  text << "generators:\n";
  for (const auto& g : w.generators) text << "  " << g.to_string() << "\n";
  text << "witness: " << to_string(w.ring, w.witness) << "\n";
  text << "normal form of witness: " << w.verification.witness_normal_form << "\n";
  text << "witness square in ideal: " << (w.verification.square_inside ? "yes" : "no") << "\n";
  if (!verify_fields.empty()) {
    Json again = Json::array();
    for (const auto& tag : verify_fields) {
      const Field f = Field::parse(tag);
      const bool ok = padded_witness(s, *v.cycle, f).verification.passed();
      again.push_back(Json{{"field", f.tag()}, {"passed", ok}});
      text << "re-verified over " << f.tag() << ": " << (ok ? "passed" : "FAILED") << "\n";
    }
    payload["reverification"] = again;
  }
  return make(Status::Ok, payload, text.str());
}

CommandResult cmd_regseq(const Support& s, const std::vector<int>& m_flag) {
  const std::vector<int> m = m_flag.empty() ? min_ring_dims(s) : m_flag;
  const RegularSequenceCert cert = regular_sequence(s, m);
  std::ostringstream text;
  text << "ring: m = (" << join(m, ",") << ")\n";
  for (std::size_t v = 0; v < cert.monomials.size(); ++v)
    text << "  f" << v + 1 << " = " << to_string(cert.ring, cert.monomials[v]) << "  degree {" << join(s[v].members())
         << "}\n";
  text << "squarefree, pairwise coprime, degrees match: " << (cert.valid() ? "yes" : "no") << "\n";
  return make(cert.valid() ? Status::Ok : Status::Error, to_json(cert), text.str());
}

CommandResult cmd_cs_cert(const Support& s) {
  const SupportVerdict v = is_radical_support(s);
  if (!v.is_radical_support) {
    CommandResult r = cmd_check(s);
    r.diagnostics = "no Cartwright-Sturmfels certificate: the input is not a radical support\n";
    return r;
  }
  const CSCertificate cert = cs_certificate(s);
  std::ostringstream text;
  text << "E = " << cert.e.to_string() << "\n";
  text << "minimal generators: " << cert.generator_count << " (expected " << cert.expected_count << ")\n";
  text << "K-polynomial of E: " << cert.k_ideal.to_string() << "\n";
  text << "dual K-polynomial of the support: " << cert.k_dual_support.to_string() << "\n";
  text << "identity holds: " << (cert.identity_holds ? "yes" : "no") << "\n";
  text << "certificate valid: " << (cert.valid() ? "yes" : "no") << "\n";
  return make(cert.valid() ? Status::Ok : Status::Error, to_json(cert), text.str());
}

CommandResult cmd_trial(const Support& s, const Field& field, std::uint64_t seed, int retries,
                        const std::vector<int>& m_flag) {
  std::optional<std::vector<int>> m;
  if (!m_flag.empty()) m = m_flag;
  const SupportTrial t = random_support_trial(s, field, seed, m, retries);
  std::ostringstream text;
  text << "seed " << seed << ", field " << t.field << ", m = (" << join(t.m, ",") << ")\n";
  for (std::size_t a = 0; a < t.brad.attempts.size(); ++a)
    text << "attempt " << a + 1 << " (seed " << t.brad.attempts[a].seed
         << "): initial ideal " << (t.brad.attempts[a].in_brad ? "in Brad" : "not in Brad") << "\n";
  text << "initial ideal: " << t.brad.initial.to_string() << "\n";
  text << (t.brad.in_brad() ? "radical (initial ideal in Brad)\n" : "indeterminate\n");
  return make(t.brad.in_brad() ? Status::Ok : Status::Indeterminate, to_json(t), text.str());
}

CommandResult cmd_selftest(const SelftestConfig& config) {
  const auto results = run_selftest(config);
  Json suites = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    suites.push_back(Json{{"name", r.name},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"passed", r.passed()},
                          {"counterexamples", r.counterexamples}});
    text << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (!r.passed()) text << ", " << r.failures << " failures";
    text << ")\n";
    for (const auto& c : r.counterexamples) text << "    " << c << "\n";
  }
  Json payload;
  payload["schema"] = kSchemaVersion;
  payload["kind"] = "selftest";
  payload["config"] = Json{{"max_s", config.max_s},
                           {"max_n", config.max_n},
                           {"seed", config.seed},
                           {"trials", config.trials},
                           {"parallel", config.exec == Exec::Parallel}};
  payload["suites"] = suites;
  payload["passed"] = all;
  return make(all ? Status::Ok : Status::NotRadicalSupport, payload, text.str());
}

CommandResult cmd_verify(const Input& in) {
  Json record;
  try {
    record = Json::parse(read_input(in));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  const ReplayReport rep = replay(record);
  Json payload;
  payload["schema"] = kSchemaVersion;
  payload["kind"] = "replay";
  payload["record_kind"] = rep.kind;
  payload["reproduced"] = rep.reproduced;
  payload["detail"] = rep.detail;
  return make(rep.reproduced ? Status::Ok : Status::NotRadicalSupport, payload,
              rep.kind + ": " + (rep.reproduced ? "reproduced" : "NOT reproduced") + " (" + rep.detail + ")\n");
}

CommandResult failure(const std::string& message) {
  CommandResult r;
  r.status = Status::Error;
  r.payload = Json{{"schema", kSchemaVersion}, {"kind", "error"}, {"message", message}};
  r.diagnostics = "error: " + message + "\n";
  return r;
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Radical support checks with verifiable certificates", "radsupp"};
  app.require_subcommand(1);

  bool json = false;
  Input in;
  std::string field_tag;
  std::vector<std::string> verify_fields;
  std::vector<int> m;
  std::uint64_t seed = kDefaultSeed;
  int retries = kDefaultRetries;
  SelftestConfig config;
  bool serial = false;

  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", json, "print the structured record"); };

  auto* check = app.add_subcommand("check", "decide whether the input is a radical support");
  add_input(check, in);
  json_flag(check);

  auto* witness = app.add_subcommand("witness", "non-radical witness ideal for a failing support");
  add_input(witness, in);
  witness->add_option("--field", field_tag, "QQ, F2 or Fp:<p> (default QQ)");
  witness->add_option("--verify-fields", verify_fields, "extra fields to re-verify in")->delimiter(',');
  json_flag(witness);

  auto* regseq = app.add_subcommand("regseq", "monomial regular sequence of the given degrees");
  add_input(regseq, in);
  regseq->add_option("--m", m, "ring dimensions, comma separated (default: minimal)")->delimiter(',');
  json_flag(regseq);

  auto* cscert = app.add_subcommand("cs-cert", "Cartwright-Sturmfels certificate for a radical support");
  add_input(cscert, in);
  json_flag(cscert);

  auto* trial = app.add_subcommand("trial", "random forms of the given degrees and the randomized Brad test");
  add_input(trial, in);
  trial->add_option("--field", field_tag, "QQ, F2 or Fp:<p> (default Fp:32003)");
  trial->add_option("--seed", seed, "random seed");
  trial->add_option("--retries", retries, "coordinate changes to try")->check(CLI::PositiveNumber);
  trial->add_option("--m", m, "ring dimensions, comma separated (default: minimal)")->delimiter(',');
  json_flag(trial);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--max-s", config.max_s, "largest corpus collection size")->check(CLI::Range(1, 6));
  selftest->add_option("--max-n", config.max_n, "number of labels in the corpus")->check(CLI::Range(1, 6));
  selftest->add_option("--seed", seed, "seed for the randomized suites");
  selftest->add_option("--trials", config.trials, "cases per randomized suite")->check(CLI::NonNegativeNumber);
  selftest->add_flag("--serial", serial, "use the serial reference loop");
  json_flag(selftest);

  auto* verify = app.add_subcommand("verify", "replay a stored record and compare");
  verify->add_option("record", in.positional, "JSON record");
  verify->add_option("--file", in.file, "read the record from a file");
  json_flag(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    const auto chosen = app.get_subcommands();
    r.text = chosen.empty() ? app.help() : chosen.front()->help();
    return r;
  } catch (const CLI::ParseError& e) {
    return failure(e.what());
  }

  CommandResult result;
  try {
    if (check->parsed()) {
      result = cmd_check(load_support(in));
    } else if (witness->parsed()) {
      result = cmd_witness(load_support(in), Field::parse(field_tag.empty() ? "QQ" : field_tag), verify_fields);
    } else if (regseq->parsed()) {
      result = cmd_regseq(load_support(in), m);
    } else if (cscert->parsed()) {
      result = cmd_cs_cert(load_support(in));
    } else if (trial->parsed()) {
      const Field f = Field::parse(field_tag.empty() ? "Fp:" + std::to_string(kDefaultPrime) : field_tag);
      result = cmd_trial(load_support(in), f, seed, retries, m);
      if (!trial->count("--seed")) result.diagnostics += "using default seed " + std::to_string(seed) + "\n";
    } else if (selftest->parsed()) {
      config.seed = seed;
      config.exec = serial ? Exec::Serial : Exec::Parallel;
      result = cmd_selftest(config);
      if (!selftest->count("--seed")) result.diagnostics += "using default seed " + std::to_string(seed) + "\n";
    } else if (verify->parsed()) {
      result = cmd_verify(in);
    }
  } catch (const CountingConditionError& e) {
    result = failure(e.what());
    result.payload["label"] = e.label();
  } catch (const std::exception& e) {
    result = failure(e.what());
  }
  result.json = json;
  return result;
}

}  // namespace radsupp
