#include "cyclecover_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "cyclecover/errors.hpp"
#include "cyclecover/oracle.hpp"
#include "cyclecover/weil.hpp"

namespace cyclecover::cli {

using nlohmann::json;

namespace {

long as_long(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return v.get<long>();
}

std::vector<long> as_long_list(const json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be a list of integers");
  std::vector<long> out;
  for (const auto& x : v) out.push_back(as_long(x, what));
  return out;
}

std::vector<std::vector<long>> parse_f(const json& v, int n) {
  if (!v.is_array() || v.empty()) throw InvalidInput("f must be a non-empty list");
  std::vector<std::vector<long>> out;
  for (const auto& c : v) {
    if (c.is_number_integer()) {
      std::vector<long> e(n, 0);
      e[0] = c.get<long>();
      out.push_back(e);
    } else {
      auto e = as_long_list(c, "f coefficient");
      if (static_cast<int>(e.size()) > n) throw InvalidInput("f coefficient longer than n");
      out.push_back(e);
    }
  }
  return out;
}

std::optional<BasisKind> parse_basis(const std::string& s) {
  if (s == "auto" || s.empty()) return std::nullopt;
  if (s == "b" || s == "B") return BasisKind::B;
  if (s == "bprime" || s == "B'" || s == "Bprime") return BasisKind::Bprime;
  throw InvalidInput("unknown basis '" + s + "'");
}

void apply_options(JobSpec& job, const json& o) {
  if (!o.is_object()) throw InvalidInput("options must be an object");
  if (o.contains("basis")) {
    if (!o["basis"].is_string()) throw InvalidInput("basis must be a string");
    job.basis = parse_basis(o["basis"].get<std::string>());
  }
  if (o.contains("guard_extra")) job.guard_extra = static_cast<int>(as_long(o["guard_extra"], "guard_extra"));
  if (o.contains("verify")) {
    if (!o["verify"].is_boolean()) throw InvalidInput("verify must be a boolean");
    job.verify = o["verify"].get<bool>();
  }
  if (o.contains("format")) {
    std::string f = o["format"].get<std::string>();
    if (f != "json" && f != "text") throw InvalidInput("format must be json or text");
    job.json = f == "json";
  }
  if (o.contains("threads")) job.threads = static_cast<int>(as_long(o["threads"], "threads"));
  if (o.contains("oracle_cap")) job.oracle_cap = static_cast<std::uint64_t>(as_long(o["oracle_cap"], "oracle_cap"));
  if (o.contains("seed")) job.seed = static_cast<std::uint64_t>(as_long(o["seed"], "seed"));
}

std::vector<std::string> to_strings(const std::vector<BigInt>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

void print_text(std::ostream& out, const json& rep) {
  out << "genus: " << rep["genus"].get<int>() << "\n";
  out << "delta: " << rep["delta"].get<int>() << "\n";
  out << "basis: " << rep["basis"].get<std::string>() << "\n";
  out << "N0: " << rep["N0"] << "  N: " << rep["N"] << "  W: " << rep["W"] << "\n";
  out << "field_poly: " << rep["field_poly"].dump() << "\n";
  out << "cycles: " << rep["cycles"].dump() << "\n";
  const auto& a = rep["weil_coefficients"];
  for (std::size_t i = 0; i < a.size(); ++i) out << "a_" << (i + 1) << " = " << a[i].get<std::string>() << "\n";
  out << "P(t) coefficients (low to high): ";
  bool first = true;
  for (const auto& c : rep["coefficients"]) {
    out << (first ? "" : " ") << c.get<std::string>();
    first = false;
  }
  out << "\n";
  out << "jacobian order: " << rep["jacobian_order"].get<std::string>() << "\n";
  if (!rep["verification"].is_null()) {
    const auto& m = rep["verification"]["match"];
    out << "oracle: " << (m.is_null() ? "skipped" : m.get<bool>() ? "match" : "MISMATCH") << "\n";
  }
  out << "timings:";
  for (auto it = rep["timings"].begin(); it != rep["timings"].end(); ++it)
    out << " " << it.key() << "=" << it.value().get<double>() << "s";
  out << "\n";
}

}  // namespace

JobSpec parse_job(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed job file: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("job must be an object");
  JobSpec job;
  try {
    for (const char* key : {"p", "r", "f"})
      if (!j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    job.p = as_long(j["p"], "p");
    job.n = j.contains("n") ? static_cast<int>(as_long(j["n"], "n")) : 1;
    if (job.n < 1) throw InvalidInput("n must be >= 1");
    job.r = static_cast<int>(as_long(j["r"], "r"));
    if (j.contains("field_poly") && !j["field_poly"].is_null()) job.field_poly = as_long_list(j["field_poly"], "field_poly");
    job.f = parse_f(j["f"], job.n);
    if (j.contains("options")) apply_options(job, j["options"]);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed job: ") + e.what());
  }
  return job;
}

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weil polynomials of cyclic covers y^r = f(x) over finite fields", "cyclecover"};
  std::string input, basis_flag, field_poly_flag, f_flag;
  std::optional<long> p_flag, n_flag, r_flag;
  std::optional<int> guard_flag, threads_flag;
  std::optional<std::uint64_t> cap_flag, seed_flag;
  bool verify = false, json_flag = false, text_flag = false;
  app.add_option("--input", input, "Job file (JSON)");
  app.add_option("--p", p_flag, "Characteristic");
  app.add_option("--n", n_flag, "Extension degree of F_q over F_p");
  app.add_option("--r", r_flag, "Cover degree");
  app.add_option("--field-poly", field_poly_flag, "F_q modulus as a JSON list, little-endian");
  app.add_option("--f", f_flag, "f as a JSON list, little-endian");
  app.add_option("--basis", basis_flag, "auto, b or bprime")->check(CLI::IsMember({"auto", "b", "bprime"}));
  app.add_option("--guard-extra", guard_flag, "Extra working digits");
  app.add_flag("--verify", verify, "Cross-check against naive point counting");
  app.add_option("--oracle-cap", cap_flag, "Largest q^g the oracle will enumerate");
  auto* jf = app.add_flag("--json", json_flag, "Structured output");
  auto* tf = app.add_flag("--text", text_flag, "Text output");
  jf->excludes(tf);
  app.add_option("--threads", threads_flag, "Worker threads");
  app.add_option("--seed", seed_flag, "Seed for the field modulus when absent");

  std::vector<std::string> args(args_in.rbegin(), args_in.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  JobSpec job;
  try {
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw InvalidInput("cannot read " + input);
      std::stringstream ss;
      ss << in.rdbuf();
      job = parse_job(ss.str());
    } else {
      if (!p_flag || !r_flag || f_flag.empty()) throw InvalidInput("need --input or --p, --r and --f");
      json j;
      j["p"] = *p_flag;
      j["n"] = n_flag.value_or(1);
      j["r"] = *r_flag;
      j["f"] = json::parse(f_flag);
      if (!field_poly_flag.empty()) j["field_poly"] = json::parse(field_poly_flag);
      job = parse_job(j.dump());
    }
    if (!basis_flag.empty()) job.basis = parse_basis(basis_flag);
    if (guard_flag) job.guard_extra = *guard_flag;
    if (verify) job.verify = true;
    if (cap_flag) job.oracle_cap = *cap_flag;
    if (json_flag) job.json = true;
    if (text_flag) job.json = false;
    if (threads_flag) job.threads = *threads_flag;
    if (seed_flag) job.seed = *seed_flag;
    if (job.threads < 1) throw InvalidInput("threads must be >= 1");
    if (job.guard_extra < 0) throw InvalidInput("guard-extra must be >= 0");
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }

  CurveData curve;
  curve.p = job.p;
  curve.n = job.n;
  curve.r = job.r;
  curve.f = job.f;
  try {
    if (!is_prime(job.p)) throw InvalidInput("p must be prime");
    if (job.r >= 2 && job.r % job.p == 0) throw CharacteristicDividesDegree("p divides r");
    curve.field_poly = job.field_poly ? *job.field_poly : random_irreducible(job.p, job.n, job.seed);
    curve = normalized_curve(curve);

    WeilOptions opts;
    opts.basis = job.basis;
    opts.guard_extra = job.guard_extra;
    opts.threads = job.threads;
    WeilResult res = weil_polynomial(curve, opts);
    const auto& dg = res.diag;

    json rep;
    rep["genus"] = dg.g;
    rep["delta"] = dg.delta;
    rep["basis"] = basis_name(dg.basis);
    rep["N0"] = dg.plan.N0;
    rep["N"] = dg.plan.N;
    rep["W"] = dg.plan.W;
    rep["cycles"] = dg.cycles.cycles;
    rep["field_poly"] = curve.field_poly;
    rep["weil_coefficients"] = to_strings(res.poly.a);
    rep["coefficients"] = to_strings(res.poly.coefficients());
    rep["jacobian_order"] = to_string(res.poly.jacobian_order());
    json timings = json::object();
    for (const auto& [name, secs] : dg.timings) timings[name] = secs;
    rep["timings"] = timings;
    rep["verification"] = nullptr;

    bool mismatch = false;
    if (job.verify && ipow(curve.q(), static_cast<unsigned long>(dg.g)) > BigInt(static_cast<unsigned long>(job.oracle_cap))) {
      rep["verification"] = {{"match", nullptr}, {"skipped", "q^g exceeds the oracle cap"}};
    } else if (job.verify) {
      WeilPolynomial oracle = oracle_weil_polynomial(curve, job.oracle_cap);
      mismatch = !(oracle == res.poly);
      rep["verification"] = {{"match", !mismatch}, {"oracle_weil_coefficients", to_strings(oracle.a)}};
    }
    if (job.json) out << rep.dump(2) << "\n";
    else print_text(out, rep);
    if (mismatch) {
      err << "error: oracle mismatch\n";
      return kOracleMismatch;
    }
    return kOk;
  } catch (const NotSquarefree& e) {
    err << "error: " << e.what() << "\n";
    return kNotSquarefree;
  } catch (const CharacteristicDividesDegree& e) {
    err << "error: " << e.what() << "\n";
    return kCharacteristicDividesDegree;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kPrecisionFailure;
  }
}

}  // namespace cyclecover::cli
