#include "entropia/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entropia/arith.hpp"
#include "entropia/entropy.hpp"
#include "entropia/laws.hpp"
#include "entropia/numfield.hpp"
#include "entropia/suites.hpp"

namespace entropia::cli {

namespace {

using nlohmann::json;

/// Bad command-line input; always exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(std::string(what) + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::uint64_t parse_at_least_2(const std::string& text, const char* what) {
  const auto v = parse_u64(text, what);
  if (v < 2 || v >= (1ULL << 63)) {
    throw UsageError(std::string(what) + " must satisfy 2 <= " + what + " < 2^63");
  }
  return v;
}

std::string text12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// Key/value lines with keys padded to a common width.
class TextTable {
 public:
  TextTable& add(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  TextTable& add(std::string key, double value) { return add(std::move(key), text12(value)); }
  TextTable& add(std::string key, std::uint64_t value) {
    return add(std::move(key), std::to_string(value));
  }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) {
      out << std::left << std::setw(static_cast<int>(width)) << k << " : " << v << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

struct Outcome {
  json inputs = json::object();
  json result = json::object();
  TextTable text;
  std::vector<std::string> extra_lines;
  bool violation = false;
};

Outcome cmd_entropy(const std::string& arg, std::size_t cap) {
  const auto n = parse_at_least_2(arg, "n");
  const auto r = entropy_report(n, cap);
  Outcome o;
  o.inputs = {{"n", n}};
  o.result = {{"n", r.n},
              {"factorization", factorize(n).to_string()},
              {"H", round12(r.H)},
              {"Hbar", round12(r.Hbar)},
              {"big_omega", r.big_omega},
              {"small_omega", r.small_omega},
              {"tau", r.tau},
              {"sigma", r.sigma},
              {"tau_e", r.tau_e},
              {"threshold", round12(r.threshold)}};
  o.text.add("n", r.n)
      .add("factorization", factorize(n).to_string())
      .add("H", r.H)
      .add("Hbar", r.Hbar)
      .add("Omega", r.big_omega)
      .add("omega", r.small_omega)
      .add("tau", r.tau)
      .add("sigma", r.sigma)
      .add("tau_e", r.tau_e)
      .add("threshold", r.threshold);
  return o;
}

Outcome cmd_edivisors(const std::string& arg, std::size_t cap) {
  const auto n = parse_at_least_2(arg, "n");
  const auto ds = exponential_divisors(factorize(n), cap);
  Outcome o;
  o.inputs = {{"n", n}};
  json values = json::array();
  std::string line;
  for (const auto& d : ds) {
    values.push_back(d.value());
    if (!line.empty()) line += ' ';
    line += std::to_string(d.value());
  }
  o.result = {{"n", n}, {"count", ds.size()}, {"divisors", values}};
  o.extra_lines.push_back(line);
  return o;
}

Outcome cmd_compare(const std::string& a, const std::string& b) {
  const auto m = parse_at_least_2(a, "m");
  const auto n = parse_at_least_2(b, "n");
  const auto r = product_entropy_gap(m, n);
  Outcome o;
  o.inputs = {{"m", m}, {"n", n}};
  o.result = {{"m", m},
              {"n", n},
              {"H_m", round12(r.h_m)},
              {"H_n", round12(r.h_n)},
              {"H_mn", round12(r.h_mn)},
              {"gap", round12(r.gap)},
              {"relation", to_string(r.relation)}};
  o.text.add("m", m)
      .add("n", n)
      .add("H(m)", r.h_m)
      .add("H(n)", r.h_n)
      .add("H(mn)", r.h_mn)
      .add("gap", r.gap)
      .add("relation", std::string(to_string(r.relation)));
  return o;
}

Outcome cmd_ideal(const std::string& field_text, const std::string& p_text) {
  const auto field = FieldSpec::parse(field_text);
  const auto p = parse_u64(p_text, "p");
  const auto sp = split_prime(field, p);
  Outcome o;
  o.inputs = {{"field", field_text}, {"p", p}};
  json pattern = json::array();
  for (const auto& f : sp.factors()) pattern.push_back({{"e", f.e}, {"f", f.f}});
  o.result = {{"field", field.to_string()},
              {"degree", field.degree()},
              {"p", p},
              {"g", sp.g()},
              {"pattern", pattern},
              {"H", round12(ideal_entropy(sp))},
              {"tau", ideal_tau(sp)},
              {"tau_e", ideal_tau_e(sp)}};
  o.text.add("field", field.to_string())
      .add("degree", std::uint64_t{field.degree()})
      .add("p", p)
      .add("g", std::uint64_t{sp.g()})
      .add("pattern", sp.to_string())
      .add("H", ideal_entropy(sp))
      .add("tau", ideal_tau(sp))
      .add("tau_e", ideal_tau_e(sp));
  return o;
}

json scan_json(const ScanSummary& s) {
  json violations = json::array();
  for (const auto& v : s.violations) {
    violations.push_back({{"law", v.law},
                          {"m", v.m},
                          {"n", v.n},
                          {"gap", round12(v.gap)},
                          {"expected", to_string(v.expected)}});
  }
  auto witness = [](const ScanWitness& w) {
    return json{{"m", w.m}, {"n", w.n}, {"gap", round12(w.gap)}};
  };
  return {{"max_m", s.max_m},
          {"max_n", s.max_n},
          {"pairs", s.pairs},
          {"less", s.less},
          {"equal", s.equal},
          {"greater", s.greater},
          {"most_negative", witness(s.most_negative)},
          {"most_positive", witness(s.most_positive)},
          {"shape_checks", s.shape_checks},
          {"violation_count", s.violation_count},
          {"violations", violations}};
}

Outcome cmd_verify(const std::string& suite, std::optional<std::uint64_t> max,
                   std::uint64_t seed, std::size_t cap) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  SuiteOptions options;
  options.max = max;
  options.seed = seed;
  options.cap = cap;
  const auto r = run_suite(suite, options);

  Outcome o;
  o.inputs = {{"suite", suite}, {"seed", seed}};
  if (max) o.inputs["max"] = *max;
  json metrics = json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = round12(v);
  o.result = {{"suite", r.name},
              {"max", r.max},
              {"seed", r.seed},
              {"checked", r.checked},
              {"violation_count", r.violation_count},
              {"violations", r.violations},
              {"metrics", metrics}};
  if (r.scan) o.result["scan"] = scan_json(*r.scan);
  o.violation = !r.ok();

  o.text.add("suite", r.name).add("max", r.max).add("seed", r.seed).add("checked", r.checked);
  for (const auto& [k, v] : r.metrics) o.text.add(k, v);
  if (r.scan) {
    o.text.add("pairs", r.scan->pairs)
        .add("less", r.scan->less)
        .add("equal", r.scan->equal)
        .add("greater", r.scan->greater)
        .add("most_negative", "m=" + std::to_string(r.scan->most_negative.m) + " n=" +
                                  std::to_string(r.scan->most_negative.n) + " gap=" +
                                  text12(r.scan->most_negative.gap))
        .add("most_positive", "m=" + std::to_string(r.scan->most_positive.m) + " n=" +
                                  std::to_string(r.scan->most_positive.n) + " gap=" +
                                  text12(r.scan->most_positive.gap));
  }
  o.text.add("violations", r.violation_count);
  o.text.add("status", std::string(r.ok() ? "ok" : "violation"));
  for (const auto& v : r.violations) o.extra_lines.push_back("  " + v);
  return o;
}

std::size_t cap_from_env() {
  const char* env = std::getenv("ENTROPIA_MAX_DIVISORS");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  const auto v = parse_u64(env, "ENTROPIA_MAX_DIVISORS");
  if (v == 0) throw UsageError("ENTROPIA_MAX_DIVISORS must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace

double round12(double x) {
  if (x == 0.0) return 0.0;  // folds -0.0
  if (!std::isfinite(x)) return x;
  return std::strtod(text12(x).c_str(), nullptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropies of integers and of ideals pO_K, with law checkers", "entropia"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the JSON envelope");

  std::string n_arg, m_arg, field_arg, p_arg, suite_arg;
  std::optional<std::uint64_t> max_opt;
  std::uint64_t seed = 0;

  auto* entropy = app.add_subcommand("entropy", "H, Hbar and arithmetic functions of n");
  entropy->add_option("n", n_arg)->required();
  auto* edivisors = app.add_subcommand("edivisors", "Exponential divisors of n");
  edivisors->add_option("n", n_arg)->required();
  auto* compare = app.add_subcommand("compare", "Compare H(mn) with H(m) + H(n)");
  compare->add_option("m", m_arg)->required();
  compare->add_option("n", n_arg)->required();
  auto* ideal = app.add_subcommand("ideal", "Splitting of p in a field and H(pO_K)");
  ideal->add_option("field", field_arg, "quad:<d> | cyclo:<l> | cubic:<m>")->required();
  ideal->add_option("p", p_arg)->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite_arg)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max", max_opt, "Suite range bound");
  verify->add_option("--seed", seed, "Seed for randomized suites");
  for (auto* sub : {entropy, edivisors, compare, ideal, verify}) {
    sub->add_flag("--json", as_json, "Emit the JSON envelope");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome outcome;
  std::string error;
  try {
    const auto cap = cap_from_env();
    if (command == "entropy") outcome = cmd_entropy(n_arg, cap);
    else if (command == "edivisors") outcome = cmd_edivisors(n_arg, cap);
    else if (command == "compare") outcome = cmd_compare(m_arg, n_arg);
    else if (command == "ideal") outcome = cmd_ideal(field_arg, p_arg);
    else outcome = cmd_verify(suite_arg, max_opt, seed, cap);
  } catch (const std::exception& e) {
    // Domain, range, usage and unsupported-case errors all map to exit 2.
    error = e.what();
  }

  if (!error.empty()) {
    if (outcome.inputs.empty()) outcome.inputs = {{"args", args}};
    if (as_json) {
      json envelope = {{"command", command},
                       {"inputs", outcome.inputs},
                       {"result", {{"message", error}}},
                       {"status", "error"}};
      out << envelope.dump() << '\n';
    }
    err << "error: " << error << '\n';
    return kUsage;
  }

  const char* status = outcome.violation ? "violation" : "ok";
  if (as_json) {
    json envelope = {{"command", command},
                     {"inputs", outcome.inputs},
                     {"result", outcome.result},
                     {"status", status}};
    out << envelope.dump() << '\n';
  } else {
    outcome.text.print(out);
    for (const auto& line : outcome.extra_lines) out << line << '\n';
  }
  return outcome.violation ? kViolation : kOk;
}

}  // namespace entropia::cli
