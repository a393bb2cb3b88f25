// Command-line front end. Links only the C interface.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasket/gasket.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// A failed library call. Bad input maps to the usage exit code.
struct CallError : std::runtime_error {
  gasket_status status;
  CallError(gasket_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(gasket_status s) {
  if (s != GASKET_OK) {
    std::string msg = gasket_status_string(s);
    const std::string detail = gasket_last_error();
    if (!detail.empty()) msg += ": " + detail;
    throw CallError(s, msg);
  }
}

int exit_code_of(gasket_status s) {
  switch (s) {
    case GASKET_E_INVALID_ARGUMENT:
    case GASKET_E_PARSE:
    case GASKET_E_CAP_EXCEEDED:
    case GASKET_E_NOT_PRIMITIVE:
    case GASKET_E_NOT_PARRY_VALID:
    case GASKET_E_ZERO_SEQUENCE:
    case GASKET_E_LAST_DIGIT_MISMATCH:
    case GASKET_E_BAD_BLOCK:
    case GASKET_E_NO_ROOT_IN_RANGE:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

// Takes ownership of a library string; NULL becomes nullopt.
std::optional<std::string> take(char* p) {
  if (!p) return std::nullopt;
  std::string s(p);
  gasket_string_free(p);
  return s;
}

using Config = std::unique_ptr<gasket_config, decltype(&gasket_config_free)>;
using Real = std::unique_ptr<gasket_real, decltype(&gasket_real_free)>;
using Record = std::unique_ptr<gasket_record, decltype(&gasket_record_free)>;
using ReportPtr = std::unique_ptr<gasket_report, decltype(&gasket_report_free)>;

struct Options {
  int digits = 6;
  int kmax = 0;
  std::string csv;
  unsigned jobs = 1;
  std::string quotient = "on";
};

Config make_config(const Options& o) {
  gasket_config* c = nullptr;
  check(gasket_config_new(&c));
  Config cfg(c, gasket_config_free);
  check(gasket_config_set_jobs(c, o.jobs));
  check(gasket_config_set_quotient_symmetry(c, o.quotient == "on"));
  return cfg;
}

Record closed_form(std::uint64_t k) {
  gasket_record* r = nullptr;
  check(gasket_beta_closed_form(k, &r));
  return Record(r, gasket_record_free);
}

std::string record_delta(const gasket_record* r) {
  char* s = nullptr;
  check(gasket_record_delta(r, &s));
  return *take(s);
}

std::string record_decimal(const gasket_record* r, int digits) {
  int sentinel = 0;
  check(gasket_record_is_sentinel(r, &sentinel));
  if (sentinel) return "1";
  char* s = nullptr;
  check(gasket_record_decimal(r, digits, &s));
  return *take(s);
}

std::string real_decimal(const gasket_real* x, int digits) {
  char* s = nullptr;
  check(gasket_real_decimal(x, digits, &s));
  return *take(s);
}

Real named(const char* name, int n) {
  gasket_real* x = nullptr;
  check(gasket_real_named(name, n, &x));
  return Real(x, gasket_real_free);
}

// Lets "(01)" stand for "(01)^inf" on the command line.
std::string with_tail(std::string s) {
  if (!s.empty() && s.back() == ')') s += "^inf";
  return s;
}

// "beta_a", "beta_star", "rho:N", "hat_beta:N", "k:N" (beta_k), a quasi-greedy
// sequence containing '(', or a rational such as 18/11 or 1.6.
Real parse_base(const std::string& text) {
  gasket_real* x = nullptr;
  const auto colon = text.find(':');
  if (text == "beta_a" || text == "beta_star") return named(text.c_str(), 0);
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw CallError(GASKET_E_PARSE, "bad index in '" + text + "'");
    }
    if (head == "k") {
      const Record r = closed_form(static_cast<std::uint64_t>(n < 0 ? 0 : n));
      check(gasket_record_value(r.get(), &x));
      return Real(x, gasket_real_free);
    }
    return named(head.c_str(), n);
  }
  if (text.find('(') != std::string::npos) {
    check(gasket_real_from_sequence(with_tail(text).c_str(), &x));
  } else {
    check(gasket_real_from_rational(text.c_str(), &x));
  }
  return Real(x, gasket_real_free);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CallError(GASKET_E_INVALID_ARGUMENT, "cannot write '" + path + "'");
  f << text;
  if (!f) throw CallError(GASKET_E_INTERNAL, "write failed for '" + path + "'");
}

int cmd_delta(std::uint64_t k, const Options& o) {
  const std::uint64_t hi = o.kmax > 0 ? static_cast<std::uint64_t>(o.kmax) : k;
  std::string out;
  for (std::uint64_t i = k; i <= hi; ++i) {
    const Record r = closed_form(i);
    out += (hi > k ? std::to_string(i) + " " : "") + record_delta(r.get()) + "\n";
  }
  emit(out, o.csv);
  return kExitOk;
}

int cmd_beta(std::uint64_t k, const Options& o) {
  const std::uint64_t hi = o.kmax > 0 ? static_cast<std::uint64_t>(o.kmax) : k;
  if (!o.csv.empty()) {
    std::string out = "k,delta,beta_k,provenance\n";
    for (std::uint64_t i = k; i <= hi; ++i) {
      const Record r = closed_form(i);
      out += std::to_string(i) + "," + record_delta(r.get()) + "," + record_decimal(r.get(), o.digits) + ",closed-form\n";
    }
    emit(out, o.csv);
    return kExitOk;
  }
  for (std::uint64_t i = k; i <= hi; ++i) {
    const Record r = closed_form(i);
    std::cout << (hi > k ? std::to_string(i) + " " : "") << record_decimal(r.get(), o.digits) << "\n";
  }
  return kExitOk;
}

int cmd_oracle(int k, std::uint64_t budget, const Options& o) {
  const Config cfg = make_config(o);
  gasket_record* raw = nullptr;
  check(gasket_beta_oracle(cfg.get(), k, budget, &raw));
  const Record r(raw, gasket_record_free);
  const Record cf = closed_form(static_cast<std::uint64_t>(k));
  const std::string delta = record_delta(r.get()), expected = record_delta(cf.get());
  char* w = nullptr;
  check(gasket_record_witness(r.get(), &w));
  const std::optional<std::string> witness = take(w);
  std::cout << "k " << k << "\n"
            << "delta " << delta << "\n"
            << "witness " << witness.value_or("-") << "\n"
            << "beta " << record_decimal(r.get(), o.digits) << "\n"
            << "closed-form " << (delta == expected ? "agrees" : "DIFFERS: " + expected) << "\n";
  return delta == expected ? kExitOk : kExitFailure;
}

const std::vector<std::string> kSuites = {"sharkovskii",     "identity-6m4", "oracle",
                                          "key-proposition", "dichotomy",     "asymptotics"};

// Prints a report and returns whether every line passed.
bool print_report(gasket_status s, gasket_report* const* out) {
  check(s);
  const ReportPtr rep(*out, gasket_report_free);
  char* text = nullptr;
  check(gasket_report_text(rep.get(), &text));
  std::cout << *take(text);
  int pass = 0;
  check(gasket_report_ok(rep.get(), &pass));
  return pass != 0;
}

int cmd_verify(std::vector<std::string> suites, const Options& o) {
  if (suites.empty()) suites = kSuites;
  const Config cfg = make_config(o);
  const auto cap = [&](int fallback) { return o.kmax > 0 ? o.kmax : fallback; };
  bool ok = true;
  for (const std::string& s : suites) {
    gasket_report* r = nullptr;
    if (s == "sharkovskii") {
      ok &= print_report(gasket_verify_sharkovskii(cap(12), &r), &r);
    } else if (s == "identity-6m4") {
      ok &= print_report(gasket_verify_identity_6m4(cap(10), &r), &r);
    } else if (s == "oracle") {
      ok &= print_report(gasket_verify_oracle(cfg.get(), cap(12), &r), &r);
    } else if (s == "key-proposition") {
      ok &= print_report(gasket_verify_key_proposition(cfg.get(), cap(12), &r), &r);
    } else if (s == "dichotomy") {
      const int l = cap(4);
      for (int m = 1; m < l; ++m) ok &= print_report(gasket_verify_dichotomy(cfg.get(), l, m, &r), &r);
    } else {
      ok &= print_report(gasket_verify_asymptotics(cap(12), 5, 8, &r), &r);
    }
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_constants(const Options& o) {
  char *lo = nullptr, *hi = nullptr;
  int level = 0;
  check(gasket_beta_c_bracket("1/10000", o.digits, &lo, &hi, &level));
  const std::string l = *take(lo), h = *take(hi);
  auto row = [](const std::string& name, const std::string& value) {
    std::cout << name << std::string(name.size() < 11 ? 11 - name.size() : 1, ' ') << value << "\n";
  };
  row("beta_c", "[" + l + ", " + h + "] (level " + std::to_string(level) + ")");
  row("beta_a", real_decimal(named("beta_a", 0).get(), o.digits));
  row("beta_star", real_decimal(named("beta_star", 0).get(), o.digits));
  for (int n = 1; n <= 3; ++n) row("rho_" + std::to_string(n), real_decimal(named("rho", n).get(), o.digits));
  row("hat_beta_0", real_decimal(named("hat_beta", 0).get(), o.digits));
  row("beta_2", record_decimal(closed_form(2).get(), o.digits));
  row("beta_3", record_decimal(closed_form(3).get(), o.digits));
  return kExitOk;
}

int cmd_figure(int id, const Options& o) {
  char* s = nullptr;
  check(gasket_figure_csv(id, o.digits, o.kmax, &s));
  emit(*take(s), o.csv);
  return kExitOk;
}

int cmd_overlap(const std::string& lo, std::string hi, const Options& o) {
  if (hi.empty()) hi = lo;
  char* s = nullptr;
  check(gasket_overlap_csv(lo.c_str(), hi.c_str(), o.digits, &s));
  emit(*take(s), o.csv);
  return kExitOk;
}

int cmd_admissible(const std::string& block, const Options& o) {
  const Config cfg = make_config(o);
  size_t count = 0;
  char* s = nullptr;
  check(gasket_representations(cfg.get(), block.c_str(), &count, &s));
  const std::string list = *take(s);
  std::cout << (count ? "admissible " : "not admissible ") << count << "\n" << list;
  return kExitOk;
}

int cmd_graph(const std::string& which, int n, const Options& o) {
  if (which != "x" && which != "blocks") throw CallError(GASKET_E_INVALID_ARGUMENT, "graph must be x or blocks");
  char* s = nullptr;
  check(gasket_graph_edges(which == "x" ? 0 : 1, n, &s));
  emit(*take(s), o.csv);
  return kExitOk;
}

int cmd_member(const std::string& raw, const std::string& base, const Options& o) {
  const Real beta = parse_base(base);
  const std::string coding = with_tail(raw);
  int member = 0;
  char* detail = nullptr;
  if (coding.find('(') != std::string::npos || coding == "inf") {
    check(gasket_member_general(coding.c_str(), beta.get(), &member, &detail));
  } else {
    check(gasket_member_periodic(coding.c_str(), beta.get(), &member, &detail));
  }
  const std::optional<std::string> why = take(detail);
  std::cout << "beta " << real_decimal(beta.get(), o.digits) << "\n"
            << (member ? "member" : "not member") << (why ? " (" + *why + ")" : "") << "\n";
  return kExitOk;
}

int cmd_hat(const std::string& word) {
  char* s = nullptr;
  check(gasket_hat_sequence(word.c_str(), &s));
  std::cout << *take(s) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical bases for periodic unique codings of the fat Sierpinski gasket"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--digits", o.digits, "Decimal places")->check(CLI::Range(0, 60));
  app.add_option("--kmax", o.kmax, "Upper index or range override")->check(CLI::Range(0, 200));
  app.add_option("--csv", o.csv, "Write output to this path");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--quotient-symmetry", o.quotient, "Oracle symmetry quotient")
      ->check(CLI::IsMember({"on", "off"}));

  std::uint64_t k = 0;
  auto* delta = app.add_subcommand("delta", "Quasi-greedy expansion of beta_k (k..kmax with --kmax)");
  delta->add_option("k", k, "Index")->required();

  auto* beta = app.add_subcommand("beta", "Decimal value of beta_k (k..kmax with --kmax)");
  beta->add_option("k", k, "Index")->required();

  int ok = 0;
  std::uint64_t budget = 0;
  auto* oracle = app.add_subcommand("oracle", "Brute-force beta_k and compare with the closed form");
  oracle->add_option("k", ok, "Index")->required();
  oracle->add_option("--budget", budget, "Node budget, 0 for none");

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run verification suites (all when none named)");
  verify->add_option("suites", suites, "Suites")->check(CLI::IsMember(kSuites));

  auto* constants = app.add_subcommand("constants", "Named constants and the beta_c bracket");

  int figure_id = 0;
  auto* figure = app.add_subcommand("figure", "Figure data as CSV (2, 3 or 4)");
  figure->add_option("id", figure_id, "Figure")->required()->check(CLI::IsMember({2, 3, 4}));

  std::string beta_lo, beta_hi;
  auto* overlap = app.add_subcommand("overlap", "Overlap triangles for beta or [beta, beta_hi]");
  overlap->add_option("beta", beta_lo, "Base, rational or decimal")->required();
  overlap->add_option("beta_hi", beta_hi, "Upper end of an interval");

  std::string block;
  auto* admissible = app.add_subcommand("admissible", "Representations of a binary block");
  admissible->add_option("block", block, "Binary word")->required();

  std::string which;
  int level = 0;
  auto* graph = app.add_subcommand("graph", "Edge list of x or the lambda/gamma block graph");
  graph->add_option("which", which, "x or blocks")->required();
  graph->add_option("--level", level, "Block graph level n")->check(CLI::Range(0, 20));

  std::string coding, base;
  auto* member = app.add_subcommand("member", "Membership of a coding at a base");
  member->add_option("coding", coding, "Omega word, or an eventually periodic sequence")->required();
  member->add_option("--at", base, "beta_a, beta_star, rho:N, hat_beta:N, k:N, a sequence or a rational")
      ->required();

  std::string word;
  auto* hat = app.add_subcommand("hat", "Hat sequence of a primitive Omega word");
  hat->add_option("word", word, "Omega word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*delta) return cmd_delta(k, o);
    if (*beta) return cmd_beta(k, o);
    if (*oracle) return cmd_oracle(ok, budget, o);
    if (*verify) return cmd_verify(suites, o);
    if (*constants) return cmd_constants(o);
    if (*figure) return cmd_figure(figure_id, o);
    if (*overlap) return cmd_overlap(beta_lo, beta_hi, o);
    if (*admissible) return cmd_admissible(block, o);
    if (*graph) return cmd_graph(which, level, o);
    if (*member) return cmd_member(coding, base, o);
    if (*hat) return cmd_hat(word);
  } catch (const CallError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_of(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
