// Exercises the shared library through its C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "gasket/gasket.h"

namespace {

std::string take(char* p) {
  REQUIRE(p != nullptr);
  std::string s(p);
  gasket_string_free(p);
  return s;
}

}  // namespace

TEST_CASE("status strings") {
  CHECK(std::string(gasket_status_string(GASKET_OK)) == "ok");
  CHECK(std::string(gasket_status_string(GASKET_E_PARSE)) == "Parse");
  CHECK(std::string(gasket_status_string(GASKET_E_WIDTH_NOT_REACHED)) == "WidthNotReached");
  CHECK(std::string(gasket_status_string(GASKET_E_NULL_ARGUMENT)) == "null argument");
}

TEST_CASE("null arguments are rejected") {
  CHECK(gasket_config_new(nullptr) == GASKET_E_NULL_ARGUMENT);
  CHECK(gasket_real_decimal(nullptr, 3, nullptr) == GASKET_E_NULL_ARGUMENT);
  CHECK(std::string(gasket_last_error()).find("x") != std::string::npos);
  gasket_config_free(nullptr);
  gasket_real_free(nullptr);
  gasket_record_free(nullptr);
  gasket_report_free(nullptr);
}

TEST_CASE("closed form records") {
  gasket_record* r = nullptr;
  REQUIRE(gasket_beta_closed_form(2, &r) == GASKET_OK);
  char* s = nullptr;
  REQUIRE(gasket_record_decimal(r, 5, &s) == GASKET_OK);
  CHECK(take(s) == "1.61803");
  REQUIRE(gasket_record_delta(r, &s) == GASKET_OK);
  CHECK(take(s) == "(10)^∞");
  REQUIRE(gasket_record_poly(r, &s) == GASKET_OK);
  CHECK(!take(s).empty());
  gasket_provenance p;
  REQUIRE(gasket_record_provenance(r, &p) == GASKET_OK);
  CHECK(p == GASKET_CLOSED_FORM);
  REQUIRE(gasket_record_witness(r, &s) == GASKET_OK);
  CHECK(s == nullptr);
  int theorem = 0;
  REQUIRE(gasket_record_perron(r, 1, &theorem, &s) == GASKET_OK);
  CHECK(take(s) > "0");
  gasket_record_free(r);

  REQUIRE(gasket_beta_closed_form(1, &r) == GASKET_OK);
  int sentinel = 0;
  REQUIRE(gasket_record_is_sentinel(r, &sentinel) == GASKET_OK);
  CHECK(sentinel == 1);
  CHECK(gasket_record_perron(r, 0, &theorem, &s) == GASKET_E_INVALID_ARGUMENT);
  gasket_record_free(r);
}

TEST_CASE("oracle through a config") {
  gasket_config* c = nullptr;
  REQUIRE(gasket_config_new(&c) == GASKET_OK);
  REQUIRE(gasket_config_set_jobs(c, 2) == GASKET_OK);
  CHECK(gasket_config_set_jobs(c, 0) == GASKET_E_INVALID_ARGUMENT);
  gasket_record* r = nullptr;
  REQUIRE(gasket_beta_oracle(c, 7, 0, &r) == GASKET_OK);
  char* s = nullptr;
  REQUIRE(gasket_record_delta(r, &s) == GASKET_OK);
  CHECK(take(s) == "(1010100)^∞");
  REQUIRE(gasket_record_witness(r, &s) == GASKET_OK);
  CHECK(take(s).size() == 7);
  gasket_record_free(r);
  CHECK(gasket_beta_oracle(c, 9, 3, &r) == GASKET_E_BUDGET_EXCEEDED);
  REQUIRE(gasket_config_set_max_oracle_k(c, 6) == GASKET_OK);
  CHECK(gasket_beta_oracle(c, 7, 0, &r) == GASKET_E_CAP_EXCEEDED);
  gasket_config_free(c);
}

TEST_CASE("reals and membership") {
  gasket_real *a = nullptr, *b = nullptr;
  REQUIRE(gasket_real_from_sequence("(10)^∞", &a) == GASKET_OK);
  REQUIRE(gasket_real_from_poly("x^2 - x - 1", &b) == GASKET_OK);
  int cmp = 2;
  REQUIRE(gasket_real_compare(a, b, &cmp) == GASKET_OK);
  CHECK(cmp == 0);
  int member = -1;
  char* detail = nullptr;
  REQUIRE(gasket_member_periodic("01", a, &member, &detail) == GASKET_OK);
  CHECK(member == 0);
  CHECK(take(detail).find("shift") != std::string::npos);
  gasket_real_free(b);
  REQUIRE(gasket_real_from_rational("2", &b) == GASKET_OK);
  REQUIRE(gasket_member_general("(01)^inf", b, &member, &detail) == GASKET_OK);
  CHECK(member == 1);
  CHECK(detail == nullptr);
  gasket_real_free(b);
  REQUIRE(gasket_real_from_rational("1.6", &b) == GASKET_OK);
  REQUIRE(gasket_real_compare(a, b, &cmp) == GASKET_OK);
  CHECK(cmp == 1);
  gasket_real_free(b);
  CHECK(gasket_real_from_rational("x/3", &b) == GASKET_E_PARSE);
  CHECK(gasket_real_from_sequence("(01)^∞", &b) == GASKET_E_NOT_PARRY_VALID);
  REQUIRE(gasket_real_named("rho", 3, &b) == GASKET_OK);
  char* s = nullptr;
  REQUIRE(gasket_real_decimal(b, 5, &s) == GASKET_OK);
  CHECK(take(s) == "1.55263");
  gasket_real_free(b);
  CHECK(gasket_real_named("pi", 0, &b) == GASKET_E_INVALID_ARGUMENT);
  REQUIRE(gasket_hat_sequence("102", &s) == GASKET_OK);
  CHECK(take(s) == "(100)^∞");
  CHECK(gasket_hat_sequence("0101", &s) == GASKET_E_NOT_PRIMITIVE);
  gasket_real_free(a);
}

TEST_CASE("expansions") {
  gasket_real* a = nullptr;
  REQUIRE(gasket_real_named("beta_a", 0, &a) == GASKET_OK);
  char *prefix = nullptr, *sequence = nullptr;
  REQUIRE(gasket_delta_expansion(a, 200, &prefix, &sequence) == GASKET_OK);
  CHECK(!take(prefix).empty());
  CHECK(take(sequence) == "1(010)^∞");
  REQUIRE(gasket_quasi_greedy(a, 6, &prefix) == GASKET_OK);
  CHECK(take(prefix) == "101001");
  gasket_real_free(a);
  int valid = 0;
  REQUIRE(gasket_is_parry_valid("(101000)^inf", &valid) == GASKET_OK);
  CHECK(valid == 1);
  char *lo = nullptr, *hi = nullptr;
  int level = 0;
  REQUIRE(gasket_beta_c_bracket("1/10000", 6, &lo, &hi, &level) == GASKET_OK);
  CHECK(take(lo) <= "1.553562");
  CHECK(take(hi) >= "1.553562");
  CHECK(level >= 1);
}

TEST_CASE("reports, graphs and tables") {
  gasket_report* r = nullptr;
  REQUIRE(gasket_verify_identity_6m4(4, &r) == GASKET_OK);
  int ok = 0;
  REQUIRE(gasket_report_ok(r, &ok) == GASKET_OK);
  CHECK(ok == 1);
  char* s = nullptr;
  REQUIRE(gasket_report_text(r, &s) == GASKET_OK);
  CHECK(take(s).find("# 5/5 passed") != std::string::npos);
  gasket_report_free(r);

  size_t count = 0;
  REQUIRE(gasket_representations(nullptr, "110101000", &count, &s) == GASKET_OK);
  CHECK(count == 12);
  CHECK(take(s).find("112101202\n") != std::string::npos);
  REQUIRE(gasket_graph_edges(0, 0, &s) == GASKET_OK);
  CHECK(take(s).find("000 -> 100") != std::string::npos);
  CHECK(gasket_graph_edges(2, 0, &s) == GASKET_E_INVALID_ARGUMENT);
  REQUIRE(gasket_figure_csv(2, 6, 0, &s) == GASKET_OK);
  const std::string csv = take(s);
  size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 50);
  REQUIRE(gasket_overlap_csv("18/11", "18/11", 4, &s) == GASKET_OK);
  CHECK(take(s).find("O0,0,0.6111,0.6112") != std::string::npos);
  CHECK(gasket_overlap_csv("1", "2", 4, &s) == GASKET_E_INVALID_ARGUMENT);
}
