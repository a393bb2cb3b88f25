#include "gasket/figures.hpp"

#include <sstream>

#include "gasket/critical.hpp"
#include "gasket/error.hpp"
#include "gasket/expansions.hpp"

namespace gasket {

namespace {

std::string decimal_of(std::uint64_t k, int digits) {
  const CriticalBaseRecord r = beta_k_closed_form(k);
  return to_decimal(r.value, digits);
}

void require_digits(int digits) {
  if (digits < 0 || digits > 60) throw Error(ErrorCode::InvalidArgument, "digits must lie in 0..60");
}

}  // namespace

std::string FigureTable::csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

FigureTable figure_beta_k(int digits, int k_max) {
  require_digits(digits);
  if (k_max < 2 || k_max > 200) throw Error(ErrorCode::CapExceeded, "k_max must lie in 2..200");
  FigureTable t{{"k", "beta_k"}, {}};
  for (int k = 2; k <= k_max; ++k) t.rows.push_back({std::to_string(k), decimal_of(k, digits)});
  return t;
}

FigureTable figure_beta_3l12(int digits, int l_max) {
  require_digits(digits);
  if (l_max < 1 || l_max > 100) throw Error(ErrorCode::CapExceeded, "l_max must lie in 1..100");
  FigureTable t{{"l", "beta_3l+1", "beta_3l+2"}, {}};
  for (int l = 1; l <= l_max; ++l) {
    t.rows.push_back({std::to_string(l), decimal_of(3 * l + 1, digits), decimal_of(3 * l + 2, digits)});
  }
  return t;
}

FigureTable figure_beta_3k(int digits, int m_max, int n_max) {
  require_digits(digits);
  if (m_max < 0 || m_max > 16 || n_max < 0 || n_max > 4) {
    throw Error(ErrorCode::CapExceeded, "m_max must lie in 0..16 and n_max in 0..4");
  }
  FigureTable t{{"m", "n", "beta_3(2m+1)2^n", "hat_beta_n"}, {}};
  for (int n = 0; n <= n_max; ++n) {
    const std::string floor = to_decimal(hat_beta(n), digits);
    for (int m = 0; m <= m_max; ++m) {
      const std::uint64_t k = (3 * (2 * static_cast<std::uint64_t>(m) + 1)) << n;
      t.rows.push_back({std::to_string(m), std::to_string(n), decimal_of(k, digits), floor});
    }
  }
  return t;
}

FigureTable figure_table(int id, int digits, int range) {
  switch (id) {
    case 2: return figure_beta_k(digits, range > 0 ? range : 50);
    case 3: return figure_beta_3l12(digits, range > 0 ? range : 20);
    case 4: return figure_beta_3k(digits, range > 0 ? range : 8);
    default: throw Error(ErrorCode::InvalidArgument, "figure id must be 2, 3 or 4");
  }
}

OverlapRegion overlap_region(const mpq_class& beta_lo, const mpq_class& beta_hi) {
  if (beta_lo > beta_hi || beta_lo <= 1 || beta_hi > 2) {
    throw Error(ErrorCode::InvalidArgument, "beta interval must lie in (1,2]");
  }
  // 1/beta, s = 1/(beta(beta-1)) and s - 1/beta = (2-beta)/(beta(beta-1))
  // all decrease in beta.
  auto range = [&](auto f) { return RationalRange{f(beta_hi), f(beta_lo)}; };
  const RationalRange zero{0, 0};
  const RationalRange inv = range([](const mpq_class& b) { return mpq_class(1 / b); });
  const RationalRange s = range([](const mpq_class& b) { return mpq_class(1 / (b * (b - 1))); });
  const RationalRange leg = range([](const mpq_class& b) { return mpq_class((2 - b) / (b * (b - 1))); });
  OverlapRegion r;
  r.o0 = {{PlanePoint{inv, inv}, PlanePoint{s, inv}, PlanePoint{inv, s}}, leg};
  r.o1 = {{PlanePoint{zero, inv}, PlanePoint{zero, s}, PlanePoint{leg, inv}}, leg};
  r.o2 = {{PlanePoint{inv, zero}, PlanePoint{s, zero}, PlanePoint{inv, leg}}, leg};
  return r;
}

}  // namespace gasket
