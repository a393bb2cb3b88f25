#pragma once

// Data tables for the plots of beta_k and the overlap triangles of the
// first generation of the gasket.

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace gasket {

struct FigureTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // Comma separated, header first, LF line endings.
  std::string csv() const;
};

// (k, beta_k) for k = 2..k_max.
FigureTable figure_beta_k(int digits = 6, int k_max = 50);
// (l, beta_{3l+1}, beta_{3l+2}) for l = 1..l_max.
FigureTable figure_beta_3l12(int digits = 6, int l_max = 20);
// (m, n, beta_{3(2m+1)2^n}, hat-beta_n) for m = 0..m_max, n = 0..n_max.
FigureTable figure_beta_3k(int digits = 6, int m_max = 8, int n_max = 3);
// Figure 2, 3 or 4 with default ranges; `range` overrides k_max, l_max or
// m_max when positive.
FigureTable figure_table(int id, int digits = 6, int range = 0);

struct RationalRange {
  mpq_class lo;
  mpq_class hi;
};

struct PlanePoint {
  RationalRange x;
  RationalRange y;
};

// A right isosceles triangle; `leg` is its leg length.
struct OverlapTriangle {
  std::array<PlanePoint, 3> vertices;
  RationalRange leg;
  bool degenerate() const { return leg.hi == 0; }
};

// O_0 = f_1(D) n f_2(D) (central), O_1 = f_0(D) n f_2(D) (left),
// O_2 = f_0(D) n f_1(D) (bottom), for f_d(x) = (x + d)/beta and the hull D
// with vertices (0,0), (1/(beta-1),0), (0,1/(beta-1)). Each coordinate is
// monotone in beta, so enclosures follow from the interval ends.
struct OverlapRegion {
  OverlapTriangle o0;
  OverlapTriangle o1;
  OverlapTriangle o2;
};

OverlapRegion overlap_region(const mpq_class& beta_lo, const mpq_class& beta_hi);

}  // namespace gasket
