#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pearl/bigint.hpp"
#include "pearl/diagram.hpp"
#include "pearl/qpoly.hpp"

namespace pearl {

enum class InvariantName { M, N, Nprim, BG, R };

std::string invariant_name_string(InvariantName n);

/// Which invariant to compute. Legal (name, a) pairs follow the two
/// multiplicity tables: M and BG accept any a >= 0, N accepts a in {0, 1},
/// Nprim and R require a = 0.
struct InvariantQuery {
  int genus = 2;
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;
  std::int64_t a = 0;
  DiagramKind kind = DiagramKind::Point;
  InvariantName name = InvariantName::N;
};

struct InvariantValue {
  InvariantQuery query;
  std::variant<Int, HalfLaurent> value;

  bool is_refined() const { return std::holds_alternative<HalfLaurent>(value); }
  const Int& classical() const { return std::get<Int>(value); }
  const HalfLaurent& refined() const { return std::get<HalfLaurent>(value); }
  std::string to_string() const;
  bool operator==(const InvariantValue& o) const { return value == o.value; }
};

/// Sum of the table multiplicity over every diagram of the queried genus,
/// bidegree and kind.
InvariantValue invariant_by_diagrams(const InvariantQuery& q);

/// Closed primitive formulas on bidegree (1, n): sums over ordered
/// compositions of n into g-1 positive parts.
Int primitive_closed_classical(int genus, std::int64_t n, DiagramKind kind);
HalfLaurent primitive_closed_refined(int genus, std::int64_t n, DiagramKind kind);

/// Variant of the FLS classical primitive formula that distinguishes the
/// infinity part: sum over a_1+..+a_{g-2}+a_inf = n of
/// a_inf^2 sigma1(a_inf) prod a_i sigma1(a_i). Agrees with
/// primitive_closed_classical(genus, n, Fls); both are kept and compared.
Int primitive_closed_fls_infinity_form(int genus, std::int64_t n);

/// Multiple cover formula: sum over k | gcd(d1,d2) of
/// k^e * primitive(g, d1 d2 / k^2) with q -> q^k in the refined cases.
/// Exponents e: point M/N/BG/R = 4g-4 / 4g-3 / 2g-2 / 2g-1, FLS shifted by 2.
InvariantValue multiple_cover(int genus, std::int64_t d1, std::int64_t d2, InvariantName name,
                              DiagramKind kind);

/// Finite prefix c_1..c_N of a power series in y; coefficients may be
/// constants (classical series) or genuine Laurent polynomials.
struct SeriesPrefix {
  std::string variable = "y";
  std::vector<HalfLaurent> coeffs;  // coeffs[i] is the coefficient of y^{i+1}

  int size() const { return static_cast<int>(coeffs.size()); }
  const HalfLaurent& at(int n) const { return coeffs[static_cast<std::size_t>(n) - 1]; }
  bool operator==(const SeriesPrefix& o) const { return coeffs == o.coeffs; }
};

SeriesPrefix dg2_prefix(int n);    // n sigma1(n)
SeriesPrefix d2g2_prefix(int n);   // n^2 sigma1(n)
SeriesPrefix s_series_prefix(int n);  // sum_{k|n} (n/k) [k]_-^2

/// Cauchy product of prefixes of series with zero constant term.
SeriesPrefix series_mul(const SeriesPrefix& a, const SeriesPrefix& b);
/// base^e * extra, truncated; e = 0 returns extra.
SeriesPrefix series_pow_times(const SeriesPrefix& base, int e, const SeriesPrefix& extra);
SeriesPrefix series_scale(const Int& s, const SeriesPrefix& a);

/// F_{g,d} prefix: coefficient n is the cover-formula value of N (resp.
/// N^FLS) on bidegree (d, d n).
SeriesPrefix series_f(int genus, std::int64_t d, int n, DiagramKind kind);

struct QuasimodReport {
  bool pass = true;
  int first_fail_n = 0;
  Int lhs, rhs;
};

/// Exact coefficient identity behind the quasi-modularity statement: for all
/// n <= max_n, coefficient n of F_{g,d} equals
/// sum_{k|d} (d/k)^E N_{g,(1,k^2 n)} with E = 4g-3. Passing a different
/// exponent serves as a negative control.
QuasimodReport quasimodularity_check(int genus, std::int64_t d, int max_n,
                                     std::int64_t exponent_override = -1);

/// (n, codegree-p coefficient of R_{g,(1,n)}) for n in [n_lo, n_hi]; entries
/// with R = 0 (n < g-1) report 0.
std::vector<std::pair<std::int64_t, Int>> codegree_report(int genus, std::int64_t p,
                                                          std::int64_t n_lo, std::int64_t n_hi);

Int codegree0_closed(int genus, std::int64_t n);  // g C(n-1, g-2)
Int codegree1_closed(int genus, std::int64_t n);  // -2g(g-1) C(n-3, g-4)

/// The two-term closed form for the codegree-2 coefficient as published:
/// g(g-1)[C(n-2,g-3) - 3 C(n-3,g-3)] + 2g(g-1)(g-2) C(n-5,g-6).
/// It does not match direct expansion; kept verbatim for cross-checking.
Int codegree2_closed_published(int genus, std::int64_t n);

/// Corrected closed form: the per-part polynomial sum_{k|a} k [a/k]_-^2 has
/// codegree-2 coefficients 1, -6, 3, 2 at a = 1..4 (not -3 at a = 2 with
/// nothing beyond), and codegree-1 coefficients -2, 2 at a = 1, 2. This form
/// does match direct expansion.
Int codegree2_closed_corrected(int genus, std::int64_t n);

}  // namespace pearl
