#include "pearl/invariants.hpp"

#include <numeric>
#include <stdexcept>

#include "pearl/arith.hpp"
#include "pearl/enumerate.hpp"
#include "pearl/mult.hpp"
#include "pearl/parallel.hpp"

namespace pearl {

std::string invariant_name_string(InvariantName n) {
  switch (n) {
    case InvariantName::M: return "M";
    case InvariantName::N: return "N";
    case InvariantName::Nprim: return "Nprim";
    case InvariantName::BG: return "BG";
    case InvariantName::R: return "R";
  }
  return "?";
}

std::string InvariantValue::to_string() const {
  if (is_refined()) return refined().to_string();
  return classical().str();
}

namespace {

bool refined_name(InvariantName n) { return n == InvariantName::BG || n == InvariantName::R; }

void check_query(const InvariantQuery& q) {
  if (q.genus < 2) throw std::invalid_argument("genus must be at least 2");
  if (q.a < 0) throw std::invalid_argument("a must be nonnegative");
  switch (q.name) {
    case InvariantName::M:
    case InvariantName::BG:
      break;  // any a
    case InvariantName::N:
      if (q.a > 1) throw std::invalid_argument("N is tabulated only for a in {0,1}");
      break;
    case InvariantName::Nprim:
    case InvariantName::R:
      if (q.a != 0) throw std::invalid_argument("this invariant is tabulated only for a = 0");
      break;
  }
}

}  // namespace

InvariantValue invariant_by_diagrams(const InvariantQuery& q) {
  check_query(q);
  const auto diagrams = enumerate_diagrams(q.genus, q.d1, q.d2, q.kind);

  if (refined_name(q.name)) {
    std::vector<HalfLaurent> parts(diagrams.size());
    parallel_for(diagrams.size(), [&](std::size_t i) {
      parts[i] = q.name == InvariantName::BG ? M_a(diagrams[i], q.a) : Upsilon(diagrams[i]);
    });
    HalfLaurent total;
    for (const auto& p : parts) total += p;
    return {q, total};
  }

  std::vector<Int> parts(diagrams.size());
  parallel_for(diagrams.size(), [&](std::size_t i) {
    switch (q.name) {
      case InvariantName::M: parts[i] = m_a(diagrams[i], q.a); break;
      case InvariantName::N: parts[i] = q.a == 1 ? m_a(diagrams[i], 1) : mu(diagrams[i]); break;
      case InvariantName::Nprim: parts[i] = mu1(diagrams[i]); break;
      default: break;
    }
  });
  Int total = 0;
  for (const auto& p : parts) total += p;
  return {q, total};
}

Int primitive_closed_classical(int genus, std::int64_t n, DiagramKind kind) {
  if (genus < 2 || n < 1) throw std::invalid_argument("primitive formulas need g >= 2, n >= 1");
  Int total = 0;
  for (const auto& comp : compositions(n, genus - 1)) {
    Int term = 1;
    for (std::int64_t a : comp) term *= Int(a) * sigma1(a);
    if (kind == DiagramKind::Fls) term *= comp.back();
    total += term;
  }
  if (kind == DiagramKind::Point) total *= genus;
  return total;
}

namespace {

// sum_{k|a} (a/k) [k]_-^2, the per-part factor of the refined formulas.
HalfLaurent part_polynomial(std::int64_t a) {
  HalfLaurent r;
  for (std::int64_t k : divisors(a)) {
    HalfLaurent b = bracket_minus(k);
    r += Int(a / k) * (b * b);
  }
  return r;
}

}  // namespace

HalfLaurent primitive_closed_refined(int genus, std::int64_t n, DiagramKind kind) {
  if (genus < 2 || n < 1) throw std::invalid_argument("primitive formulas need g >= 2, n >= 1");
  HalfLaurent total;
  for (const auto& comp : compositions(n, genus - 1)) {
    HalfLaurent term =
        HalfLaurent::constant(kind == DiagramKind::Fls ? Int(comp.back()) : Int(1));
    for (std::int64_t a : comp) term = term * part_polynomial(a);
    total += term;
  }
  if (kind == DiagramKind::Point) total = Int(genus) * total;
  return total;
}

Int primitive_closed_fls_infinity_form(int genus, std::int64_t n) {
  if (genus < 2 || n < 1) throw std::invalid_argument("primitive formulas need g >= 2, n >= 1");
  // Compositions of n into (g-2) marked parts plus the infinity part.
  Int total = 0;
  for (const auto& comp : compositions(n, genus - 1)) {
    const std::int64_t ainf = comp.back();
    Int term = Int(ainf) * ainf * sigma1(ainf);
    for (std::size_t i = 0; i + 1 < comp.size(); ++i) term *= Int(comp[i]) * sigma1(comp[i]);
    total += term;
  }
  return total;
}

InvariantValue multiple_cover(int genus, std::int64_t d1, std::int64_t d2, InvariantName name,
                              DiagramKind kind) {
  if (genus < 2 || d1 < 1 || d2 < 1) throw std::invalid_argument("multiple_cover needs g >= 2, d1,d2 >= 1");
  std::int64_t expo = 0;
  switch (name) {
    case InvariantName::M: expo = 4 * genus - 4; break;
    case InvariantName::N: expo = 4 * genus - 3; break;
    case InvariantName::BG: expo = 2 * genus - 2; break;
    case InvariantName::R: expo = 2 * genus - 1; break;
    case InvariantName::Nprim:
      throw std::invalid_argument("the primitive count has no cover formula of its own");
  }
  if (kind == DiagramKind::Fls) expo += 2;

  InvariantQuery q{genus, d1, d2, 0, kind, name};
  if (refined_name(name)) {
    HalfLaurent total;
    for (std::int64_t k : divisors(std::gcd(d1, d2))) {
      const HalfLaurent prim = primitive_closed_refined(genus, d1 * d2 / (k * k), kind);
      total += int_pow(Int(k), static_cast<std::uint64_t>(expo)) * prim.substituted(k);
    }
    return {q, total};
  }
  Int total = 0;
  for (std::int64_t k : divisors(std::gcd(d1, d2)))
    total += int_pow(Int(k), static_cast<std::uint64_t>(expo)) *
             primitive_closed_classical(genus, d1 * d2 / (k * k), kind);
  return {q, total};
}

SeriesPrefix dg2_prefix(int n) {
  SeriesPrefix s;
  for (int i = 1; i <= n; ++i) s.coeffs.push_back(HalfLaurent::constant(Int(i) * sigma1(i)));
  return s;
}

SeriesPrefix d2g2_prefix(int n) {
  SeriesPrefix s;
  for (int i = 1; i <= n; ++i)
    s.coeffs.push_back(HalfLaurent::constant(Int(i) * i * sigma1(i)));
  return s;
}

SeriesPrefix s_series_prefix(int n) {
  SeriesPrefix s;
  for (int i = 1; i <= n; ++i) s.coeffs.push_back(part_polynomial(i));
  return s;
}

SeriesPrefix series_mul(const SeriesPrefix& a, const SeriesPrefix& b) {
  SeriesPrefix out;
  const int n = std::min(a.size(), b.size());
  out.coeffs.resize(static_cast<std::size_t>(n));
  for (int k = 2; k <= n; ++k) {
    HalfLaurent c;
    for (int i = 1; i < k; ++i) c += a.at(i) * b.at(k - i);
    out.coeffs[static_cast<std::size_t>(k) - 1] = c;
  }
  return out;
}

SeriesPrefix series_pow_times(const SeriesPrefix& base, int e, const SeriesPrefix& extra) {
  SeriesPrefix acc = extra;
  for (int i = 0; i < e; ++i) acc = series_mul(acc, base);
  return acc;
}

SeriesPrefix series_scale(const Int& s, const SeriesPrefix& a) {
  SeriesPrefix out = a;
  for (auto& c : out.coeffs) c = s * c;
  return out;
}

SeriesPrefix series_f(int genus, std::int64_t d, int n, DiagramKind kind) {
  SeriesPrefix out;
  out.coeffs.resize(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const auto v = multiple_cover(genus, d, d * static_cast<std::int64_t>(i + 1),
                                  InvariantName::N, kind);
    out.coeffs[i] = HalfLaurent::constant(v.classical());
  });
  return out;
}

QuasimodReport quasimodularity_check(int genus, std::int64_t d, int max_n,
                                     std::int64_t exponent_override) {
  const std::int64_t expo = exponent_override >= 0 ? exponent_override : 4 * genus - 3;
  for (int n = 1; n <= max_n; ++n) {
    const Int lhs =
        multiple_cover(genus, d, d * n, InvariantName::N, DiagramKind::Point).classical();
    Int rhs = 0;
    for (std::int64_t k : divisors(d))
      rhs += int_pow(Int(d / k), static_cast<std::uint64_t>(expo)) *
             primitive_closed_classical(genus, k * k * n, DiagramKind::Point);
    if (lhs != rhs) return {false, n, lhs, rhs};
  }
  return {};
}

std::vector<std::pair<std::int64_t, Int>> codegree_report(int genus, std::int64_t p,
                                                          std::int64_t n_lo, std::int64_t n_hi) {
  std::vector<std::pair<std::int64_t, Int>> out;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const HalfLaurent r = primitive_closed_refined(genus, n, DiagramKind::Point);
    out.emplace_back(n, r.is_zero() ? Int(0) : r.codegree_coeff(p));
  }
  return out;
}

Int codegree0_closed(int genus, std::int64_t n) { return Int(genus) * binomial(n - 1, genus - 2); }

Int codegree1_closed(int genus, std::int64_t n) {
  return Int(-2) * genus * (genus - 1) * binomial(n - 3, genus - 4);
}

Int codegree2_closed_published(int genus, std::int64_t n) {
  const Int g = genus;
  return g * (genus - 1) * (binomial(n - 2, genus - 3) - 3 * binomial(n - 3, genus - 3)) +
         2 * g * (genus - 1) * (genus - 2) * binomial(n - 5, genus - 6);
}

Int codegree2_closed_corrected(int genus, std::int64_t n) {
  const Int g = genus;
  // One part carries codegree 2 (coefficients 1, -6, 3, 2 at a = 1..4), or two
  // parts carry codegree 1 each (coefficients -2, 2 at a = 1, 2).
  Int single = binomial(n - 2, genus - 3) - 6 * binomial(n - 3, genus - 3) +
               3 * binomial(n - 4, genus - 3) + 2 * binomial(n - 5, genus - 3);
  Int pair_same = 2 * (binomial(n - 3, genus - 4) + binomial(n - 5, genus - 4));
  Int pair_mixed = -4 * binomial(n - 4, genus - 4);
  return g * ((genus - 1) * single + (genus - 1) * (genus - 2) * pair_same +
              (genus - 1) * (genus - 2) * pair_mixed);
}

}  // namespace pearl
