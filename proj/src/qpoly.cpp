#include "pearl/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace pearl {

HalfLaurent HalfLaurent::constant(Int c) { return monomial(std::move(c), 0); }

HalfLaurent HalfLaurent::monomial(Int coeff, std::int64_t exp_half) {
  HalfLaurent p;
  if (coeff != 0) p.terms_[exp_half] = std::move(coeff);
  return p;
}

std::int64_t HalfLaurent::degree_half() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
  return terms_.rbegin()->first;
}

Int HalfLaurent::coeff_half(std::int64_t exp_half) const {
  auto it = terms_.find(exp_half);
  return it == terms_.end() ? Int(0) : it->second;
}

Int HalfLaurent::codegree_coeff(std::int64_t cod) const {
  return coeff_half(degree_half() - 2 * cod);
}

Int HalfLaurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

HalfLaurent HalfLaurent::substituted(std::int64_t k) const {
  if (k < 1) throw std::domain_error("substitute_power requires k >= 1");
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
  return r;
}

bool HalfLaurent::symmetric_under_inversion() const {
  for (const auto& [e, c] : terms_)
    if (coeff_half(-e) != c) return false;
  return true;
}

bool HalfLaurent::antisymmetric_under_inversion() const {
  for (const auto& [e, c] : terms_)
    if (coeff_half(-e) != -c) return false;
  return true;
}

void HalfLaurent::set_coeff_half(std::int64_t exp_half, Int c) {
  if (c == 0)
    terms_.erase(exp_half);
  else
    terms_[exp_half] = std::move(c);
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) { return *this += -o; }

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto it = r.terms_.find(ea + eb);
      if (it == r.terms_.end()) {
        r.terms_.emplace(ea + eb, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  return r;
}

HalfLaurent operator*(const Int& s, const HalfLaurent& p) {
  HalfLaurent r;
  if (s == 0) return r;
  for (const auto& [e, c] : p.terms_) r.terms_[e] = s * c;
  return r;
}

std::string HalfLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    if (e == 2)
      out << "q";
    else if (e % 2 == 0)
      out << "q^" << e / 2;
    else
      out << "q^(" << e << "/2)";
  }
  return out.str();
}

HalfLaurent bracket_minus(std::int64_t alpha) {
  if (alpha < 1) throw std::domain_error("bracket_minus requires alpha >= 1");
  HalfLaurent p;
  p.set_coeff_half(alpha, 1);
  p.set_coeff_half(-alpha, -1);
  return p;
}

HalfLaurent exact_divide(const HalfLaurent& p, const HalfLaurent& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return {};
  HalfLaurent rem = p;
  HalfLaurent quot;
  const std::int64_t dd = d.degree_half();
  const Int& dl = d.terms().rbegin()->second;
  // Monomials are units here, so exactness is not detected by the degree
  // alone: the quotient's lowest exponent is pinned by the low ends instead.
  const std::int64_t min_q_exp = p.terms().begin()->first - d.terms().begin()->first;
  while (!rem.is_zero()) {
    const std::int64_t rd = rem.degree_half();
    const Int& rl = rem.terms().rbegin()->second;
    if (rd - dd < min_q_exp || rl % dl != 0)
      throw std::domain_error("exact_divide: non-exact division (broken divisibility invariant)");
    HalfLaurent t = HalfLaurent::monomial(rl / dl, rd - dd);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

HalfLaurent qpow(const HalfLaurent& p, unsigned e) {
  HalfLaurent r = HalfLaurent::constant(1);
  HalfLaurent base = p;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

}  // namespace pearl
