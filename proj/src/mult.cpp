#include "pearl/mult.hpp"

#include <numeric>
#include <stdexcept>

#include "pearl/arith.hpp"

namespace pearl {

void check_loop_data(const Diagram& d, const LoopData& ld) {
  const auto pearls = d.pearl_labels();
  if (ld.size() != pearls.size()) throw std::invalid_argument("loop data must cover exactly the pearls");
  for (int p : pearls) {
    auto it = ld.find(p);
    if (it == ld.end() || it->second < 1 || d.vertex(p).degree % it->second != 0)
      throw std::invalid_argument("loop data entry must divide the pearl degree");
  }
}

std::vector<LoopData> all_loop_data(const Diagram& d) {
  const auto pearls = d.pearl_labels();
  std::vector<LoopData> out{{}};
  for (int p : pearls) {
    std::vector<LoopData> next;
    for (std::int64_t k : divisors(d.vertex(p).degree))
      for (const auto& base : out) {
        LoopData ld = base;
        ld[p] = k;
        next.push_back(std::move(ld));
      }
    out = std::move(next);
  }
  return out;
}

std::int64_t loop_gcd(const Diagram& d, const LoopData& ld) {
  std::int64_t g = 0;
  for (const auto& e : d.edges) g = std::gcd(g, e.weight);
  for (const auto& [p, k] : ld) g = std::gcd(g, k);
  return g;
}

namespace {

int pearl_end_count(const Diagram& d, const Edge& e) {
  return (d.is_pearl(e.src) ? 1 : 0) + (d.is_pearl(e.dst) ? 1 : 0);
}

Int fls_factor(const Diagram& d) {
  const std::int64_t lambda = cycle_class(d);
  return Int(lambda) * lambda * d.vertex(d.infinity_label()).degree;
}

}  // namespace

Int xi(const Diagram& d, const LoopData& ld) {
  check_loop_data(d, ld);
  Int r = 1;
  for (int p : d.pearl_labels()) {
    const std::int64_t dp = d.vertex(p).degree;
    r *= int_pow(Int(dp), static_cast<std::uint64_t>(d.valence(p) - 1));
    r *= dp / ld.at(p);
  }
  for (const auto& e : d.edges) {
    const int m = pearl_end_count(d, e);
    r *= int_pow(Int(e.weight), static_cast<std::uint64_t>(m + (m == 2 ? 1 : 0)));
  }
  if (d.kind == DiagramKind::Fls) r *= fls_factor(d);
  return r;
}

HalfLaurent Xi(const Diagram& d, const LoopData& ld) {
  check_loop_data(d, ld);
  Int scalar = 1;
  HalfLaurent r = HalfLaurent::constant(1);
  for (int p : d.pearl_labels()) {
    const std::int64_t dp = d.vertex(p).degree;
    const std::int64_t kp = ld.at(p);
    scalar *= int_pow(Int(kp), static_cast<std::uint64_t>(d.valence(p) - 1));
    for (const auto& e : d.edges) {
      if (e.src == p) r = r * bracket_minus((dp / kp) * e.weight);
      if (e.dst == p) r = r * bracket_minus((dp / kp) * e.weight);
    }
  }
  for (std::size_t i : d.pearl_pearl_edges()) scalar *= d.edges[i].weight;
  if (d.kind == DiagramKind::Fls) scalar *= fls_factor(d);
  return scalar * r;
}

Int curve_count(const Diagram& d, const LoopData& ld, std::int64_t a) {
  check_loop_data(d, ld);
  const std::int64_t g = loop_gcd(d, ld);
  if (a >= 1 && a % g != 0) return 0;
  Int r = g;
  for (int p : d.pearl_labels())
    r *= int_pow(Int(ld.at(p)), static_cast<std::uint64_t>(d.valence(p) - 1));
  for (std::size_t i : d.pearl_pearl_edges()) r *= d.edges[i].weight;
  if (d.kind == DiagramKind::Fls) {
    const int inf = d.infinity_label();
    r *= cycle_class(d);
    r *= d.vertex(inf).degree / ld.at(inf);
  }
  return r;
}

Int m_a(const Diagram& d, std::int64_t a) {
  Int total = 0;
  for (const auto& ld : all_loop_data(d)) {
    const std::int64_t g = loop_gcd(d, ld);
    if (a == 0 || a % g == 0) total += g * xi(d, ld);
  }
  return total;
}

HalfLaurent M_a(const Diagram& d, std::int64_t a) {
  HalfLaurent total;
  for (const auto& ld : all_loop_data(d)) {
    const std::int64_t g = loop_gcd(d, ld);
    if (a == 0 || a % g == 0) total += Int(g) * Xi(d, ld);
  }
  return total;
}

Int omega(const Diagram& d) {
  Int r = 1;
  for (int p : d.pearl_labels()) {
    const std::int64_t dp = d.vertex(p).degree;
    r *= int_pow(Int(dp), static_cast<std::uint64_t>(d.valence(p) - 1)) * sigma1(dp);
  }
  for (const auto& e : d.edges) {
    const int m = pearl_end_count(d, e);
    r *= int_pow(Int(e.weight), static_cast<std::uint64_t>(m + (m == 2 ? 1 : 0)));
  }
  if (d.kind == DiagramKind::Fls) r *= fls_factor(d);
  return r;
}

HalfLaurent Omega(const Diagram& d) {
  HalfLaurent r = HalfLaurent::constant(1);
  for (int p : d.pearl_labels()) {
    const std::int64_t dp = d.vertex(p).degree;
    HalfLaurent local;
    for (std::int64_t k : divisors(dp)) {
      HalfLaurent term = HalfLaurent::constant(
          int_pow(Int(k), static_cast<std::uint64_t>(d.valence(p) - 1)));
      for (const auto& e : d.edges) {
        if (e.src == p) term = term * bracket_minus((dp / k) * e.weight);
        if (e.dst == p) term = term * bracket_minus((dp / k) * e.weight);
      }
      local += term;
    }
    r = r * local;
  }
  Int scalar = 1;
  for (std::size_t i : d.pearl_pearl_edges()) scalar *= d.edges[i].weight;
  if (d.kind == DiagramKind::Fls) scalar *= fls_factor(d);
  return scalar * r;
}

namespace {

std::uint64_t homogeneity_exp_classical(const Diagram& d) {
  return static_cast<std::uint64_t>(4 * d.genus - 5 + (d.kind == DiagramKind::Fls ? 2 : 0));
}

std::uint64_t homogeneity_exp_refined(const Diagram& d) {
  return static_cast<std::uint64_t>(2 * d.genus - 3 + (d.kind == DiagramKind::Fls ? 2 : 0));
}

void check_subscript(const Diagram& d, std::int64_t k) {
  if (k < 1 || diagram_gcd(d) % k != 0)
    throw std::domain_error("subscript k must divide the diagram gcd");
}

}  // namespace

Int omega_k(const Diagram& d, std::int64_t k, SubscriptRoute route) {
  check_subscript(d, k);
  if (route == SubscriptRoute::Homogeneity && k > 1)
    return int_pow(Int(k), homogeneity_exp_classical(d)) *
           omega_k(divide(d, k), 1, SubscriptRoute::RestrictedSum);
  Int total = 0;
  for (const auto& ld : all_loop_data(d))
    if (loop_gcd(d, ld) == k) total += xi(d, ld);
  return total;
}

HalfLaurent Omega_k(const Diagram& d, std::int64_t k, SubscriptRoute route) {
  check_subscript(d, k);
  if (route == SubscriptRoute::Homogeneity && k > 1)
    return int_pow(Int(k), homogeneity_exp_refined(d)) *
           Omega_k(divide(d, k), 1, SubscriptRoute::RestrictedSum).substituted(k);
  HalfLaurent total;
  for (const auto& ld : all_loop_data(d))
    if (loop_gcd(d, ld) == k) total += Xi(d, ld);
  return total;
}

namespace {

std::vector<std::int64_t> diagram_divisors(const Diagram& d) { return divisors(diagram_gcd(d)); }

}  // namespace

Int mu(const Diagram& d) {
  const std::int64_t e = 4 * d.genus - 3 + (d.kind == DiagramKind::Fls ? 2 : 0);
  return convolve_action(
      eps_fn(e), [](const Diagram& x) { return mu1(x); }, d,
      diagram_divisors, [](const Diagram& x, std::int64_t k) { return divide(x, k); });
}

HalfLaurent Upsilon(const Diagram& d) {
  const std::int64_t e = 2 * d.genus - 2 + (d.kind == DiagramKind::Fls ? 2 : 0);
  return convolve_action(
      eps_phi_fn(e), [](const Diagram& x) { return M0(x); }, d,
      diagram_divisors, [](const Diagram& x, std::int64_t k) { return divide(x, k); });
}

}  // namespace pearl
