#include "pearl/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace pearl {

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors requires n >= 1");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int sigma1(std::int64_t n) {
  Int s = 0;
  for (std::int64_t d : divisors(n)) s += d;
  return s;
}

Int euler_phi(std::int64_t n) {
  if (n < 1) throw std::domain_error("euler_phi requires n >= 1");
  std::int64_t count = 0;
  for (std::int64_t m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) ++count;
  return count;
}

ArithFn dirac_fn() {
  return ArithFn([](std::int64_t n) { return Int(n == 1 ? 1 : 0); });
}

ArithFn eps_fn(std::int64_t alpha) {
  return ArithFn([alpha](std::int64_t n) { return int_pow(Int(n), static_cast<std::uint64_t>(alpha)); });
}

ArithFn eps_phi_fn(std::int64_t alpha) {
  return ArithFn([alpha](std::int64_t n) {
    return int_pow(Int(n), static_cast<std::uint64_t>(alpha)) * euler_phi(n);
  });
}

ArithFn phi_fn() {
  return ArithFn([](std::int64_t n) { return euler_phi(n); });
}

ArithFn sigma1_fn() {
  return ArithFn([](std::int64_t n) { return sigma1(n); });
}

Int convolve(const ArithFn& u, const ArithFn& v, std::int64_t n) {
  Int total = 0;
  for (std::int64_t k : divisors(n)) total += u(k) * v(n / k);
  return total;
}

HalfLaurent convolve_q(const QArithFn& u, const QArithFn& v, std::int64_t n) {
  HalfLaurent total;
  for (std::int64_t k : divisors(n)) total += u(k) * v(n / k).substituted(k);
  return total;
}

}  // namespace pearl
