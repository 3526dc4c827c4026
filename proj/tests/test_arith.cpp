#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pearl/arith.hpp"

using namespace pearl;

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(6) == std::vector<std::int64_t>{1, 2, 3, 6});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(divisors(0), std::domain_error);
}

TEST_CASE("sigma1 and euler_phi") {
  CHECK(sigma1(1) == 1);
  CHECK(sigma1(4) == 7);
  CHECK(sigma1(6) == 12);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(6) == 2);
  CHECK_THROWS_AS(sigma1(0), std::domain_error);
  CHECK_THROWS_AS(euler_phi(0), std::domain_error);
}

TEST_CASE("convolve examples") {
  CHECK(convolve(phi_fn(), eps_fn(0), 6) == 6);
  CHECK(convolve(dirac_fn(), sigma1_fn(), 12) == 28);
  // (eps_1 * 1)(6) against the brute-force divisor sum.
  Int brute = 0;
  for (std::int64_t d : divisors(6)) brute += d;
  CHECK(convolve(eps_fn(1), eps_fn(0), 6) == brute);
  CHECK(brute == 12);
}

TEST_CASE("convolve is associative and has Dirac as unit") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(-9, 9);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Int> a(61), b(61), c(61);
    for (int i = 1; i <= 60; ++i) {
      a[i] = coin(rng);
      b[i] = coin(rng);
      c[i] = coin(rng);
    }
    ArithFn u([&a](std::int64_t n) { return a[n]; });
    ArithFn v([&b](std::int64_t n) { return b[n]; });
    ArithFn w([&c](std::int64_t n) { return c[n]; });
    ArithFn uv([&](std::int64_t n) { return convolve(u, v, n); });
    ArithFn vw([&](std::int64_t n) { return convolve(v, w, n); });
    for (std::int64_t n = 1; n <= 60; ++n)
      CHECK(convolve(uv, w, n) == convolve(u, vw, n));
    for (std::int64_t n = 1; n <= 30; ++n) {
      CHECK(convolve(dirac_fn(), u, n) == a[n]);
      CHECK(convolve(u, dirac_fn(), n) == a[n]);
    }
  }
}

TEST_CASE("phi * 1 = id up to 1000") {
  ArithFn one = eps_fn(0);
  ArithFn phi = phi_fn();
  for (std::int64_t n = 1; n <= 1000; ++n) CHECK(convolve(phi, one, n) == n);
}

TEST_CASE("(eps_{2g-2} phi) * eps_{2g-2} = eps_{2g-1}") {
  for (int g = 2; g <= 6; ++g) {
    ArithFn lhs = eps_phi_fn(2 * g - 2);
    ArithFn rhs = eps_fn(2 * g - 2);
    for (std::int64_t d = 1; d <= 50; ++d)
      CHECK(convolve(lhs, rhs, d) == int_pow(Int(d), static_cast<std::uint64_t>(2 * g - 1)));
  }
}

TEST_CASE("convolve_action on the positive integers") {
  auto div_of = [](std::int64_t x) { return divisors(x); };
  auto div_by = [](std::int64_t x, std::int64_t n) { return x / n; };
  // x primitive: only divisor 1.
  CHECK(convolve_action(dirac_fn(), [](std::int64_t x) { return Int(10 * x); }, std::int64_t(1),
                        div_of, div_by) == 10);
  // eps_0 * 1 counts divisors.
  CHECK(convolve_action(eps_fn(0), [](std::int64_t) { return Int(1); }, std::int64_t(2), div_of,
                        div_by) == 2);
  // ((eps_2 phi) * eps_2)(6) = 6^3 for g = 2.
  CHECK(convolve_action(eps_phi_fn(2),
                        [](std::int64_t x) { return int_pow(Int(x), 2); }, std::int64_t(6),
                        div_of, div_by) == 216);
}

TEST_CASE("convolve_q examples") {
  QArithFn qdirac([](std::int64_t n) { return HalfLaurent::constant(n == 1 ? 1 : 0); });
  QArithFn sq([](std::int64_t n) { return HalfLaurent::constant(Int(n) * n); });
  QArithFn q_mono([](std::int64_t) { return HalfLaurent::monomial(1, 2); });  // q for all k

  // Left neutrality of the Dirac function.
  for (std::int64_t n = 1; n <= 12; ++n) CHECK(convolve_q(qdirac, q_mono, n) == q_mono(n));
  // V = Dirac keeps only k = n.
  CHECK(convolve_q(sq, qdirac, 4) == HalfLaurent::constant(16));

  // U_k = V_k = q, n = 2: the two divisor terms are U_1(q)V_2(q) and
  // U_2(q)V_1(q^2), built here from first principles.
  HalfLaurent by_hand = HalfLaurent::monomial(1, 2) * HalfLaurent::monomial(1, 2) +
                        HalfLaurent::monomial(1, 2) * HalfLaurent::monomial(1, 2).substituted(2);
  CHECK(by_hand.to_string() == "q^3 + q^2");
  CHECK(convolve_q(q_mono, q_mono, 2) == by_hand);
}

TEST_CASE("convolve_q restricted to constants equals convolve") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coin(-5, 5);
  std::vector<Int> a(31), b(31);
  for (int i = 1; i <= 30; ++i) {
    a[i] = coin(rng);
    b[i] = coin(rng);
  }
  ArithFn u([&a](std::int64_t n) { return a[n]; });
  ArithFn v([&b](std::int64_t n) { return b[n]; });
  QArithFn qu([&a](std::int64_t n) { return HalfLaurent::constant(a[n]); });
  QArithFn qv([&b](std::int64_t n) { return HalfLaurent::constant(b[n]); });
  for (std::int64_t n = 1; n <= 30; ++n)
    CHECK(convolve_q(qu, qv, n) == HalfLaurent::constant(convolve(u, v, n)));
}

TEST_CASE("convolve_q is associative") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coin(-3, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  auto random_fn = [&]() {
    auto table = std::make_shared<std::vector<HalfLaurent>>(25);
    for (int i = 1; i <= 24; ++i) {
      HalfLaurent p;
      for (int t = 0; t < 2; ++t) p += HalfLaurent::monomial(coin(rng), expo(rng));
      (*table)[static_cast<std::size_t>(i)] = p;
    }
    return QArithFn([table](std::int64_t n) { return (*table)[static_cast<std::size_t>(n)]; });
  };
  for (int trial = 0; trial < 5; ++trial) {
    QArithFn u = random_fn(), v = random_fn(), w = random_fn();
    QArithFn uv([&](std::int64_t n) { return convolve_q(u, v, n); });
    QArithFn vw([&](std::int64_t n) { return convolve_q(v, w, n); });
    for (std::int64_t n = 1; n <= 24; ++n)
      CHECK(convolve_q(uv, w, n) == convolve_q(u, vw, n));
  }
}
