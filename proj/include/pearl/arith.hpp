#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <type_traits>
#include <vector>

#include "pearl/bigint.hpp"
#include "pearl/qpoly.hpp"

namespace pearl {

/// Divisors of n in ascending order, by trial division. n = 0 is a domain error.
std::vector<std::int64_t> divisors(std::int64_t n);

Int sigma1(std::int64_t n);     // sum of divisors
Int euler_phi(std::int64_t n);  // count of 1 <= m <= n coprime to n

/// Integer-valued arithmetic function, memoized per argument. Memoization is
/// internally synchronized, so values can be shared across threads.
class ArithFn {
 public:
  explicit ArithFn(std::function<Int(std::int64_t)> fn)
      : state_(std::make_shared<State>(std::move(fn))) {}

  Int operator()(std::int64_t n) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->memo.find(n);
    if (it != state_->memo.end()) return it->second;
    Int v = state_->fn(n);
    state_->memo.emplace(n, v);
    return v;
  }

 private:
  struct State {
    explicit State(std::function<Int(std::int64_t)> f) : fn(std::move(f)) {}
    std::function<Int(std::int64_t)> fn;
    std::mutex mutex;
    std::map<std::int64_t, Int> memo;
  };
  std::shared_ptr<State> state_;
};

/// HalfLaurent-valued arithmetic function, memoized the same way.
class QArithFn {
 public:
  explicit QArithFn(std::function<HalfLaurent(std::int64_t)> fn)
      : state_(std::make_shared<State>(std::move(fn))) {}

  HalfLaurent operator()(std::int64_t n) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->memo.find(n);
    if (it != state_->memo.end()) return it->second;
    HalfLaurent v = state_->fn(n);
    state_->memo.emplace(n, v);
    return v;
  }

 private:
  struct State {
    explicit State(std::function<HalfLaurent(std::int64_t)> f) : fn(std::move(f)) {}
    std::function<HalfLaurent(std::int64_t)> fn;
    std::mutex mutex;
    std::map<std::int64_t, HalfLaurent> memo;
  };
  std::shared_ptr<State> state_;
};

ArithFn dirac_fn();                    // 1 at 1, 0 elsewhere
ArithFn eps_fn(std::int64_t alpha);    // n -> n^alpha
ArithFn eps_phi_fn(std::int64_t alpha);  // n -> n^alpha * phi(n)
ArithFn phi_fn();
ArithFn sigma1_fn();

/// (u * v)(n) = sum_{k|n} u(k) v(n/k)
Int convolve(const ArithFn& u, const ArithFn& v, std::int64_t n);

/// Deformed convolution (U * V)_n(q) = sum_{k|n} U_k(q) V_{n/k}(q^k).
/// Not commutative, still associative.
HalfLaurent convolve_q(const QArithFn& u, const QArithFn& v, std::int64_t n);

/// Convolution of an arithmetic function with a function on an N*-set:
/// (u * F)(x) = sum_{n|x} u(n) F(x/n), where the action supplies the divisor
/// list of x and the exact division x/n. When F takes HalfLaurent values the
/// deformed rule applies: (u * F)(x)(q) = sum_{n|x} u(n) F(x/n)(q^n).
template <class X, class F, class DivisorsOf, class DivideBy>
auto convolve_action(const ArithFn& u, F&& f, const X& x, DivisorsOf&& divisors_of,
                     DivideBy&& divide_by) {
  using R = std::decay_t<decltype(f(x))>;
  R total{};
  for (std::int64_t n : divisors_of(x)) {
    R value = f(divide_by(x, n));
    if constexpr (std::is_same_v<R, HalfLaurent>) {
      total += u(n) * value.substituted(n);
    } else {
      total += u(n) * value;
    }
  }
  return total;
}

}  // namespace pearl
