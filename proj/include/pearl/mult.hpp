#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pearl/bigint.hpp"
#include "pearl/diagram.hpp"
#include "pearl/qpoly.hpp"

namespace pearl {

/// Loop data: pearl label -> k with k | d_pearl. Flat vertices implicitly
/// carry k = 1.
using LoopData = std::map<int, std::int64_t>;

/// Throws std::invalid_argument unless ld assigns a divisor of the degree to
/// every pearl of d and nothing else.
void check_loop_data(const Diagram& d, const LoopData& ld);

/// All loop data of the diagram, in deterministic order.
std::vector<LoopData> all_loop_data(const Diagram& d);

/// gcd({w_e} over edges, {k_p} over pearls).
std::int64_t loop_gcd(const Diagram& d, const LoopData& ld);

/// Classical per-loop-data multiplicity:
///   xi = prod_p d_p^{val p - 1} (d_p/k_p) * prod_e w_e^{#pearl ends + [E_square]}
/// times Lambda^2 d_infinity in the FLS kind. A self-loop counts its pearl
/// twice, both in the valence and in the weight exponent.
Int xi(const Diagram& d, const LoopData& ld);

/// Refined per-loop-data multiplicity:
///   Xi = prod_p k_p^{val p - 1} prod_{flags (p,e)} [ (d_p/k_p) w_e ]_-
///        * prod_{E_square} w_e
/// times Lambda^2 d_infinity in the FLS kind.
HalfLaurent Xi(const Diagram& d, const LoopData& ld);

/// Number of tropical curves encoded by (d, ld) in the class with off-diagonal
/// entry a: gcd(w_e,k_p) prod_p k_p^{val p - 1} prod_{E_square} w_e, with the
/// FLS kind carrying the extra Lambda * d_infinity / k_infinity factor.
/// Zero when a >= 1 and gcd(w_e,k_p) does not divide a; a = 0 puts no
/// restriction (every loop data contributes).
Int curve_count(const Diagram& d, const LoopData& ld, std::int64_t a);

/// m_a / M_a: sums over loop data of gcd * xi (resp. gcd * Xi), restricted to
/// gcd(w_e,k_p) | a when a >= 1.
Int m_a(const Diagram& d, std::int64_t a);
HalfLaurent M_a(const Diagram& d, std::int64_t a);

/// omega / Omega: unrestricted loop-data sums in closed product form.
Int omega(const Diagram& d);
HalfLaurent Omega(const Diagram& d);

/// omega_k / Omega_k restrict the loop-data sum to gcd(w_e,k_p) = k. Both code
/// paths are kept: the restricted sum, and the homogeneity identity
/// omega_k(D) = k^{4g-5} omega_1(D/k) (FLS: k^{4g-3}) resp.
/// Omega_k(D) = k^{2g-3} Omega_1(D/k)(q^k) (FLS: k^{2g-1}).
enum class SubscriptRoute { RestrictedSum, Homogeneity };
Int omega_k(const Diagram& d, std::int64_t k, SubscriptRoute route = SubscriptRoute::RestrictedSum);
HalfLaurent Omega_k(const Diagram& d, std::int64_t k,
                    SubscriptRoute route = SubscriptRoute::RestrictedSum);

inline Int m0(const Diagram& d) { return m_a(d, 0); }
inline HalfLaurent M0(const Diagram& d) { return M_a(d, 0); }
inline Int mu1(const Diagram& d) { return m_a(d, 1); }
inline HalfLaurent Upsilon1(const Diagram& d) { return M_a(d, 1); }

/// mu = eps_{4g-3} * mu1 over diagram divisors (FLS: eps_{4g-1}).
Int mu(const Diagram& d);

/// Upsilon = (eps_{2g-2} phi) * M0 over diagram divisors with the deformed
/// q -> q^k rule (FLS: eps_{2g} phi).
HalfLaurent Upsilon(const Diagram& d);

}  // namespace pearl
