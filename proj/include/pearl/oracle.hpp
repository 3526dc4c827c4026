#pragma once

#include <cstdint>
#include <vector>

#include "pearl/bigint.hpp"
#include "pearl/diagram.hpp"
#include "pearl/mult.hpp"

namespace pearl {

using IntMatrix = std::vector<std::vector<Int>>;

/// Which flag position the linear-system row of the FLS lattice map measures
/// per intersected edge. The minor gcd is independent of the choice; both are
/// kept so that independence can be asserted.
enum class MomentEnd { Head, Tail };

struct OracleOptions {
  MomentEnd moment_end = MomentEnd::Head;
  /// Gcd of all maximal minors via direct determinant enumeration (Bareiss)
  /// instead of Smith reduction; kept as a self-check for small matrices.
  bool direct_minors = false;
};

/// The lattice map that reconstructs curves from a diagram, as an (n+1) x n
/// integer matrix, n = 2|E|. Columns are flags, ordered (tail, head) per edge in
/// canonical edge order. Rows: the FLS linear-system row first (FLS kind
/// only), then gluing rows per edge, evaluation rows per flat vertex
/// (outgoing flag then incoming flag, by label), then one Menelaus row per
/// pearl by label.
IntMatrix oracle_matrix(const Diagram& d, const LoopData& ld, MomentEnd end = MomentEnd::Head);

/// gcd of all maximal minors: product of the Smith invariant factors.
/// Returns 0 when the rank is deficient.
Int maximal_minor_gcd(const IntMatrix& m);

/// Same via explicit enumeration of the n+1 maximal minors.
Int maximal_minor_gcd_direct(const IntMatrix& m);

Int det_bareiss(IntMatrix m);

/// Independent curve count from the gcd of the maximal minors of the lattice
/// map, with the deck normalization of the reconstruction: the point kind
/// returns the raw gcd (deck transformations cancel against marked-point
/// lifts); the FLS kind multiplies by d_infinity (positions of the unmarked
/// pearl) and divides by k_infinity (its deck transformations). FLS diagrams
/// with cycle class 0 encode no curves and yield 0; any other rank-deficient
/// map signals a construction bug and throws.
Int curve_count_oracle(const Diagram& d, const LoopData& ld, OracleOptions opts = {});

}  // namespace pearl
