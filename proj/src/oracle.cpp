#include "pearl/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pearl {

IntMatrix oracle_matrix(const Diagram& d, const LoopData& ld, MomentEnd end) {
  check_loop_data(d, ld);
  auto kv = [&](int label) -> std::int64_t {
    return d.is_pearl(label) ? ld.at(label) : 1;
  };
  const std::size_t ncols = 2 * d.edges.size();
  auto tail_col = [](std::size_t e) { return 2 * e; };
  auto head_col = [](std::size_t e) { return 2 * e + 1; };

  IntMatrix rows;
  auto new_row = [&]() -> std::vector<Int>& {
    rows.emplace_back(ncols, Int(0));
    return rows.back();
  };

  if (d.kind == DiagramKind::Fls) {
    // Moments of the edges meeting the vertical loop; each edge of length l
    // meets it l times.
    auto& row = new_row();
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
      const Edge& e = d.edges[i];
      if (e.length > 0) {
        if (end == MomentEnd::Head)
          row[head_col(i)] += Int(e.length) * e.weight * kv(e.dst);
        else
          row[tail_col(i)] += Int(e.length) * e.weight * kv(e.src);
      }
    }
  }

  // Gluing per edge: k_{head} x+ - k_{tail} x-.
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    auto& row = new_row();
    row[head_col(i)] += kv(d.edges[i].dst);
    row[tail_col(i)] -= kv(d.edges[i].src);
  }

  // Evaluations at flat vertices: the outgoing flag and the incoming flag are
  // both pinned by the point constraint.
  for (int f : d.flat_labels()) {
    for (std::size_t i = 0; i < d.edges.size(); ++i)
      if (d.edges[i].src == f) new_row()[tail_col(i)] = 1;
    for (std::size_t i = 0; i < d.edges.size(); ++i)
      if (d.edges[i].dst == f) new_row()[head_col(i)] = 1;
  }

  // Menelaus per pearl: signed weighted sum of its flags.
  for (int p : d.pearl_labels()) {
    auto& row = new_row();
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
      if (d.edges[i].dst == p) row[head_col(i)] += d.edges[i].weight;
      if (d.edges[i].src == p) row[tail_col(i)] -= d.edges[i].weight;
    }
  }

  if (rows.size() != ncols + 1) throw std::logic_error("oracle matrix must be (n+1) x n");
  return rows;
}

Int det_bareiss(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int maximal_minor_gcd_direct(const IntMatrix& m) {
  const std::size_t ncols = m[0].size();
  if (m.size() != ncols + 1) throw std::invalid_argument("expected an (n+1) x n matrix");
  Int g = 0;
  for (std::size_t skip = 0; skip < m.size(); ++skip) {
    IntMatrix sub;
    sub.reserve(ncols);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != skip) sub.push_back(m[i]);
    g = gcd(g, abs(det_bareiss(std::move(sub))));
  }
  return g;
}

Int maximal_minor_gcd(const IntMatrix& input) {
  // Smith reduction by unimodular row/column operations; the product of the
  // invariant factors is the gcd of the maximal minors.
  IntMatrix m = input;
  const std::size_t nrows = m.size(), ncols = m[0].size();
  Int product = 1;
  std::size_t r = 0, c = 0;
  while (r < nrows && c < ncols) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    std::size_t pi = nrows, pj = ncols;
    for (std::size_t i = r; i < nrows; ++i)
      for (std::size_t j = c; j < ncols; ++j)
        if (m[i][j] != 0 && (pi == nrows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == nrows) break;  // remaining block is zero
    std::swap(m[r], m[pi]);
    for (std::size_t i = 0; i < nrows; ++i) std::swap(m[i][c], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r + 1; i < nrows; ++i)
        if (m[i][c] != 0) {
          const Int q = m[i][c] / m[r][c];
          for (std::size_t j = c; j < ncols; ++j) m[i][j] -= q * m[r][j];
          if (m[i][c] != 0) {  // remainder smaller than pivot: swap up, repeat
            std::swap(m[r], m[i]);
            clean = false;
          }
        }
      for (std::size_t j = c + 1; j < ncols; ++j)
        if (m[r][j] != 0) {
          const Int q = m[r][j] / m[r][c];
          for (std::size_t i = r; i < nrows; ++i) m[i][j] -= q * m[i][c];
          if (m[r][j] != 0) {
            for (std::size_t i = 0; i < nrows; ++i) std::swap(m[i][c], m[i][j]);
            clean = false;
          }
        }
    }
    product *= abs(m[r][c]);
    ++r;
    ++c;
  }
  return r == ncols ? product : Int(0);
}

Int curve_count_oracle(const Diagram& d, const LoopData& ld, OracleOptions opts) {
  const IntMatrix m = oracle_matrix(d, ld, opts.moment_end);
  const Int g = opts.direct_minors ? maximal_minor_gcd_direct(m) : maximal_minor_gcd(m);
  if (g == 0) {
    // With cycle class 0 the moment row degenerates and the map genuinely
    // drops rank: the constraint cannot be met, so no curves.
    if (d.kind == DiagramKind::Fls && cycle_class(d) == 0) return 0;
    throw std::runtime_error("curve_count_oracle: rank-deficient lattice map");
  }
  if (d.kind == DiagramKind::Point) return g;
  const int inf = d.infinity_label();
  const Int scaled = g * d.vertex(inf).degree;
  if (scaled % ld.at(inf) != 0)
    throw std::runtime_error("curve_count_oracle: deck normalization must divide exactly");
  return scaled / ld.at(inf);
}

}  // namespace pearl
