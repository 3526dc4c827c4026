#include "pearl/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pearl {

std::vector<std::vector<std::int64_t>> compositions(std::int64_t n, int parts) {
  std::vector<std::vector<std::int64_t>> out;
  if (parts < 1 || n < parts) return out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(parts));
  auto rec = [&](auto&& self, int idx, std::int64_t left) -> void {
    if (idx == parts - 1) {
      cur[static_cast<std::size_t>(idx)] = left;
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 1; v <= left - (parts - 1 - idx); ++v) {
      cur[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

namespace {

using Pair = std::pair<int, int>;  // unordered skeleton edge, first <= second

// All labeled trees on the given vertices, via Prufer sequences.
std::vector<std::vector<Pair>> labeled_trees(const std::vector<int>& verts) {
  const int p = static_cast<int>(verts.size());
  std::vector<std::vector<Pair>> out;
  if (p == 1) {
    out.push_back({});
    return out;
  }
  if (p == 2) {
    out.push_back({{verts[0], verts[1]}});
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(p - 2), 0);
  auto decode = [&]() {
    std::map<int, int> deg;
    for (int v : verts) deg[v] = 1;
    for (int s : seq) ++deg[s];
    std::vector<Pair> edges;
    std::set<int> leaves;
    for (int v : verts)
      if (deg[v] == 1) leaves.insert(v);
    for (int s : seq) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({std::min(leaf, s), std::max(leaf, s)});
      if (--deg[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    edges.push_back({std::min(a, b), std::max(a, b)});
    return edges;
  };
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == p - 2) {
      out.push_back(decode());
      return;
    }
    for (int v : verts) {
      seq[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool connected_with(const std::vector<int>& verts, const std::vector<Pair>& edges) {
  std::map<int, std::vector<int>> adj;
  for (int v : verts) adj[v];
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<int> seen;
  std::vector<int> stack{verts[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    for (int u : adj[v]) stack.push_back(u);
  }
  return seen.size() == verts.size();
}

// Connected unicyclic multigraphs on the given vertices: multisets of exactly
// |verts| unordered pairs (self-loops allowed) whose graph is connected.
std::vector<std::vector<Pair>> unicyclic_skeletons(const std::vector<int>& verts) {
  std::vector<Pair> kinds;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i; j < verts.size(); ++j) kinds.push_back({verts[i], verts[j]});
  const int want = static_cast<int>(verts.size());
  std::vector<std::vector<Pair>> out;
  std::vector<Pair> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == want) {
      if (connected_with(verts, cur)) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < kinds.size(); ++i) {
      cur.push_back(kinds[i]);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct Builder {
  int genus;
  std::int64_t d1, d2;
  DiagramKind kind;
  std::vector<Diagram> found;

  std::vector<int> pearls, flats;
  std::vector<std::int64_t> degrees;  // aligned with pearls
  std::vector<Edge> edges;            // lengths filled last

  void emit_with_lengths() {
    // Solve sum w_e * l_e = d1 with l_e >= min_length(e).
    std::int64_t base = 0;
    for (const auto& e : edges) base += e.weight * min_length(e.src, e.dst);
    if (base > d1) return;
    std::vector<std::int64_t> extra(edges.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, std::int64_t left) -> void {
      if (idx == edges.size()) {
        if (left != 0) return;
        Diagram d;
        d.kind = kind;
        d.genus = genus;
        const int L = kind == DiagramKind::Point ? genus : genus - 1;
        d.vertices.resize(static_cast<std::size_t>(L));
        for (int i = 0; i < L; ++i) d.vertices[static_cast<std::size_t>(i)] = {i + 1, VertexKind::Flat, 0};
        for (std::size_t i = 0; i < pearls.size(); ++i)
          d.vertices[static_cast<std::size_t>(pearls[i]) - 1] = {pearls[i], VertexKind::Pearl, degrees[i]};
        d.edges = edges;
        for (std::size_t i = 0; i < edges.size(); ++i)
          d.edges[i].length = min_length(edges[i].src, edges[i].dst) + extra[i];
        normalize(d);
        found.push_back(std::move(d));
        return;
      }
      for (std::int64_t t = 0; t * edges[idx].weight <= left; ++t) {
        extra[idx] = t;
        self(self, idx + 1, left - t * edges[idx].weight);
      }
      extra[idx] = 0;
    };
    rec(rec, 0, d1 - base);
  }

  bool pearls_balanced() const {
    for (int p : pearls) {
      std::int64_t in = 0, out = 0;
      for (const auto& e : edges) {
        if (e.dst == p) in += e.weight;
        if (e.src == p) out += e.weight;
      }
      if (in != out) return false;
    }
    return true;
  }

  // Attach every flat vertex as a two-edge chain pearl -> flat -> pearl.
  void assign_flats(std::size_t idx) {
    if (idx == flats.size()) {
      if (pearls_balanced()) emit_with_lengths();
      return;
    }
    const int v = flats[idx];
    for (int tail : pearls)
      for (int head : pearls)
        for (std::int64_t w = 1; w <= d1; ++w) {
          edges.push_back({tail, v, w, 0});
          edges.push_back({v, head, w, 0});
          assign_flats(idx + 1);
          edges.pop_back();
          edges.pop_back();
        }
  }

  // Orient and weight the skeleton edges, then handle flats.
  void assign_skeleton(const std::vector<Pair>& skel, std::size_t idx) {
    if (idx == skel.size()) {
      assign_flats(0);
      return;
    }
    auto [a, b] = skel[idx];
    const int norient = a == b ? 1 : 2;
    for (int o = 0; o < norient; ++o) {
      const int src = o == 0 ? a : b;
      const int dst = o == 0 ? b : a;
      for (std::int64_t w = 1; w <= d1; ++w) {
        edges.push_back({src, dst, w, 0});
        assign_skeleton(skel, idx + 1);
        edges.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<Diagram> enumerate_diagrams(int genus, std::int64_t d1, std::int64_t d2,
                                        DiagramKind kind) {
  if (genus < 2) throw std::domain_error("enumerate_diagrams requires genus >= 2");
  if (d1 < 0 || d2 < 1) throw std::domain_error("enumerate_diagrams requires d1 >= 0, d2 >= 1");

  Builder b{genus, d1, d2, kind, {}, {}, {}, {}, {}};
  const int L = kind == DiagramKind::Point ? genus : genus - 1;

  // Any valid diagram has every flat vertex alone on a two-edge chain between
  // pearls, and w_e <= d1 for every edge (the cover degree over any generic
  // point of the circle equals d1). The stages below range over exactly that
  // space: label split, pearl degrees, pearl skeleton (tree, or connected
  // unicyclic for the FLS kind), chain attachments, weights, lengths.
  for (int mask = 1; mask < (1 << L); ++mask) {
    if (kind == DiagramKind::Fls && !(mask >> (L - 1) & 1)) continue;  // infinity is a pearl
    b.pearls.clear();
    b.flats.clear();
    for (int i = 0; i < L; ++i)
      (mask >> i & 1 ? b.pearls : b.flats).push_back(i + 1);
    if (static_cast<std::int64_t>(b.pearls.size()) > d2) continue;

    const auto skeletons = kind == DiagramKind::Point ? labeled_trees(b.pearls)
                                                      : unicyclic_skeletons(b.pearls);
    for (auto& degs : compositions(d2, static_cast<int>(b.pearls.size()))) {
      b.degrees = degs;
      for (const auto& skel : skeletons) b.assign_skeleton(skel, 0);
    }
  }

  std::sort(b.found.begin(), b.found.end());
  b.found.erase(std::unique(b.found.begin(), b.found.end()), b.found.end());
  return b.found;
}

}  // namespace pearl
