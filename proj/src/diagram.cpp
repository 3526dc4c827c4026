#include "pearl/diagram.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace pearl {

std::vector<int> Diagram::pearl_labels() const {
  std::vector<int> out;
  for (const auto& v : vertices)
    if (v.kind == VertexKind::Pearl) out.push_back(v.label);
  return out;
}

std::vector<int> Diagram::flat_labels() const {
  std::vector<int> out;
  for (const auto& v : vertices)
    if (v.kind == VertexKind::Flat) out.push_back(v.label);
  return out;
}

int Diagram::valence(int label) const {
  int n = 0;
  for (const auto& e : edges) n += (e.src == label) + (e.dst == label);
  return n;
}

std::vector<std::size_t> Diagram::pearl_pearl_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (is_pearl(edges[i].src) && is_pearl(edges[i].dst)) out.push_back(i);
  return out;
}

void normalize(Diagram& d) {
  std::sort(d.vertices.begin(), d.vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.label < b.label; });
  std::sort(d.edges.begin(), d.edges.end());
}

namespace {

// First Betti number of the subgraph induced on `keep`, or -1 if disconnected.
int induced_b1(const Diagram& d, const std::set<int>& keep) {
  if (keep.empty()) return -1;
  std::map<int, std::vector<int>> adj;
  int nedges = 0;
  for (int v : keep) adj[v];
  for (const auto& e : d.edges) {
    if (keep.count(e.src) && keep.count(e.dst)) {
      adj[e.src].push_back(e.dst);
      adj[e.dst].push_back(e.src);
      ++nedges;
    }
  }
  std::set<int> seen;
  std::deque<int> queue{*keep.begin()};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (!seen.insert(v).second) continue;
    for (int u : adj[v]) queue.push_back(u);
  }
  if (seen.size() != keep.size()) return -1;
  return nedges - static_cast<int>(keep.size()) + 1;
}

}  // namespace

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> out;
  const int L = d.label_count();
  if (d.genus < 2) out.push_back("genus below 2");
  bool labels_ok = static_cast<int>(d.vertices.size()) == L && L >= 1;
  if (labels_ok)
    for (int i = 0; i < L; ++i)
      if (d.vertices[static_cast<std::size_t>(i)].label != i + 1) labels_ok = false;
  if (!labels_ok) {
    out.push_back("label set invalid");
    return out;  // nothing else is meaningful
  }
  for (const auto& e : d.edges)
    if (e.src < 1 || e.src > L || e.dst < 1 || e.dst > L) {
      out.push_back("edge endpoint out of range");
      return out;
    }

  if (d.kind == DiagramKind::Fls && !d.is_pearl(d.infinity_label()))
    out.push_back("infinity label must lie on a pearl");

  for (const auto& v : d.vertices)
    if (v.kind == VertexKind::Pearl && v.degree < 1) out.push_back("pearl degree not positive");

  for (int f : d.flat_labels())
    if (d.valence(f) != 2) out.push_back("flat vertex not bivalent");

  for (const auto& e : d.edges) {
    if (e.weight < 1) out.push_back("edge weight not positive");
    if (e.length < min_length(e.src, e.dst)) out.push_back("edge length violates label order rule");
  }

  for (const auto& v : d.vertices) {
    std::int64_t in = 0, outw = 0;
    for (const auto& e : d.edges) {
      if (e.dst == v.label) in += e.weight;
      if (e.src == v.label) outw += e.weight;
    }
    if (in != outw) out.push_back("vertex not balanced");
  }

  std::set<int> all;
  for (int i = 1; i <= L; ++i) all.insert(i);
  const int whole_b1 = induced_b1(d, all);
  if (whole_b1 < 0) out.push_back("graph not connected");

  std::set<int> pearls;
  for (int p : d.pearl_labels()) pearls.insert(p);
  if (pearls.empty()) {
    out.push_back("complement of flat vertices not connected");
  } else {
    const int b1 = induced_b1(d, pearls);
    if (b1 < 0)
      out.push_back("complement of flat vertices not connected");
    else if (d.kind == DiagramKind::Point && b1 != 0)
      out.push_back("complement of flat vertices has a cycle");
    else if (d.kind == DiagramKind::Fls && b1 != 1)
      out.push_back("complement of flat vertices must contain a unique cycle");
  }

  if (whole_b1 >= 0 && whole_b1 + static_cast<int>(pearls.size()) != d.genus)
    out.push_back("genus mismatch");

  return out;
}

std::pair<std::int64_t, std::int64_t> bidegree(const Diagram& d) {
  std::int64_t d1 = 0, d2 = 0;
  for (const auto& e : d.edges) d1 += e.weight * e.length;
  for (const auto& v : d.vertices)
    if (v.kind == VertexKind::Pearl) d2 += v.degree;
  return {d1, d2};
}

std::int64_t diagram_gcd(const Diagram& d) {
  std::int64_t g = 0;
  for (const auto& e : d.edges) g = std::gcd(g, e.weight);
  for (const auto& v : d.vertices)
    if (v.kind == VertexKind::Pearl) g = std::gcd(g, v.degree);
  return g;
}

Diagram divide(const Diagram& d, std::int64_t k) {
  if (k < 1 || diagram_gcd(d) % k != 0)
    throw std::domain_error("divide: k does not divide the diagram gcd");
  Diagram out = d;
  for (auto& e : out.edges) e.weight /= k;
  for (auto& v : out.vertices)
    if (v.kind == VertexKind::Pearl) v.degree /= k;
  return out;
}

Diagram multiply(const Diagram& d, std::int64_t k) {
  if (k < 1) throw std::domain_error("multiply requires k >= 1");
  Diagram out = d;
  for (auto& e : out.edges) e.weight *= k;
  for (auto& v : out.vertices)
    if (v.kind == VertexKind::Pearl) v.degree *= k;
  return out;
}

std::int64_t cycle_class(const Diagram& d) {
  if (d.kind != DiagramKind::Fls) throw std::domain_error("cycle_class is defined for FLS diagrams");
  const auto sq = d.pearl_pearl_edges();

  // Union-find over pearls; exactly one skeleton edge closes the unique cycle.
  std::map<int, int> parent;
  for (int p : d.pearl_labels()) parent[p] = p;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<std::size_t> tree;
  std::optional<std::size_t> extra;
  for (std::size_t i : sq) {
    int a = find(d.edges[i].src), b = find(d.edges[i].dst);
    if (a == b) {
      extra = i;
    } else {
      parent[a] = b;
      tree.push_back(i);
    }
  }
  if (!extra) throw std::domain_error("cycle_class: pearl skeleton has no cycle");

  const Edge& e0 = d.edges[*extra];
  if (e0.src == e0.dst) return std::abs(e0.length);  // self-loop is the cycle

  // Tree path from e0.dst back to e0.src; +1 when a tree edge is traversed
  // along its orientation.
  std::map<int, std::vector<std::pair<int, std::int64_t>>> adj;  // v -> (u, signed length)
  for (std::size_t i : tree) {
    const Edge& e = d.edges[i];
    adj[e.src].push_back({e.dst, e.length});
    adj[e.dst].push_back({e.src, -e.length});
  }
  std::map<int, std::pair<int, std::int64_t>> prev;  // v -> (parent, signed length of step parent->v)
  std::deque<int> queue{e0.dst};
  std::set<int> seen{e0.dst};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == e0.src) break;
    for (auto [u, slen] : adj[v])
      if (seen.insert(u).second) {
        prev[u] = {v, slen};
        queue.push_back(u);
      }
  }
  std::int64_t lam = e0.length;
  int v = e0.src;
  while (v != e0.dst) {
    auto [u, slen] = prev.at(v);
    lam += slen;
    v = u;
  }
  return std::abs(lam);
}

std::int64_t edge_cover_count(const Diagram& d, const Edge& e, int arc) {
  // Wraps beyond the base arc from src forward to dst; a self-loop's base arc
  // is the full circle.
  const std::int64_t extra_loops = e.length - (e.src >= e.dst ? 1 : 0);
  bool in_arc;
  if (e.src == e.dst)
    in_arc = true;
  else if (e.src < e.dst)
    in_arc = arc >= e.src && arc < e.dst;
  else
    in_arc = arc >= e.src || arc < e.dst;
  (void)d;
  return extra_loops + (in_arc ? 1 : 0);
}

std::string kind_name(DiagramKind k) { return k == DiagramKind::Point ? "point" : "fls"; }

namespace {

nlohmann::json label_to_json(const Diagram& d, int label) {
  if (d.kind == DiagramKind::Fls && label == d.infinity_label()) return "inf";
  return label;
}

int label_from_json(const Diagram& d, const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf" && d.kind == DiagramKind::Fls) return d.infinity_label();
    throw std::invalid_argument("unknown vertex label " + j.dump());
  }
  return j.get<int>();
}

}  // namespace

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : d.vertices) {
    nlohmann::json jv;
    jv["label"] = label_to_json(d, v.label);
    jv["kind"] = v.kind == VertexKind::Pearl ? "pearl" : "flat";
    if (v.kind == VertexKind::Pearl) jv["degree"] = v.degree;
    verts.push_back(jv);
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : d.edges)
    edges.push_back({{"src", label_to_json(d, e.src)},
                     {"dst", label_to_json(d, e.dst)},
                     {"weight", e.weight},
                     {"length", e.length}});
  return {{"kind", kind_name(d.kind)}, {"genus", d.genus}, {"vertices", verts}, {"edges", edges}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  Diagram d;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "point")
    d.kind = DiagramKind::Point;
  else if (kind == "fls")
    d.kind = DiagramKind::Fls;
  else
    throw std::invalid_argument("unknown diagram kind " + kind);
  d.genus = j.at("genus").get<int>();
  for (const auto& jv : j.at("vertices")) {
    Vertex v;
    v.label = label_from_json(d, jv.at("label"));
    const std::string vk = jv.at("kind").get<std::string>();
    if (vk == "pearl") {
      v.kind = VertexKind::Pearl;
      v.degree = jv.at("degree").get<std::int64_t>();
    } else if (vk == "flat") {
      v.kind = VertexKind::Flat;
    } else {
      throw std::invalid_argument("unknown vertex kind " + vk);
    }
    d.vertices.push_back(v);
  }
  for (const auto& je : j.at("edges")) {
    Edge e;
    e.src = label_from_json(d, je.at("src"));
    e.dst = label_from_json(d, je.at("dst"));
    e.weight = je.at("weight").get<std::int64_t>();
    e.length = je.at("length").get<std::int64_t>();
    d.edges.push_back(e);
  }
  normalize(d);
  return d;
}

}  // namespace pearl
