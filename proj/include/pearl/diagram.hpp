#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pearl {

enum class DiagramKind { Point, Fls };
enum class VertexKind { Flat, Pearl };

struct Vertex {
  int label = 0;  // circular position, 1-based
  VertexKind kind = VertexKind::Flat;
  std::int64_t degree = 0;  // pearls only
  auto operator<=>(const Vertex&) const = default;
};

struct Edge {
  int src = 0;
  int dst = 0;
  std::int64_t weight = 1;
  std::int64_t length = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Pearl diagram: connected oriented weighted labeled multigraph. Vertices are
/// labeled by circular positions 1..label_count(); edges are stored oriented
/// and sorted, so (kind, genus, vertices, edges) is the canonical key and the
/// defaulted comparison decides diagram equality.
///
/// Point kind carries labels 1..g. FLS kind carries labels 1..g-1 where the
/// last position is the unmarked pearl, rendered "inf"; its circular position
/// is fixed after the g-2 marked points.
struct Diagram {
  DiagramKind kind = DiagramKind::Point;
  int genus = 0;
  std::vector<Vertex> vertices;  // sorted by label, labels 1..label_count()
  std::vector<Edge> edges;       // sorted lexicographically

  int label_count() const { return kind == DiagramKind::Point ? genus : genus - 1; }
  int infinity_label() const { return genus - 1; }  // FLS only

  const Vertex& vertex(int label) const { return vertices[static_cast<std::size_t>(label) - 1]; }
  bool is_pearl(int label) const { return vertex(label).kind == VertexKind::Pearl; }

  std::vector<int> pearl_labels() const;
  std::vector<int> flat_labels() const;

  /// Number of edge ends at the vertex; a self-loop counts twice.
  int valence(int label) const;

  /// Indices into edges of the pearl-pearl edges (E_square).
  std::vector<std::size_t> pearl_pearl_edges() const;

  auto operator<=>(const Diagram&) const = default;
};

/// Sort edges into the canonical order.
void normalize(Diagram& d);

/// Minimal admissible length for an oriented edge: 0 when the tail label
/// precedes the head label on the circle, 1 otherwise.
inline std::int64_t min_length(int src, int dst) { return src < dst ? 0 : 1; }

/// Every violated invariant by name; empty means valid.
std::vector<std::string> validate(const Diagram& d);

/// (d1, d2) = (sum w_e l_e, sum of pearl degrees).
std::pair<std::int64_t, std::int64_t> bidegree(const Diagram& d);

/// gcd of all edge weights and pearl degrees.
std::int64_t diagram_gcd(const Diagram& d);

/// N*-action inverse: weights and degrees divided by k, lengths and labels
/// unchanged. k must divide diagram_gcd(d).
Diagram divide(const Diagram& d, std::int64_t k);

/// N*-action: weights and degrees multiplied by k.
Diagram multiply(const Diagram& d, std::int64_t k);

/// |sum_e eps_e l_e| over the unique cycle of the pearl skeleton (FLS only).
std::int64_t cycle_class(const Diagram& d);

/// Times the oriented edge passes over a generic point inside the circular
/// arc (arc, arc+1), with arc = label_count() meaning the arc through 0.
std::int64_t edge_cover_count(const Diagram& d, const Edge& e, int arc);

nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

std::string kind_name(DiagramKind k);

}  // namespace pearl
