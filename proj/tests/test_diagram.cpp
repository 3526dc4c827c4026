#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pearl/diagram.hpp"
#include "pearl/enumerate.hpp"

using namespace pearl;

namespace {

// Figure-style genus 2 diagram: one pearl, one flat vertex, two weight-1
// edges both of length 1 (tropical cover degree 2).
Diagram figure_a(std::int64_t pearl_degree) {
  Diagram d;
  d.kind = DiagramKind::Point;
  d.genus = 2;
  d.vertices = {{1, VertexKind::Pearl, pearl_degree}, {2, VertexKind::Flat, 0}};
  d.edges = {{1, 2, 1, 1}, {2, 1, 1, 1}};
  normalize(d);
  return d;
}

// Genus 2 primitive shape on bidegree (1, n): lengths {0, 1}.
Diagram primitive_g2(std::int64_t n) {
  Diagram d = figure_a(n);
  d.edges = {{1, 2, 1, 0}, {2, 1, 1, 1}};
  normalize(d);
  return d;
}

Diagram fls_self_loop(std::int64_t n, std::int64_t w, std::int64_t l) {
  Diagram d;
  d.kind = DiagramKind::Fls;
  d.genus = 2;
  d.vertices = {{1, VertexKind::Pearl, n}};
  d.edges = {{1, 1, w, l}};
  return d;
}

}  // namespace

TEST_CASE("validate accepts the figure diagram") {
  CHECK(validate(figure_a(3)).empty());
  CHECK(bidegree(figure_a(3)) == std::pair<std::int64_t, std::int64_t>{2, 3});
}

TEST_CASE("validate names violations") {
  Diagram d = figure_a(2);
  d.edges.push_back({1, 2, 1, 0});
  normalize(d);
  auto v = validate(d);
  CHECK(std::find(v.begin(), v.end(), "flat vertex not bivalent") != v.end());

  Diagram two_pearls;
  two_pearls.kind = DiagramKind::Point;
  two_pearls.genus = 2;
  two_pearls.vertices = {{1, VertexKind::Pearl, 1}, {2, VertexKind::Pearl, 1}};
  two_pearls.edges = {{1, 2, 1, 0}, {2, 1, 1, 1}};
  normalize(two_pearls);
  auto v2 = validate(two_pearls);
  CHECK(std::find(v2.begin(), v2.end(), "complement of flat vertices has a cycle") != v2.end());

  Diagram unbalanced = figure_a(2);
  unbalanced.edges[0].weight = 2;
  auto v3 = validate(unbalanced);
  CHECK(std::find(v3.begin(), v3.end(), "vertex not balanced") != v3.end());

  Diagram bad_len = figure_a(2);
  for (auto& e : bad_len.edges)
    if (e.src == 2) e.length = 0;
  auto v4 = validate(bad_len);
  CHECK(std::find(v4.begin(), v4.end(), "edge length violates label order rule") != v4.end());
}

TEST_CASE("bidegree examples") {
  CHECK(bidegree(primitive_g2(5)) == std::pair<std::int64_t, std::int64_t>{1, 5});
  CHECK(validate(fls_self_loop(4, 1, 1)).empty());
  CHECK(bidegree(fls_self_loop(4, 1, 1)) == std::pair<std::int64_t, std::int64_t>{1, 4});
}

TEST_CASE("diagram_gcd") {
  CHECK(diagram_gcd(primitive_g2(7)) == 1);
  Diagram d = figure_a(2);
  for (auto& e : d.edges) e.weight = 2;
  d.vertices[0].degree = 2;
  CHECK(diagram_gcd(d) == 2);
  d.vertices[0].degree = 3;
  CHECK(diagram_gcd(d) == 1);
}

TEST_CASE("divide and multiply") {
  Diagram d = figure_a(2);
  for (auto& e : d.edges) e.weight = 2;
  CHECK(validate(d).empty());
  CHECK(divide(d, 1) == d);
  Diagram half = divide(d, 2);
  CHECK(diagram_gcd(half) == 1);
  CHECK(half.vertices[0].degree == 1);
  for (const auto& e : half.edges) CHECK(e.weight == 1);
  CHECK(multiply(half, 2) == d);
  CHECK(validate(multiply(d, 3)).empty());
  CHECK_THROWS_AS(divide(d, 3), std::domain_error);
  CHECK_THROWS_AS(divide(half, 2), std::domain_error);
}

TEST_CASE("cycle_class") {
  CHECK(cycle_class(fls_self_loop(3, 1, 1)) == 1);
  CHECK(cycle_class(fls_self_loop(3, 1, 2)) == 2);
  CHECK_THROWS_AS(cycle_class(primitive_g2(2)), std::domain_error);

  // Circle of pearls, one edge of length 1, consistent orientation.
  Diagram circle;
  circle.kind = DiagramKind::Fls;
  circle.genus = 4;
  circle.vertices = {{1, VertexKind::Pearl, 1}, {2, VertexKind::Pearl, 1},
                     {3, VertexKind::Pearl, 1}};
  circle.edges = {{1, 2, 1, 0}, {2, 3, 1, 0}, {3, 1, 1, 1}};
  normalize(circle);
  CHECK(validate(circle).empty());
  CHECK(cycle_class(circle) == 1);

  // Parallel pair traversed in opposite directions: contributions cancel.
  Diagram cancel;
  cancel.kind = DiagramKind::Fls;
  cancel.genus = 4;
  cancel.vertices = {{1, VertexKind::Pearl, 1}, {2, VertexKind::Flat, 0},
                     {3, VertexKind::Pearl, 1}};
  cancel.edges = {{1, 3, 1, 1}, {1, 3, 1, 1}, {3, 2, 2, 1}, {2, 1, 2, 1}};
  normalize(cancel);
  CHECK(validate(cancel).empty());
  CHECK(cycle_class(cancel) == 0);
}

TEST_CASE("json round-trip") {
  for (DiagramKind kind : {DiagramKind::Point, DiagramKind::Fls}) {
    for (auto [d1, d2] : {std::pair<std::int64_t, std::int64_t>{1, 2}, {2, 2}}) {
      for (const auto& d : enumerate_diagrams(3, d1, d2, kind)) {
        CHECK(diagram_from_json(to_json(d)) == d);
      }
    }
  }
  // The unmarked pearl is rendered "inf".
  nlohmann::json j = to_json(fls_self_loop(2, 1, 1));
  CHECK(j["vertices"][0]["label"] == "inf");
  CHECK(j["edges"][0]["src"] == "inf");
  CHECK(diagram_from_json(j) == fls_self_loop(2, 1, 1));
}
