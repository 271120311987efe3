#include "test_main.hpp"

#include <string>

#include "cmpreproj/algebra.hpp"
#include "cmpreproj/errors.hpp"

using namespace cmpreproj;

namespace {

std::string preprojective_a(int n) {
  std::string s = "vertices: " + std::to_string(n) + "\n";
  for (int k = 1; k < n; ++k) {
    s += "a" + std::to_string(k) + ": " + std::to_string(k) + " -> " + std::to_string(k + 1) + "\n";
    s += "b" + std::to_string(k) + ": " + std::to_string(k + 1) + " -> " + std::to_string(k) + "\n";
  }
  for (int v = 1; v <= n; ++v) {
    std::string rel;
    if (v < n) rel += "a" + std::to_string(v) + "b" + std::to_string(v);
    if (v > 1) rel += " - b" + std::to_string(v - 1) + "a" + std::to_string(v - 1);
    s += rel + "\n";
  }
  return s;
}

template <class F>
AlgPtr<F> build(const F& f, const std::string& text, int cutoff = 40) {
  auto p = parse_presentation(text);
  return build_quotient(f, p.quiver, p.relations, cutoff);
}

}  // namespace

TEST_CASE("parser") {
  auto p = parse_presentation("vertices: 2\na: 1 -> 2\nb: 2 -> 1\nc: 2 -> 2\nab\ncbac\nc^2 + bacba\n");
  CHECK(p.quiver.vertex_count == 2);
  REQUIRE(p.relations.size() == 3);
  CHECK(p.relations[2].terms[0].second.arrows == std::vector<int>{2, 2});
  CHECK_FALSE(p.relations[2].homogeneous());
  CHECK_THROWS_AS(parse_presentation("a: 1 -> 2\nb: 1 -> 2\nab\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a: 1 -> 2\nzz\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a: 1 -> 1\nb: 1 -> 1\na + ab\n"), InvalidInput);
}

TEST_CASE("truncated polynomial ring") {
  PrimeField f(101);
  auto a = build(f, "x: 1 -> 1\nx^2\n");
  CHECK(a->dim() == 2);
  CHECK(a->generators() == std::vector<int>{1});
  CHECK(a->product(1, 1).empty());
}

TEST_CASE("preprojective algebras of type A") {
  PrimeField f(101);
  CHECK(build(f, preprojective_a(2))->dim() == 4);
  auto a6 = build(f, preprojective_a(6));
  CHECK(a6->dim() == 56);
  CHECK(a6->max_degree() == 5);
  CHECK(a6->generators().size() == 10);
  Rng rng(1);
  CHECK(a6->verify_associativity(3000, &rng));
  auto c = cartan_matrix(*a6);
  // row 1 of the Cartan matrix of Pi(A6)
  CHECK(c[0] == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(c[2][2] == 3);
}

TEST_CASE("the two quotient engines agree on homogeneous input") {
  RationalField q;
  auto p = parse_presentation(preprojective_a(4));
  auto g = build_quotient(q, p.quiver, p.relations, 10);
  auto t = build_by_path_enumeration(q, p.quiver, p.relations, 10);
  CHECK(g->dim() == t->dim());
  CHECK(cartan_matrix(*g) == cartan_matrix(*t));
  CHECK(serialize(*g) == serialize(*t));
}

TEST_CASE("inhomogeneous relations") {
  PrimeField f(101);
  auto a = build(f, "a: 1 -> 2\nb: 2 -> 1\nc: 2 -> 2\nab\ncbac\nc^2 + bacba\n");
  Rng rng(3);
  CHECK(a->verify_associativity(0, &rng));
  auto c = cartan_matrix(*a);
  CHECK(c[0][0] + c[0][1] + c[1][0] + c[1][1] == a->dim());
  CHECK(a->generators().size() == 3);
}

TEST_CASE("contraction and opposite") {
  PrimeField f(101);
  auto a6 = build(f, preprojective_a(6));
  auto e = contract(a6, {0, 1, 2, 5});
  CHECK(e->dim() == 21);
  auto c = cartan_matrix(*e);
  std::vector<int> sums;
  for (auto& row : c) {
    int s = 0;
    for (int x : row) s += x;
    sums.push_back(s);
  }
  CHECK(sums == std::vector<int>{4, 6, 7, 4});
  CHECK(e->vertex_labels() == std::vector<int>{1, 2, 3, 6});
  auto op = opposite(e);
  CHECK(opposite(op) == e);
  CHECK(op->block(0, 1).size() == e->block(1, 0).size());
  CHECK_THROWS_AS(contract(a6, {}), EmptySubset);
}

TEST_CASE("cutoff") {
  PrimeField f(101);
  auto p = parse_presentation("x: 1 -> 1\ny: 1 -> 1\nxy - yx\n");
  CHECK_THROWS_AS(build_quotient(f, p.quiver, p.relations, 6), CutoffExceeded);
}
