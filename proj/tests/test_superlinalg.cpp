#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dx/superlinalg.hpp"

#include <algorithm>

using namespace dx;

namespace {

RatFunc q(int e) { return RatFunc::q_power(e); }

// one even and one odd basis vector
const SuperSpace kS({0, 1});

SuperMap swap_odd() {
  SuperMap g(kS, kS, 1);
  g.set(1, 0, 1);
  g.set(0, 1, q(1));
  return g;
}

}  // namespace

TEST_CASE("tensor spaces") {
  SuperSpace t = tensor(kS, kS);
  CHECK(t.dim() == 4);
  CHECK(t.parities() == std::vector<Parity>{0, 1, 1, 0});
  CHECK(tensor_power(kS, 0) == SuperSpace::unit());
  CHECK(tensor_power(kS, 3).dim() == 8);
  CHECK(parity_indices(t, 1) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("homogeneity is enforced") {
  SuperMap even(kS, kS, 0);
  CHECK_THROWS_AS(even.set(0, 1, 1), ParityViolation);
  even.set(0, 1, 0);  // zero is allowed anywhere
  SuperMap odd(kS, kS, 1);
  CHECK_THROWS_AS(odd.set(0, 0, 1), ParityViolation);
  CHECK_THROWS_AS(compose(SuperMap::identity(kS), SuperMap::identity(SuperSpace({0}))), ShapeMismatch);
}

TEST_CASE("Koszul sign of a tensor product") {
  SuperMap id = SuperMap::identity(kS);
  SuperMap g = swap_odd();
  SuperMap ig = tensor_map(id, g);
  // (id (x) g)(v1 (x) v0) = (-1)^{|g||v1|} v1 (x) g(v0) = -v1 (x) v1
  CHECK(ig.get(3, 2) == RatFunc(-1));
  // (id (x) g)(v0 (x) v0) = v0 (x) v1
  CHECK(ig.get(1, 0) == RatFunc(1));
  SuperMap gi = tensor_map(g, id);
  CHECK(gi.get(2, 0) == RatFunc(1));
  CHECK(ig.parity() == 1);
}

TEST_CASE("interchange law with signs") {
  SuperMap g = swap_odd();
  SuperMap h = swap_odd() * q(2);
  SuperMap f = SuperMap::diagonal(kS, {q(1), q(-1)});
  SuperMap k = SuperMap::identity(kS);
  // (f (x) g)(h (x) k) = (-1)^{|g||h|} (f h) (x) (g k)
  CHECK(tensor_map(f, g) * tensor_map(h, k) == -tensor_map(f * h, g * k));
  CHECK(tensor_map(f, k) * tensor_map(h, g) == tensor_map(f * h, g));
}

TEST_CASE("graded flip") {
  SuperMap v = volte(kS, kS);
  CHECK(v.get(3, 3) == RatFunc(-1));  // v1 (x) v1 -> -v1 (x) v1
  CHECK(v.get(2, 1) == RatFunc(1));
  CHECK(v * v == SuperMap::identity(tensor(kS, kS)));
  SuperMap g = swap_odd();
  SuperMap f = SuperMap::diagonal(kS, {q(3), 2});
  // flip is natural: tau (f (x) g) = (g (x) f) tau
  CHECK(v * tensor_map(f, g) == tensor_map(g, f) * v);
}

TEST_CASE("supercommutator and q-bracket") {
  SuperMap g = swap_odd();
  // two odd maps anticommute in the bracket: [g, g] = 2 g^2
  CHECK(supercommutator(g, g) == (g * g) * RatFunc(2));
  CHECK(qbracket(g, g, q(1)) == g * g + (g * g) * q(1));
  SuperMap d = SuperMap::diagonal(kS, {1, q(1)});
  CHECK(qbracket(d, g, 1) == supercommutator(d, g));
}

TEST_CASE("embedding into tensor powers") {
  SuperMap g = swap_odd();
  SuperMap e = embed_at(g, 1, 1, kS);
  SuperMap id = SuperMap::identity(kS);
  CHECK(e == tensor_map(tensor_map(id, g), id));
  CHECK(e.domain().dim() == 8);
}

TEST_CASE("rank over the fraction field") {
  SuperSpace two({0, 0});
  SuperMap a(two, two);
  a.set(0, 0, 1);
  a.set(0, 1, q(1));
  a.set(1, 0, q(-1));
  a.set(1, 1, 1);
  CHECK(rank_over_fractions(a) == 1);
  a.set(1, 1, q(1));
  CHECK(rank_over_fractions(a) == 2);
  CHECK(rank_over_fractions(SuperMap(two, two)) == 0);
  CHECK(rank_over_fractions(SuperMap::identity(tensor_power(kS, 3))) == 8);
}

TEST_CASE("exact inverse") {
  SuperSpace two({0, 0});
  SuperMap a(two, two);
  a.set(0, 0, q(1));
  a.set(0, 1, RatFunc::lambda());
  a.set(1, 1, q(-1));
  SuperMap ai = inverse(a);
  CHECK(a * ai == SuperMap::identity(two));
  CHECK(ai * a == SuperMap::identity(two));
  CHECK_THROWS(inverse(SuperMap(two, two)));
  const Vector expected{q(1) + RatFunc::lambda(), q(-1)};
  const Vector got = dx::apply(a, Vector{1, 1});
  CHECK(std::equal(got.begin(), got.end(), expected.begin(), expected.end()));
}

TEST_CASE("block extraction") {
  SuperMap f = SuperMap::diagonal(tensor(kS, kS), {1, q(1), q(2), q(3)});
  SuperMap b = f.block({3, 0}, {3, 0});
  CHECK(b.get(0, 0) == q(3));
  CHECK(b.get(1, 1) == RatFunc(1));
  CHECK(b.get(0, 1).is_zero());
  CHECK(f.nonzeros() == 4);
}
