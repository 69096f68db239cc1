#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dx/dubrovnik.hpp"

#include <cstdlib>
#include <random>

using namespace dx;

namespace {

TwoVarPoly lambda_of(const std::string& braid) { return dubrovnik_poly(braid_closure_graph(parse_braid(braid))); }

BraidWord random_braid(std::mt19937& rng, int max_strands, int max_letters) {
  std::uniform_int_distribution<int> strands(2, max_strands), len(0, max_letters), sign(0, 1);
  BraidWord b;
  b.strands = strands(rng);
  std::uniform_int_distribution<int> gen(1, b.strands - 1);
  for (int n = len(rng); n > 0; --n) b.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return b;
}

}  // namespace

TEST_CASE("two-variable polynomials") {
  TwoVarPoly d = TwoVarPoly::delta();
  CHECK(to_string(d) == "-a^-1*z^-1 + 1 + a*z^-1");
  CHECK(to_string(TwoVarPoly()) == "0");
  CHECK(to_string(TwoVarPoly::monomial(Rational(-3), 2, -1)) == "-3*a^2*z^-1");
  CHECK(d - d == TwoVarPoly());
  CHECK(d.pow(2) == d * d);
  CHECK(d.pow(0) == TwoVarPoly(1));
}

TEST_CASE("link graphs of closures") {
  LinkGraph hopf = braid_closure_graph(parse_braid("2: 1 1"));
  CHECK(hopf.crossings.size() == 2);
  CHECK(hopf.components() == 2);
  LinkGraph unknot = braid_closure_graph(parse_braid("1:"));
  CHECK(unknot.crossings.empty());
  CHECK(unknot.free_loops == 1);
  CHECK(braid_closure_graph(parse_braid("2: 1 1 1")).components() == 1);
  CHECK(braid_closure_graph(parse_braid("3: 1 -2 1 -2")).components() == 1);
  CHECK(braid_closure_graph(parse_braid("3: 1")).components() == 2);
  CHECK(braid_closure_graph(parse_braid("2: 1 1 1")).self_writhe() == 3);
  CHECK(braid_closure_graph(parse_braid("2: 1 1")).self_writhe() == 0);
  CHECK(braid_closure_graph(parse_braid("3: 1 -2 1 -2")).self_writhe() == 0);

  LinkGraph bad;
  bad.crossings.push_back({0, 1, 2, 3});
  CHECK_THROWS_AS(bad.validate(), DiagramError);
}

TEST_CASE("skein normalizations") {
  CHECK(lambda_of("1:") == TwoVarPoly(1));
  CHECK(lambda_of("2: 1") == TwoVarPoly::a());
  CHECK(lambda_of("2: -1") == TwoVarPoly::monomial(1, -1, 0));
  CHECK(lambda_of("2: 1 -1") == TwoVarPoly::delta());
  CHECK(lambda_of("3:") == TwoVarPoly::delta().pow(2));
}

TEST_CASE("specialization") {
  CHECK(specialize(TwoVarPoly::delta()) == IntLaurent(2));
  CHECK(specialize(TwoVarPoly(1)) == IntLaurent(1));
  CHECK(specialize(TwoVarPoly::a()) == IntLaurent::monomial(-1, -1));
  CHECK(specialize(TwoVarPoly::z()) == IntLaurent::monomial(1, 1) - IntLaurent::monomial(1, -1));
  CHECK_THROWS_AS(specialize(TwoVarPoly::monomial(1, 0, -1)), NotLaurentInQ);
}

TEST_CASE("regular isotopy invariance of the oracle") {
  CHECK(lambda_of("3: 1 2 1 -2") == lambda_of("3: 2 1 2 -2"));
  CHECK(lambda_of("3: 1 -2 1 -2") == lambda_of("3: -2 1 -2 1"));
  CHECK(lambda_of("2: 1 1 -1 1") == lambda_of("2: 1 1"));
  CHECK(lambda_of("3: 1 1 1 2") == TwoVarPoly::a() * lambda_of("2: 1 1 1"));
  CHECK(lambda_of("3: 1 1 1 -2") == TwoVarPoly::monomial(1, -1, 0) * lambda_of("2: 1 1 1"));
}

TEST_CASE("memo soundness") {
  std::mt19937 rng(7);
  DubrovnikOptions off;
  off.memo = false;
  for (int trial = 0; trial < 40; ++trial) {
    LinkGraph g = braid_closure_graph(random_braid(rng, 4, 8));
    DubrovnikStats with, without;
    CHECK(dubrovnik_poly(g, {}, &with) == dubrovnik_poly(g, off, &without));
    CHECK(without.memo_hits == 0);
  }
}

TEST_CASE("crossing budget") {
  BraidWord long_word = parse_braid("2: 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1");
  CHECK_THROWS_AS(dubrovnik_poly(braid_closure_graph(long_word)), RecursionBudgetExceeded);
  DubrovnikOptions small;
  small.crossing_limit = 2;
  CHECK_THROWS_AS(dubrovnik_poly(braid_closure_graph(parse_braid("2: 1 1 1")), small),
                  RecursionBudgetExceeded);
  setenv("DXLINK_CROSSING_LIMIT", "1", 1);
  CHECK_THROWS_AS(lambda_of("2: 1 1"), RecursionBudgetExceeded);
  unsetenv("DXLINK_CROSSING_LIMIT");
  CHECK_NOTHROW(lambda_of("2: 1 1"));
}

TEST_CASE("random closures: tangle evaluation equals 2 Lambda(-q^-1, q - q^-1)") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord b = random_braid(rng, 3, 7);
    SkeinComparison cmp = compare(b);
    INFO(to_string(b), " ", to_string(cmp.tangle), " vs ", to_string(cmp.expected));
    CHECK(cmp.agrees());
  }
}

TEST_CASE("sliced diagrams: both pipelines agree") {
  for (const char* text : {"cup 1\npos 1\ncap 1\n", "cup 1\nneg 1\ncap 1\n",
                           "cup 1\ncup 2\npos 2\ncap 2\ncap 1\n", "cup 1\ncup 3\npos 2\ncap 3\ncap 1\n",
                           "cup 1\ncup 3\npos 2\npos 2\ncap 3\ncap 1\n",
                           "cup 1\ncup 1\npos 2\nneg 1\npos 2\ncap 1\ncap 1\n",
                           "cup 1\ncup 3\nneg 2\ncup 3\npos 2\npos 4\ncap 3\nneg 2\ncap 1\ncap 1\n"}) {
    SlicedDiagram d = parse_sliced(text);
    IntLaurent tangle = evaluate_sliced(d).value;
    IntLaurent oracle = IntLaurent(2) * specialize(dubrovnik_poly(link_graph(d)));
    INFO(text);
    CHECK(tangle == oracle);
  }
}
