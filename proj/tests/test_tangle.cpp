#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dx/tangle.hpp"

using namespace dx;

namespace {

IntLaurent eval(const std::string& events) { return evaluate_sliced(parse_sliced(events)).value; }
IntLaurent eval_braid(const std::string& b) { return invariant(parse_braid(b)).value; }

}  // namespace

TEST_CASE("braid words") {
  BraidWord b = parse_braid("3: 1 -2 1 -2");
  CHECK(b.strands == 3);
  CHECK(b.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(to_string(b) == "3: 1 -2 1 -2");
  CHECK(parse_braid("1:").letters.empty());
  CHECK(parse_braid(" 2 :1  1 ").letters.size() == 2);
  CHECK(mirror(b).letters == std::vector<int>{-1, 2, -1, 2});
  CHECK_THROWS_AS(parse_braid("2: 2"), DiagramError);
  CHECK_THROWS_AS(parse_braid("2: 0"), DiagramError);
  CHECK_THROWS_AS(parse_braid("2 1 1"), DiagramError);
  CHECK_THROWS_AS(parse_braid("2: 1 x"), DiagramError);
  CHECK_THROWS_AS(parse_braid("0:"), DiagramError);
}

TEST_CASE("sliced diagrams") {
  SlicedDiagram d = parse_sliced("# unknot\ncup 1\n\ncap 1   # done\n");
  CHECK(d.events().size() == 2);
  CHECK(d.profile() == std::vector<int>{0, 2, 0});
  CHECK(d.closed());
  CHECK_THROWS_AS(parse_sliced("cap 1\n"), DiagramError);
  CHECK_THROWS_AS(parse_sliced("cup 2\n"), DiagramError);
  CHECK_THROWS_AS(parse_sliced("cup 1\npos 2\n"), DiagramError);
  CHECK_THROWS_AS(parse_sliced("cup 1\nswap 1\n"), DiagramError);
  CHECK_THROWS_AS(parse_sliced("cup\n"), DiagramError);
  CHECK(parse_sliced(to_string(d)).events() == d.events());
}

TEST_CASE("closure convention") {
  SlicedDiagram d = braid_closure_slices(parse_braid("2: 1 -1"));
  std::vector<Event> expected{{EventKind::cup, 1}, {EventKind::cup, 2}, {EventKind::pos, 3},
                              {EventKind::neg, 3}, {EventKind::cap, 2}, {EventKind::cap, 1}};
  CHECK(d.events() == expected);
  CHECK(d.peak() == 4);
  CHECK(d.crossings() == 2);
}

TEST_CASE("cup inserts its left strand at the given position") {
  // two separate circles
  CHECK(eval("cup 1\ncup 1\ncap 1\ncap 1\n") == IntLaurent(4));
  // the new pair sits at 1,2, so cap 2 joins it to the old pair: one circle
  CHECK(eval("cup 1\ncup 1\ncap 2\ncap 1\n") == IntLaurent(2));
  // nested pair at 2,3; cap 1 joins outer-left and inner-left: one circle
  CHECK(eval("cup 1\ncup 2\ncap 1\ncap 1\n") == IntLaurent(2));
  CHECK(eval("cup 1\ncup 2\ncap 2\ncap 1\n") == IntLaurent(4));
}

TEST_CASE("evaluation of small diagrams") {
  CHECK(eval_braid("1:") == IntLaurent(2));
  CHECK(eval("cup 1\ncap 1\n") == IntLaurent(2));
  CHECK(eval_braid("2: 1 -1") == IntLaurent(4));
  // (id (x) d)(c (x) id)(id (x) b) = -q^{-1}, closed up
  CHECK(eval("cup 1\ncup 3\npos 2\ncap 3\ncap 1\n") == IntLaurent::monomial(-2, -1));
  CHECK(eval("cup 1\ncup 3\nneg 2\ncap 3\ncap 1\n") == IntLaurent::monomial(-2, 1));
  // crossing applied directly to a fresh cup (c b = -q b), beside a second circle
  CHECK(eval("cup 1\ncup 2\npos 2\ncap 2\ncap 1\n") == IntLaurent::monomial(-4, 1));
  CHECK(eval("cup 1\npos 1\ncap 1\n") == IntLaurent::monomial(-2, 1));
  CHECK(eval_braid("2: 1") == IntLaurent::monomial(-2, -1));
  CHECK(to_string(eval_braid("2: 1 1")) == "2*q^-2 + 2*q^2");
  CHECK(to_string(eval_braid("2: 1 1 1")) == "-2*q^-3");
}

TEST_CASE("mirror image inverts q") {
  for (const char* w : {"2: 1 1", "2: 1 1 1", "3: 1 -2 1 -2", "3: 1 1 2 1", "2: 1 1 1 1 1"}) {
    BraidWord b = parse_braid(w);
    CHECK(invariant(mirror(b)).value == invariant(b).value.inverted_variable());
  }
}

TEST_CASE("split union multiplies") {
  SlicedDiagram x = braid_closure_slices(parse_braid("2: 1 1 1"));
  SlicedDiagram y = braid_closure_slices(parse_braid("3: 1 -2 1 -2"));
  std::vector<Event> ev = x.events();
  ev.insert(ev.end(), y.events().begin(), y.events().end());
  CHECK(evaluate_sliced(SlicedDiagram(ev)).value ==
        evaluate_sliced(x).value * evaluate_sliced(y).value);
}

TEST_CASE("regular isotopy moves") {
  // R2
  CHECK(eval_braid("3: 1 2 -2 1") == eval_braid("3: 1 1"));
  // R3
  CHECK(eval_braid("3: 1 2 1 -2") == eval_braid("3: 2 1 2 -2"));
  // conjugation
  CHECK(eval_braid("3: 1 -2 1 -2") == eval_braid("3: -2 1 -2 1"));
  // stabilization adds a curl: factor a = -q^{-1}
  CHECK(eval_braid("3: 1 1 1 2") == IntLaurent::monomial(-1, -1) * eval_braid("2: 1 1 1"));
}

TEST_CASE("open diagrams are rejected") {
  CHECK_THROWS_AS(evaluate_sliced(parse_sliced("cup 1\n")), DiagramError);
}

TEST_CASE("statistics") {
  EvalResult r = invariant(parse_braid("3: 1 -2 1 -2"));
  CHECK(r.stats.slices == 10);
  CHECK(r.stats.peak_strands == 6);
  CHECK(r.stats.peak_terms > 0);
}
