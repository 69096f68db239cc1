#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dx/repr.hpp"

using namespace dx;

namespace {

RatFunc q(int e) { return RatFunc::q_power(e); }

const SixModule& module() {
  static const SixModule m;
  return m;
}

// [E_i, F_i] - (K_i - K_i^{-1}) / (q_i - q_i^{-1})
SuperMap ef_defect(const SixModule& m, int i) {
  const int d = cartan_data().d[i - 1];
  SuperMap lhs = supercommutator(m.generator(Generator::E, i), m.generator(Generator::F, i));
  SuperMap k = m.cartan_exponential(i, 1) - m.cartan_exponential(i, -1);
  return lhs - k * (q(d) - q(-d)).inverse();
}

}  // namespace

TEST_CASE("module shape") {
  const SixModule& m = module();
  CHECK(m.space().parities() == std::vector<Parity>{0, 0, 1, 1, 1, 1});
  CHECK(m.square().dim() == 36);
  CHECK(m.weights()[0] == Weight{1, 0, 0});
  CHECK(m.weights()[5] == Weight{-1, -1, -1});
}

TEST_CASE("generator actions on basis vectors") {
  const SixModule& m = module();
  const SuperMap& e1 = m.generator(Generator::E, 1);
  CHECK(e1.parity() == 1);
  CHECK(e1.get(0, 2) == RatFunc(1));   // E1 v3 = v1
  CHECK(e1.get(5, 1) == RatFunc(-1));  // E1 v2 = -v6
  const SuperMap& f2 = m.generator(Generator::F, 2);
  CHECK(f2.parity() == 0);
  CHECK(f2.get(5, 4) == RatFunc(1));  // F2 v5 = v6
  CHECK(f2.get(3, 2) == RatFunc(1));  // F2 v3 = v4
  const SuperMap& f3 = m.generator(Generator::F, 3);
  CHECK(f3.get(4, 2) == RatFunc(1));  // F3 v3 = v5
  CHECK(m.generator(Generator::E, 1) * m.generator(Generator::E, 1) == SuperMap(m.space(), m.space()));
}

TEST_CASE("Cartan exponentials") {
  const SixModule& m = module();
  // K1 = q^{-H1}
  CHECK(m.cartan_exponential(1, 1).get(0, 0) == q(-1));
  CHECK(m.cartan_exponential(1, -1).get(0, 0) == q(1));
  CHECK(m.cartan_exponential(2, 1).get(2, 2) == q(1));
  CHECK(m.cartan_exponential(3, 1).get(4, 4) == q(-1));
  CHECK(m.cartan_exponential(2, 1) * m.cartan_exponential(2, -1) == SuperMap::identity(m.space()));
}

TEST_CASE("corrected weights satisfy [E2,F2]; the printed table does not") {
  const SixModule corrected;
  const SixModule printed(WeightTable::printed);
  CHECK(ef_defect(corrected, 2).is_zero());
  CHECK(ef_defect(corrected, 3).is_zero());
  CHECK_FALSE(ef_defect(printed, 2).is_zero());
  CHECK(check_defining_relations(corrected).passed());
  CHECK_FALSE(check_defining_relations(printed).passed());
}

TEST_CASE("root data") {
  const auto& roots = root_data();
  CHECK(roots[0].coords == std::array<int, 3>{0, 0, 1});
  CHECK(roots[3].coords == std::array<int, 3>{2, 1, 1});
  CHECK(roots[1].parity == 1);
  CHECK(roots[3].parity == 0);
  CHECK(roots[3].c == -4);
  CHECK(roots[0].phi == -RatFunc::lambda().inverse());
  CHECK(root_q_factorial(2, 1) == 1 + q(2));
}

TEST_CASE("root vectors") {
  const SixModule& m = module();
  // E_{beta_2} = [E1, E3]_{q^-1}
  CHECK(m.root_vector(2, RootSide::raise) ==
        qbracket(m.generator(Generator::E, 1), m.generator(Generator::E, 3), q(-1)));
  CHECK(m.root_vector(5, RootSide::raise) == m.generator(Generator::E, 1));
  CHECK(m.root_vector(7, RootSide::lower) == m.generator(Generator::F, 2));
  for (int b = 1; b <= kRoots; ++b) {
    const SuperMap& e = m.root_vector(b, RootSide::raise);
    CHECK(e.parity() == root_data()[b - 1].parity);
    CHECK((e * e).is_zero());
    CHECK_FALSE(e.is_zero());
  }
  // K_beta for beta_4 = 2a1 + a2 + a3
  CHECK(m.root_cartan(4, 1) == m.cartan_exponential(1, 1) * m.cartan_exponential(1, 1) *
                                   m.cartan_exponential(2, 1) * m.cartan_exponential(3, 1));
}

TEST_CASE("coproduct") {
  const SixModule& m = module();
  SuperMap de = m.coproduct(Generator::E, 1);
  CHECK(de.parity() == 1);
  CHECK(de == operator_pair(m.generator(Generator::E, 1), SuperMap::identity(m.space())) +
                  operator_pair(m.cartan_exponential(1, 1), m.generator(Generator::E, 1)));
  SuperMap dh = m.coproduct(Generator::H, 2);
  CHECK(dh.get(0, 0) == RatFunc(0));
  CHECK(dh.get(14, 14) == RatFunc(2));  // v3 (x) v3
}

TEST_CASE("duality maps") {
  const SixModule& m = module();
  DualityMaps dm = duality_maps(m);
  CHECK(dm.d * dm.b == SuperMap::scalar(SuperSpace::unit(), 2));
  CHECK(dm.b.get(1, 0) == q(1));       // v1 (x) v2
  CHECK(dm.b.get(6, 0) == -q(3));      // v2 (x) v1
  CHECK(dm.b.get(17, 0) == RatFunc(1)); // v3 (x) v6
  CHECK(dm.alpha.get(1, 0) == -q(-3));
  for (int i = 1; i <= kRank; ++i) {
    CHECK((dm.d * m.coproduct(Generator::E, i)).is_zero());
    CHECK((m.coproduct(Generator::F, i) * dm.b).is_zero());
  }
}
