#include "dx/repr.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace dx {

namespace {

RatFunc qp(int e) { return RatFunc::q_power(e); }

RationalMatrix3 make_b() {
  // B = -1/(2(1+x)) [[-4, 2, 2x], [2, x, -x], [2x, -x, x]] at x = 1
  const int raw[3][3] = {{-4, 2, 2}, {2, 1, -1}, {2, -1, 1}};
  RationalMatrix3 b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = Rational(-raw[i][j], 4);
  for (auto& row : b)
    for (auto& v : row) v.canonicalize();
  return b;
}

CartanData make_cartan() {
  CartanData c;
  c.a = {{{0, 1, 1}, {-1, 2, 0}, {-1, 0, 2}}};
  c.d = {-1, 1, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.abar[i][j] = c.d[i] * c.a[i][j];
  c.b = make_b();
  return c;
}

std::array<RootInfo, kRoots> make_roots() {
  const RatFunc lam = RatFunc::lambda();
  std::array<RootInfo, kRoots> r;
  r[0] = {{0, 0, 1}, 0, 2, RatFunc(-1) / lam};
  r[1] = {{1, 0, 1}, 1, 0, qp(-1) / lam};
  r[2] = {{1, 1, 1}, 1, 0, -qp(-2) / lam};
  r[3] = {{2, 1, 1}, 0, -4, -qp(-4) * (qp(2) - qp(-2)) / (lam * lam)};
  r[4] = {{1, 0, 0}, 1, 0, RatFunc(-1) / lam};
  r[5] = {{1, 1, 0}, 1, 0, qp(-1) / lam};
  r[6] = {{0, 1, 0}, 0, 2, RatFunc(-1) / lam};
  return r;
}

void check_index(int i, int hi, const char* what) {
  if (i < 1 || i > hi) throw std::out_of_range(std::string(what) + ": index out of range");
}

// Builds a 6x6 homogeneous map from 1-based (row, col, value) triples.
SuperMap table(const SuperSpace& m, Parity parity, std::initializer_list<std::tuple<int, int, int>> entries) {
  SuperMap out(m, m, parity);
  for (const auto& [r, c, v] : entries) out.set(r - 1, c - 1, RatFunc(v));
  return out;
}

}  // namespace

const CartanData& cartan_data() {
  static const CartanData data = make_cartan();
  return data;
}

const std::array<RootInfo, kRoots>& root_data() {
  static const std::array<RootInfo, kRoots> data = make_roots();
  return data;
}

RatFunc root_q_factorial(int n, int root) {
  check_index(root, kRoots, "root_q_factorial");
  return q_factorial(n, root_data()[root - 1].c);
}

// ---------------------------------------------------------------------------

SixModule::SixModule(WeightTable table)
    : table_(table), space_({0, 0, 1, 1, 1, 1}), square_(tensor(space_, space_)) {
  const int h23 = table == WeightTable::printed ? 1 : 0;
  weights_ = {{{1, h23, h23}, {-1, h23, h23}, {1, 1, 1}, {0, -1, 1}, {0, 1, -1}, {-1, -1, -1}}};

  // Action tables: (codomain row, domain column, coefficient), 1-based.
  e_[0] = dx::table(space_, 1, {{1, 3, 1}, {6, 2, -1}});
  e_[1] = dx::table(space_, 0, {{3, 4, 1}, {5, 6, 1}});
  e_[2] = dx::table(space_, 0, {{3, 5, 1}, {4, 6, 1}});
  f_[0] = dx::table(space_, 1, {{3, 1, 1}, {2, 6, 1}});
  f_[1] = dx::table(space_, 0, {{6, 5, 1}, {4, 3, 1}});
  f_[2] = dx::table(space_, 0, {{6, 4, 1}, {5, 3, 1}});
  for (int i = 0; i < kRank; ++i) {
    std::vector<RatFunc> diag;
    for (const auto& w : weights_) diag.emplace_back(w[i]);
    h_[i] = SuperMap::diagonal(space_, diag);
  }

  // Simple roots: beta_1 = alpha_3, beta_5 = alpha_1, beta_7 = alpha_2.
  // Composite roots by q-brackets; the lowering side uses the same formulas
  // with E -> F, which is legitimate because psi(E_i) = F_i is an algebra map.
  auto build = [&](const std::array<SuperMap, kRank>& g, std::array<SuperMap, kRoots>& out) {
    out[0] = g[2];
    out[4] = g[0];
    out[6] = g[1];
    out[1] = qbracket(g[0], g[2], qp(-1));
    out[5] = qbracket(g[1], g[0], qp(-1));
    out[2] = qbracket(g[1], out[1], qp(-1));
    out[3] = qbracket(g[0], out[2], qp(-2));
  };
  build(e_, e_root_);
  build(f_, f_root_);
}

const SuperMap& SixModule::generator(Generator g, int i) const {
  check_index(i, kRank, "generator");
  switch (g) {
    case Generator::E: return e_[i - 1];
    case Generator::F: return f_[i - 1];
    case Generator::H: return h_[i - 1];
  }
  throw std::invalid_argument("generator: unknown kind");
}

SuperMap SixModule::cartan_exponential(int i, int sign) const {
  check_index(i, kRank, "cartan_exponential");
  const int d = cartan_data().d[i - 1];
  std::vector<RatFunc> diag;
  for (const auto& w : weights_) diag.push_back(qp(sign * d * w[i - 1]));
  return SuperMap::diagonal(space_, diag);
}

SuperMap SixModule::root_cartan(int root, int sign) const {
  check_index(root, kRoots, "root_cartan");
  const auto& coords = root_data()[root - 1].coords;
  const auto& d = cartan_data().d;
  std::vector<RatFunc> diag;
  for (const auto& w : weights_) {
    int e = 0;
    for (int j = 0; j < kRank; ++j) e += coords[j] * d[j] * w[j];
    diag.push_back(qp(sign * e));
  }
  return SuperMap::diagonal(space_, diag);
}

const SuperMap& SixModule::root_vector(int root, RootSide side) const {
  check_index(root, kRoots, "root_vector");
  return side == RootSide::raise ? e_root_[root - 1] : f_root_[root - 1];
}

SuperMap operator_pair(const SuperMap& a, const SuperMap& b) { return tensor_map(a, b); }

SuperMap SixModule::coproduct(Generator g, int i) const {
  const SuperMap id = SuperMap::identity(space_);
  switch (g) {
    case Generator::H:
      return operator_pair(generator(g, i), id) + operator_pair(id, generator(g, i));
    case Generator::E:
      return operator_pair(generator(g, i), id) + operator_pair(cartan_exponential(i, 1), generator(g, i));
    case Generator::F:
      return operator_pair(generator(g, i), cartan_exponential(i, -1)) + operator_pair(id, generator(g, i));
  }
  throw std::invalid_argument("coproduct: unknown kind");
}

// ---------------------------------------------------------------------------

DualityMaps duality_maps(const SixModule& m) {
  const SuperSpace& s = m.space();
  DualityMaps out;
  // alpha(v_j) = coefficient * v^k, stored as entry (k, j).
  out.alpha = SuperMap(s, s);
  out.alpha.set(1, 0, -qp(-3));
  out.alpha.set(0, 1, qp(-1));
  out.alpha.set(5, 2, qp(-2));
  out.alpha.set(4, 3, -qp(-1));
  out.alpha.set(3, 4, -qp(-1));
  out.alpha.set(2, 5, RatFunc(1));

  const SuperSpace unit = SuperSpace::unit();
  out.d = SuperMap(m.square(), unit);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (const auto& [k, v] : out.alpha.column(i)) out.d.set(0, i * s.dim() + k, v);

  const SuperMap alpha_inv = inverse(out.alpha);
  out.b = SuperMap(unit, m.square());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (const auto& [k, v] : alpha_inv.column(i)) out.b.set(i * s.dim() + k, 0, v);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string describe(const SuperMap& diff) {
  if (diff.is_zero()) return {};
  std::ostringstream out;
  out << diff.nonzeros() << " nonzero entries in difference";
  for (std::size_t c = 0; c < diff.cols(); ++c)
    if (!diff.column(c).empty()) {
      const auto& [r, v] = *diff.column(c).begin();
      out << "; first at (" << r << ", " << c << ") = " << v;
      break;
    }
  return out.str();
}

void expect_equal(Report& rep, const std::string& id, const SuperMap& lhs, const SuperMap& rhs) {
  rep.run(id, [&](std::string& detail) {
    SuperMap diff = lhs - rhs;
    detail = describe(diff);
    return diff.is_zero();
  });
}

std::string gname(Generator g, int i) {
  const char* n = g == Generator::E ? "E" : g == Generator::F ? "F" : "H";
  return n + std::to_string(i);
}

struct CommutRelation {
  int left, right;
  RatFunc subscript;
  // Right-hand side built from the root vectors of one side.
  std::function<SuperMap(const std::function<const SuperMap&(int)>&, const SuperMap& zero)> rhs;
  std::string label;
};

std::vector<CommutRelation> commutation_table(bool literal) {
  using Roots = std::function<const SuperMap&(int)>;
  auto zero = [](const Roots&, const SuperMap& z) { return z; };
  auto root = [](int k) {
    return [k](const Roots& r, const SuperMap&) { return r(k); };
  };
  const RatFunc lam = RatFunc::lambda();
  // Subscript of [e5, e3] and [e6, e2]; the printed -q^{-2} conflicts with
  // the definition of E_{beta_4} as a q^{-2}-bracket.
  const RatFunc fixed = literal ? -qp(-2) : qp(-2);
  const std::string sub = literal ? "_{-q^-2}" : "_{q^-2}";
  std::vector<CommutRelation> t = {
      {7, 5, qp(-1), root(6), "[e7,e5]_{q^-1}=e6"},
      {7, 2, qp(-1), root(3), "[e7,e2]_{q^-1}=e3"},
      {7, 1, RatFunc(1), zero, "[e7,e1]=0"},
      {5, 3, fixed, root(4), "[e5,e3]" + sub + "=e4"},
      {5, 1, qp(-1), root(2), "[e5,e1]_{q^-1}=e2"},
      {7, 6, qp(1), zero, "[e7,e6]_q=0"},
      {7, 3, qp(1), zero, "[e7,e3]_q=0"},
      {6, 5, -qp(-1), zero, "[e6,e5]_{-q^-1}=0"},
      {6, 1, qp(-1), root(3), "[e6,e1]_{q^-1}=e3"},
      {5, 4, qp(-2), zero, "[e5,e4]_{q^-2}=0"},
      {5, 2, -qp(-1), zero, "[e5,e2]_{-q^-1}=0"},
      {4, 3, qp(-2), zero, "[e4,e3]_{q^-2}=0"},
      {3, 2, -qp(-1), zero, "[e3,e2]_{-q^-1}=0"},
      {2, 1, qp(1), zero, "[e2,e1]_q=0"},
      {7, 4, RatFunc(1), zero, "[e7,e4]=0"},
      {6, 4, qp(-2), zero, "[e6,e4]_{q^-2}=0"},
      {6, 3, -qp(-1), zero, "[e6,e3]_{-q^-1}=0"},
      {4, 2, qp(-2), zero, "[e4,e2]_{q^-2}=0"},
      {4, 1, RatFunc(1),
       [](const Roots& r, const SuperMap&) { return (qp(-1) * (qp(2) - qp(-2))) * (r(2) * r(3)); },
       "[e4,e1]=q^-1(q^2-q^-2)e2e3"},
      {3, 1, qp(1), zero, "[e3,e1]_q=0"},
      {6, 2, fixed,
       [lam](const Roots& r, const SuperMap&) {
         return (-qp(-2) * lam) * (r(3) * r(5)) - qp(-1) * r(4);
       },
       "[e6,e2]" + sub + "=-q^-2(q-q^-1)e3e5-q^-1e4"},
  };
  return t;
}

}  // namespace

Report check_defining_relations(const SixModule& m) {
  Report rep("relations");
  const auto& cd = cartan_data();
  const SuperSpace& s = m.space();
  const SuperMap zero(s, s);
  using G = Generator;

  for (int i = 1; i <= kRank; ++i)
    for (int j = 1; j <= kRank; ++j) {
      const auto& hi = m.generator(G::H, i);
      expect_equal(rep, "rel1.[" + gname(G::H, i) + "," + gname(G::H, j) + "]",
                   supercommutator(hi, m.generator(G::H, j)), zero);
      const RatFunc a(cd.a[i - 1][j - 1]);
      expect_equal(rep, "rel2.[" + gname(G::H, i) + "," + gname(G::E, j) + "]",
                   supercommutator(hi, m.generator(G::E, j)), a * m.generator(G::E, j));
      expect_equal(rep, "rel2'.[" + gname(G::H, i) + "," + gname(G::F, j) + "]",
                   supercommutator(hi, m.generator(G::F, j)), -a * m.generator(G::F, j));
    }

  for (int i = 1; i <= kRank; ++i)
    for (int j = 1; j <= kRank; ++j) {
      SuperMap rhs = zero;
      if (i == j) {
        const int d = cd.d[i - 1];
        rhs = (m.cartan_exponential(i, 1) - m.cartan_exponential(i, -1)) * (qp(d) - qp(-d)).inverse();
      }
      expect_equal(rep, "EF.[" + gname(G::E, i) + "," + gname(G::F, j) + "]",
                   supercommutator(m.generator(G::E, i), m.generator(G::F, j)), rhs);
    }

  expect_equal(rep, "nil.E1^2", m.generator(G::E, 1) * m.generator(G::E, 1), zero);
  expect_equal(rep, "nil.F1^2", m.generator(G::F, 1) * m.generator(G::F, 1), zero);
  expect_equal(rep, "comm.[E2,E3]", supercommutator(m.generator(G::E, 2), m.generator(G::E, 3)), zero);
  expect_equal(rep, "comm.[F2,F3]", supercommutator(m.generator(G::F, 2), m.generator(G::F, 3)), zero);

  for (G g : {G::E, G::F})
    for (int i = 2; i <= 3; ++i) {
      const auto& x = m.generator(g, i);
      const auto& y = m.generator(g, 1);
      const int d = cd.d[i - 1];
      SuperMap serre = x * x * y - (qp(d) + qp(-d)) * (x * y * x) + y * x * x;
      expect_equal(rep, "serre." + gname(g, i), serre, zero);
    }

  for (RootSide side : {RootSide::raise, RootSide::lower}) {
    const char* tag = side == RootSide::raise ? "E" : "F";
    for (int i : {2, 3, 6}) {
      const auto& r = m.root_vector(i, side);
      expect_equal(rep, std::string("squares.") + tag + "_b" + std::to_string(i) + "^2", r * r, zero);
    }
    for (int i = 1; i <= kRoots; ++i) {
      const auto& r = m.root_vector(i, side);
      expect_equal(rep, std::string("nilpotent.") + tag + "_b" + std::to_string(i) + "^2", r * r, zero);
    }
  }

  for (int i = 1; i <= kRoots; ++i) {
    const auto& e = m.root_vector(i, RootSide::raise);
    const SuperMap k = m.root_cartan(i, 1);
    expect_equal(rep, "KE.b" + std::to_string(i), k * e, qp(root_data()[i - 1].c) * (e * k));
  }

  for (RootSide side : {RootSide::raise, RootSide::lower}) {
    const char* tag = side == RootSide::raise ? "E" : "F";
    auto roots = [&](int k) -> const SuperMap& { return m.root_vector(k, side); };
    int n = 0;
    for (const auto& rel : commutation_table(false)) {
      ++n;
      SuperMap lhs = qbracket(roots(rel.left), roots(rel.right), rel.subscript);
      expect_equal(rep, std::string("commut.") + tag + "." + std::to_string(n) + " " + rel.label, lhs,
                   rel.rhs(roots, zero));
    }
    // The two printed subscripts that contradict the root-vector definitions.
    for (const auto& rel : commutation_table(true)) {
      if (!((rel.left == 5 && rel.right == 3) || (rel.left == 6 && rel.right == 2))) continue;
      SuperMap lhs = qbracket(roots(rel.left), roots(rel.right), rel.subscript);
      const bool holds = (lhs - rel.rhs(roots, zero)).is_zero();
      rep.add(std::string("commut.") + tag + ".misprint " + rel.label + " fails", !holds,
              holds ? "literal form unexpectedly holds" : "");
    }
  }

  rep.run("simple.orbits_span_M", [&](std::string& detail) {
    // The span of the orbit of each basis vector under all generators.
    for (std::size_t start = 0; start < s.dim(); ++start) {
      std::set<std::size_t> reached{start};
      std::vector<std::size_t> frontier{start};
      while (!frontier.empty()) {
        const std::size_t v = frontier.back();
        frontier.pop_back();
        for (G g : {G::E, G::F})
          for (int i = 1; i <= kRank; ++i)
            for (const auto& [r, val] : m.generator(g, i).column(v))
              if (reached.insert(r).second) frontier.push_back(r);
      }
      if (reached.size() != s.dim()) {
        detail = "orbit of v_" + std::to_string(start + 1) + " spans " + std::to_string(reached.size());
        return false;
      }
    }
    return true;
  });
  return rep;
}

}  // namespace dx
