#include "dx/dubrovnik.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_map>

namespace dx {

namespace {

struct End {
  int x;
  int s;
};

struct Walk {
  std::vector<End> visits;  // crossing ends entered, in traversal order
  std::vector<int> component;
  std::vector<int> edge_order;
  int components = 0;
};

// Components in order of smallest label, each walked from that label towards
// the smaller neighbouring label (ties: the first end in (crossing, slot) order).
Walk walk(const LinkGraph& g) {
  std::map<int, std::vector<End>> ends;
  for (int x = 0; x < int(g.crossings.size()); ++x)
    for (int s = 0; s < 4; ++s) ends[g.crossings[x][s]].push_back({x, s});

  Walk w;
  std::set<int> seen;
  auto next_label = [&](End e) { return g.crossings[e.x][(e.s + 2) % 4]; };
  for (const auto& [start, es] : ends) {
    if (seen.count(start)) continue;
    End in = next_label(es[1]) < next_label(es[0]) ? es[1] : es[0];
    const int comp = w.components++;
    seen.insert(start);
    w.edge_order.push_back(start);
    while (true) {
      w.visits.push_back(in);
      w.component.push_back(comp);
      const int t = (in.s + 2) % 4;
      const int f = g.crossings[in.x][t];
      if (f == start) break;
      seen.insert(f);
      w.edge_order.push_back(f);
      const auto& fe = ends.at(f);
      in = (fe[0].x == in.x && fe[0].s == t) ? fe[1] : fe[0];
    }
  }
  return w;
}

std::array<int, 4> rotated(const std::array<int, 4>& c, int k) {
  return {c[k % 4], c[(k + 1) % 4], c[(k + 2) % 4], c[(k + 3) % 4]};
}

// Relabel edges in walk order, normalize each crossing up to rotation by two,
// sort crossings. The key identifies the diagram up to relabeling.
LinkGraph canonical(const LinkGraph& g, std::string& key) {
  Walk w = walk(g);
  std::map<int, int> label;
  for (int e : w.edge_order) label.emplace(e, int(label.size()));
  LinkGraph out;
  out.free_loops = g.free_loops;
  for (const auto& c : g.crossings) {
    std::array<int, 4> r{label.at(c[0]), label.at(c[1]), label.at(c[2]), label.at(c[3])};
    out.crossings.push_back(std::min(r, rotated(r, 2)));
  }
  std::sort(out.crossings.begin(), out.crossings.end());
  key = std::to_string(out.free_loops);
  for (const auto& c : out.crossings)
    for (int l : c) key += "," + std::to_string(l);
  return out;
}

// Removes crossing x and joins its ends along the pairs (p0,p1), (p2,p3).
LinkGraph smooth(const LinkGraph& g, int x, int p0, int p1, int p2, int p3) {
  LinkGraph out = g;
  std::array<int, 4> ends = out.crossings[x];
  out.crossings.erase(out.crossings.begin() + x);
  auto join = [&](int a, int b) {
    int u = ends[a], v = ends[b];
    if (u == v) {
      ++out.free_loops;
      return;
    }
    for (auto& c : out.crossings)
      for (int& l : c)
        if (l == v) l = u;
    for (int& l : ends)
      if (l == v) l = u;
  };
  join(p0, p1);
  join(p2, p3);
  return out;
}

int default_crossing_limit() {
  if (const char* env = std::getenv("DXLINK_CROSSING_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 16;
}

class Evaluator {
 public:
  Evaluator(const DubrovnikOptions& opt, DubrovnikStats& stats)
      : memo_(opt.memo), stats_(stats) {}

  TwoVarPoly eval(const LinkGraph& g) {
    ++stats_.calls;
    if (g.crossings.empty()) {
      if (g.free_loops == 0) throw DiagramError("empty diagram");
      return delta_pow(g.free_loops - 1);
    }
    std::string key;
    LinkGraph cur = canonical(g, key);
    if (memo_) {
      auto it = cache_.find(key);
      if (it != cache_.end()) {
        ++stats_.memo_hits;
        return it->second;
      }
    }

    Walk w = walk(cur);
    std::vector<char> visited(cur.crossings.size(), 0);
    std::vector<int> bad;
    for (const End& e : w.visits) {
      if (visited[e.x]) continue;
      visited[e.x] = 1;
      if (e.s % 2 == 0) bad.push_back(e.x);
    }

    TwoVarPoly total;
    for (int x : bad) {
      TwoVarPoly diff = eval(smooth(cur, x, 0, 1, 2, 3)) - eval(smooth(cur, x, 0, 3, 1, 2));
      total += TwoVarPoly::z() * diff;
      cur.crossings[x] = rotated(cur.crossings[x], 1);
    }
    total += TwoVarPoly::monomial(1, cur.self_writhe(), 0) * delta_pow(cur.components() - 1);

    if (memo_) cache_.emplace(std::move(key), total);
    return total;
  }

 private:
  TwoVarPoly delta_pow(int n) {
    while (int(deltas_.size()) <= n)
      deltas_.push_back(deltas_.empty() ? TwoVarPoly(1) : deltas_.back() * TwoVarPoly::delta());
    return deltas_[n];
  }

  bool memo_;
  DubrovnikStats& stats_;
  std::unordered_map<std::string, TwoVarPoly> cache_;
  std::vector<TwoVarPoly> deltas_;
};

}  // namespace

void LinkGraph::validate() const {
  std::map<int, int> count;
  for (const auto& c : crossings)
    for (int l : c) ++count[l];
  for (const auto& [l, n] : count)
    if (n != 2)
      throw DiagramError("edge label " + std::to_string(l) + " occurs " + std::to_string(n) +
                         " times");
  if (free_loops < 0) throw DiagramError("negative free loop count");
}

int LinkGraph::components() const {
  return (crossings.empty() ? 0 : walk(*this).components) + free_loops;
}

int LinkGraph::self_writhe() const {
  if (crossings.empty()) return 0;
  Walk w = walk(*this);
  std::vector<int> under_in(crossings.size(), -1), over_in(crossings.size(), -1);
  std::vector<int> under_comp(crossings.size()), over_comp(crossings.size());
  for (std::size_t i = 0; i < w.visits.size(); ++i) {
    const End& e = w.visits[i];
    if (e.s % 2 == 0) {
      under_in[e.x] = e.s;
      under_comp[e.x] = w.component[i];
    } else {
      over_in[e.x] = e.s;
      over_comp[e.x] = w.component[i];
    }
  }
  int wr = 0;
  for (std::size_t x = 0; x < crossings.size(); ++x) {
    if (under_comp[x] != over_comp[x]) continue;
    const bool positive = (under_in[x] == 0 && over_in[x] == 3) || (under_in[x] == 2 && over_in[x] == 1);
    wr += positive ? 1 : -1;
  }
  return wr;
}

LinkGraph link_graph(const SlicedDiagram& d) {
  if (!d.closed()) throw DiagramError("diagram is not closed");
  std::vector<int> parent;
  auto fresh = [&] {
    parent.push_back(int(parent.size()));
    return int(parent.size()) - 1;
  };
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  LinkGraph g;
  std::vector<int> row;
  for (const Event& e : d.events()) {
    const int i = e.position - 1;
    switch (e.kind) {
      case EventKind::cup: {
        int l = fresh();
        row.insert(row.begin() + i, {l, l});
        break;
      }
      case EventKind::cap: {
        int u = find(row[i]), v = find(row[i + 1]);
        row.erase(row.begin() + i, row.begin() + i + 2);
        if (u == v) ++g.free_loops;
        else parent[v] = u;
        break;
      }
      case EventKind::pos:
      case EventKind::neg: {
        const int bl = row[i], br = row[i + 1];
        const int tl = fresh(), tr = fresh();
        if (e.kind == EventKind::pos) g.crossings.push_back({br, tr, tl, bl});
        else g.crossings.push_back({bl, br, tr, tl});
        row[i] = tl;
        row[i + 1] = tr;
        break;
      }
    }
  }
  for (auto& c : g.crossings)
    for (int& l : c) l = find(l);
  g.validate();
  return g;
}

LinkGraph braid_closure_graph(const BraidWord& b) { return link_graph(braid_closure_slices(b)); }

TwoVarPoly::TwoVarPoly(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

TwoVarPoly TwoVarPoly::monomial(const Rational& c, int a_exp, int z_exp) {
  TwoVarPoly p;
  p.add_term(a_exp, z_exp, c);
  return p;
}

TwoVarPoly TwoVarPoly::delta() {
  TwoVarPoly p = monomial(1, 1, -1);
  p.add_term(-1, -1, -1);
  p.add_term(0, 0, 1);
  return p;
}

void TwoVarPoly::add_term(int a_exp, int z_exp, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(Key{a_exp, z_exp}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TwoVarPoly& TwoVarPoly::operator+=(const TwoVarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TwoVarPoly& TwoVarPoly::operator-=(const TwoVarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TwoVarPoly operator*(const TwoVarPoly& x, const TwoVarPoly& y) {
  TwoVarPoly p;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_) p.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  return p;
}

TwoVarPoly TwoVarPoly::pow(int n) const {
  if (n < 0) throw std::domain_error("negative power of a two-variable polynomial");
  TwoVarPoly r(1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string to_string(const TwoVarPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    first = false;
    std::vector<std::string> parts;
    if (mag != 1 || (k.first == 0 && k.second == 0)) parts.push_back(mag.get_str());
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      parts.push_back(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
    };
    var("a", k.first);
    var("z", k.second);
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  }
  return s;
}

TwoVarPoly dubrovnik_poly(const LinkGraph& g, const DubrovnikOptions& opt, DubrovnikStats* stats) {
  g.validate();
  const int limit = opt.crossing_limit > 0 ? opt.crossing_limit : default_crossing_limit();
  if (int(g.crossings.size()) > limit)
    throw RecursionBudgetExceeded("diagram has " + std::to_string(g.crossings.size()) +
                                  " crossings, limit is " + std::to_string(limit));
  DubrovnikStats local;
  Evaluator ev(opt, stats ? *stats : local);
  TwoVarPoly p = ev.eval(g);
  for (const auto& [k, c] : p.terms())
    if (c.get_den() != 1) throw std::logic_error("non-integral coefficient " + c.get_str());
  return p;
}

IntLaurent specialize(const TwoVarPoly& p) {
  const RatFunc a = -RatFunc::q_power(-1);
  const RatFunc z = RatFunc::lambda();
  RatFunc sum;
  for (const auto& [k, c] : p.terms()) sum += RatFunc(c) * a.pow(k.first) * z.pow(k.second);
  return to_integer_laurent(sum);
}

SkeinComparison compare(const BraidWord& b, const Category& cat) {
  SkeinComparison r;
  r.tangle = invariant(b, cat).value;
  r.dubrovnik = dubrovnik_poly(braid_closure_graph(b));
  r.expected = IntLaurent(2) * specialize(r.dubrovnik);
  return r;
}

}  // namespace dx
