#include "dx/suites.hpp"

#include "dx/dubrovnik.hpp"
#include "dx/rmatrix.hpp"

#include <stdexcept>

namespace dx {

namespace {

SlicedDiagram concat(const SlicedDiagram& x, const SlicedDiagram& y) {
  std::vector<Event> ev = x.events();
  ev.insert(ev.end(), y.events().begin(), y.events().end());
  return SlicedDiagram(std::move(ev));
}

SlicedDiagram closure(const std::string& braid) { return braid_closure_slices(parse_braid(braid)); }

// Positive curl on a single circle: (id (x) d)(c (x) id)(id (x) b) closed by b, d.
SlicedDiagram curled_circle() {
  return parse_sliced("cup 1\ncup 3\npos 2\ncap 3\ncap 1\n");
}

}  // namespace

const std::vector<CorpusEntry>& skein_corpus() {
  static const std::vector<CorpusEntry> corpus{
      {"unknot", "1:"},
      {"curl+", "2: 1"},
      {"curl-", "2: -1"},
      {"hopf", "2: 1 1"},
      {"trefoil", "2: 1 1 1"},
      {"trefoil-mirror", "2: -1 -1 -1"},
      {"cinquefoil", "2: 1 1 1 1 1"},
      {"figure-eight", "3: 1 -2 1 -2"},
      {"unlink", "2: 1 -1"},
  };
  return corpus;
}

SlicedDiagram left_braid_closure_slices(const BraidWord& b) {
  const int n = b.strands;
  std::vector<Event> ev;
  for (int i = 1; i <= n; ++i) ev.push_back({EventKind::cup, i});
  for (int l : b.letters) ev.push_back({l > 0 ? EventKind::pos : EventKind::neg, std::abs(l)});
  for (int i = n; i >= 1; --i) ev.push_back({EventKind::cap, i});
  return SlicedDiagram(std::move(ev));
}

std::vector<PresentationFamily> presentation_families() {
  std::vector<PresentationFamily> fams;
  fams.push_back({"hopf",
                  {{"2: 1 1", closure("2: 1 1")},
                   {"2: 1 -1 1 1", closure("2: 1 -1 1 1")},
                   {"2: -1 1 1 1", closure("2: -1 1 1 1")},
                   {"left closure of 2: 1 1", left_braid_closure_slices(parse_braid("2: 1 1"))},
                   {"two circles side by side", parse_sliced("cup 1\ncup 3\npos 2\npos 2\ncap 3\ncap 1\n")}}});
  fams.push_back({"trefoil",
                  {{"2: 1 1 1", closure("2: 1 1 1")},
                   {"2: 1 1 -1 1 1", closure("2: 1 1 -1 1 1")},
                   {"2: -1 1 1 1 1", closure("2: -1 1 1 1 1")},
                   {"left closure of 2: 1 1 1", left_braid_closure_slices(parse_braid("2: 1 1 1"))}}});
  fams.push_back({"figure-eight",
                  {{"3: 1 -2 1 -2", closure("3: 1 -2 1 -2")},
                   {"3: -2 1 -2 1", closure("3: -2 1 -2 1")},
                   {"3: 1 -2 2 -2 1 -2", closure("3: 1 -2 2 -2 1 -2")}}});
  fams.push_back({"braid-relation",
                  {{"3: 1 2 1 1", closure("3: 1 2 1 1")},
                   {"3: 2 1 2 1", closure("3: 2 1 2 1")},
                   {"3: 1 2 1 2 -2 1", closure("3: 1 2 1 2 -2 1")}}});
  return fams;
}

Report skein_check(const Category& cat) {
  Report rep("skein");

  for (const auto& entry : skein_corpus()) {
    rep.run("corpus." + entry.name, [&](std::string& detail) {
      SkeinComparison cmp = compare(parse_braid(entry.braid), cat);
      detail = entry.braid + " -> " + to_string(cmp.tangle);
      if (!cmp.agrees()) detail += " but 2*Lambda = " + to_string(cmp.expected);
      return cmp.agrees();
    });
  }

  for (const auto& fam : presentation_families()) {
    rep.run("presentation." + fam.name, [&](std::string& detail) {
      const IntLaurent ref = evaluate_sliced(fam.members.front().second, cat).value;
      detail = to_string(ref) + " for " + std::to_string(fam.members.size()) + " presentations";
      for (const auto& [label, diagram] : fam.members) {
        IntLaurent v = evaluate_sliced(diagram, cat).value;
        if (v != ref) {
          detail = label + " gives " + to_string(v) + ", expected " + to_string(ref);
          return false;
        }
      }
      return true;
    });
    rep.run("oracle.regular_isotopy." + fam.name, [&](std::string& detail) {
      const TwoVarPoly ref = dubrovnik_poly(link_graph(fam.members.front().second));
      detail = to_string(ref);
      for (const auto& [label, diagram] : fam.members) {
        TwoVarPoly v = dubrovnik_poly(link_graph(diagram));
        if (!(v == ref)) {
          detail = label + " gives " + to_string(v);
          return false;
        }
      }
      return true;
    });
  }

  rep.run("oracle.circle", [&](std::string& detail) {
    TwoVarPoly v = dubrovnik_poly(braid_closure_graph(parse_braid("1:")));
    detail = to_string(v);
    return v == TwoVarPoly(1);
  });
  rep.run("oracle.curl", [&](std::string& detail) {
    TwoVarPoly v = dubrovnik_poly(link_graph(curled_circle()));
    detail = to_string(v);
    return v == TwoVarPoly::a();
  });
  rep.run("oracle.unlink", [&](std::string& detail) {
    TwoVarPoly flat = dubrovnik_poly(link_graph(parse_sliced("cup 1\ncap 1\ncup 1\ncap 1\n")));
    TwoVarPoly clasp = dubrovnik_poly(braid_closure_graph(parse_braid("2: 1 -1")));
    detail = to_string(clasp);
    return flat == TwoVarPoly::delta() && clasp == TwoVarPoly::delta();
  });
  rep.run("oracle.delta_specializes_to_2", [&](std::string& detail) {
    IntLaurent v = specialize(TwoVarPoly::delta());
    detail = to_string(v);
    return v == IntLaurent(2);
  });
  rep.run("oracle.memo_soundness", [&](std::string& detail) {
    DubrovnikOptions off;
    off.memo = false;
    for (const auto& entry : skein_corpus()) {
      LinkGraph g = braid_closure_graph(parse_braid(entry.braid));
      if (!(dubrovnik_poly(g) == dubrovnik_poly(g, off))) {
        detail = entry.name;
        return false;
      }
    }
    detail = std::to_string(skein_corpus().size()) + " diagrams";
    return true;
  });

  rep.run("tangle.curl", [&](std::string& detail) {
    IntLaurent v = evaluate_sliced(curled_circle(), cat).value;
    detail = to_string(v);
    return v == IntLaurent::monomial(-2, -1);
  });
  rep.run("tangle.mirror", [&](std::string& detail) {
    for (const auto& entry : skein_corpus()) {
      BraidWord b = parse_braid(entry.braid);
      if (invariant(mirror(b), cat).value != invariant(b, cat).value.inverted_variable()) {
        detail = entry.name;
        return false;
      }
    }
    return true;
  });
  rep.run("tangle.split_union", [&](std::string& detail) {
    SlicedDiagram x = closure("2: 1 1 1"), y = closure("2: 1 1");
    IntLaurent joint = evaluate_sliced(concat(x, y), cat).value;
    IntLaurent prod = evaluate_sliced(x, cat).value * evaluate_sliced(y, cat).value;
    detail = to_string(joint);
    return joint == prod;
  });
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "rmatrix", "category", "skein", "all"};
  return names;
}

Report run_suite(const std::string& name, const std::function<void(const std::string&)>& progress) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == name;
  if (!known) throw std::invalid_argument("unknown suite '" + name + "'");

  const bool all = name == "all";
  Report out(name);
  auto emit = [&](const Report& r) {
    if (progress)
      for (const Check& c : r.checks())
        progress(std::string(c.passed ? "PASS " : "FAIL ") + r.suite() + "." + c.id);
  };
  auto take = [&](const Report& r) {
    emit(r);
    if (all || r.suite() != name) out.merge(r);
    else
      for (const Check& c : r.checks()) out.add(c.id, c.passed, c.detail);
  };

  const Category& cat = standard_category();
  if (all || name == "relations") take(check_defining_relations(cat.module));
  if (all || name == "rmatrix") {
    Report r = rmatrix_check(cat);
    r.merge(spectral_check(cat.braid));
    r.merge(yang_baxter_check(cat, progress));
    take(r);
  }
  if (all || name == "category") take(category_check(cat));
  if (all || name == "skein") take(skein_check(cat));
  return out;
}

}  // namespace dx
