#include "dx/tangle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>

namespace dx {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw DiagramError("bad " + what + ": '" + tok + "'");
  }
  if (used != tok.size()) throw DiagramError("bad " + what + ": '" + tok + "'");
  return v;
}

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::cup: return "cup";
    case EventKind::cap: return "cap";
    case EventKind::pos: return "pos";
    case EventKind::neg: return "neg";
  }
  return "?";
}

constexpr int kMaxStrands = 24;  // 6^24 < 2^64

std::array<std::uint64_t, kMaxStrands + 3> powers_of_six() {
  std::array<std::uint64_t, kMaxStrands + 3> p{};
  p[0] = 1;
  for (std::size_t i = 1; i < p.size(); ++i) p[i] = p[i - 1] * 6;
  return p;
}

const auto kPow6 = powers_of_six();

}  // namespace

BraidWord parse_braid(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DiagramError("braid must look like 'n: letters'");
  BraidWord b;
  b.strands = parse_int(trim(text.substr(0, colon)), "strand count");
  if (b.strands < 1) throw DiagramError("strand count must be positive");
  std::istringstream in{std::string(text.substr(colon + 1))};
  std::string tok;
  while (in >> tok) {
    int l = parse_int(tok, "braid letter");
    if (l == 0 || std::abs(l) >= b.strands)
      throw DiagramError("braid letter " + tok + " out of range for " +
                         std::to_string(b.strands) + " strands");
    b.letters.push_back(l);
  }
  return b;
}

std::string to_string(const BraidWord& b) {
  std::string s = std::to_string(b.strands) + ":";
  for (int l : b.letters) s += " " + std::to_string(l);
  return s;
}

BraidWord mirror(const BraidWord& b) {
  BraidWord m = b;
  for (int& l : m.letters) l = -l;
  return m;
}

SlicedDiagram::SlicedDiagram(std::vector<Event> events) : events_(std::move(events)) {
  int k = 0;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    const int p = e.position;
    bool ok = false;
    switch (e.kind) {
      case EventKind::cup: ok = p >= 1 && p <= k + 1; break;
      case EventKind::cap:
      case EventKind::pos:
      case EventKind::neg: ok = p >= 1 && p + 1 <= k; break;
    }
    if (!ok)
      throw DiagramError("event " + std::to_string(i + 1) + " (" + kind_name(e.kind) + " " +
                         std::to_string(p) + ") invalid with " + std::to_string(k) + " strands");
    if (e.kind == EventKind::cup) k += 2;
    if (e.kind == EventKind::cap) k -= 2;
    profile_.push_back(k);
  }
}

int SlicedDiagram::peak() const { return *std::max_element(profile_.begin(), profile_.end()); }

std::size_t SlicedDiagram::crossings() const {
  return std::count_if(events_.begin(), events_.end(), [](const Event& e) {
    return e.kind == EventKind::pos || e.kind == EventKind::neg;
  });
}

SlicedDiagram parse_sliced(std::string_view text) {
  std::vector<Event> events;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string kind, pos, extra;
    if (!(ls >> kind)) continue;
    if (!(ls >> pos) || (ls >> extra))
      throw DiagramError("line " + std::to_string(lineno) + ": expected 'kind position'");
    EventKind k;
    if (kind == "cup") k = EventKind::cup;
    else if (kind == "cap") k = EventKind::cap;
    else if (kind == "pos") k = EventKind::pos;
    else if (kind == "neg") k = EventKind::neg;
    else throw DiagramError("line " + std::to_string(lineno) + ": unknown event '" + kind + "'");
    events.push_back({k, parse_int(pos, "position")});
  }
  return SlicedDiagram(std::move(events));
}

std::string to_string(const SlicedDiagram& d) {
  std::string s;
  for (const Event& e : d.events()) s += std::string(kind_name(e.kind)) + " " + std::to_string(e.position) + "\n";
  return s;
}

SlicedDiagram braid_closure_slices(const BraidWord& b) {
  const int n = b.strands;
  std::vector<Event> ev;
  for (int i = 1; i <= n; ++i) ev.push_back({EventKind::cup, i});
  for (int l : b.letters) ev.push_back({l > 0 ? EventKind::pos : EventKind::neg, n + std::abs(l)});
  for (int i = n; i >= 1; --i) ev.push_back({EventKind::cap, i});
  return SlicedDiagram(std::move(ev));
}

EvalResult evaluate_sliced(const SlicedDiagram& d, const Category& cat) {
  if (!d.closed())
    throw DiagramError("diagram is not closed: " + std::to_string(d.final_strands()) +
                       " strands remain");
  if (d.peak() > kMaxStrands)
    throw DiagramError("diagram too wide: " + std::to_string(d.peak()) + " strands");

  const SuperMap& b = cat.duality.b;
  const SuperMap& dd = cat.duality.d;
  const SuperMap& c = cat.braid.c;
  const SuperMap& ci = cat.braid.c_inv;

  using State = std::map<std::uint64_t, RatFunc>;
  State state{{0, RatFunc(1)}};
  int k = 0;
  EvalResult res;
  res.stats.peak_terms = 1;

  auto add = [](State& s, std::uint64_t idx, const RatFunc& v) {
    auto [it, fresh] = s.emplace(idx, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) s.erase(it);
    }
  };

  for (const Event& e : d.events()) {
    State next;
    const int p = e.position;
    switch (e.kind) {
      case EventKind::cup: {
        const std::uint64_t tail = kPow6[k - p + 1];
        for (const auto& [idx, v] : state) {
          const std::uint64_t left = idx / tail, right = idx % tail;
          for (const auto& [pair, coef] : b.column(0))
            add(next, (left * 36 + pair) * tail + right, v * coef);
        }
        k += 2;
        break;
      }
      case EventKind::cap: {
        const std::uint64_t tail = kPow6[k - p - 1];
        for (const auto& [idx, v] : state) {
          const std::uint64_t pair = (idx / tail) % 36;
          const auto& col = dd.column(pair);
          auto it = col.find(0);
          if (it == col.end()) continue;
          const std::uint64_t left = idx / (tail * 36), right = idx % tail;
          add(next, left * tail + right, v * it->second);
        }
        k -= 2;
        break;
      }
      case EventKind::pos:
      case EventKind::neg: {
        const SuperMap& f = e.kind == EventKind::pos ? c : ci;
        const std::uint64_t tail = kPow6[k - p - 1];
        for (const auto& [idx, v] : state) {
          const std::uint64_t pair = (idx / tail) % 36;
          const std::uint64_t base = idx - pair * tail;
          for (const auto& [r, coef] : f.column(pair)) add(next, base + r * tail, v * coef);
        }
        break;
      }
    }
    state = std::move(next);
    ++res.stats.slices;
    res.stats.peak_terms = std::max(res.stats.peak_terms, state.size());
  }
  res.stats.peak_strands = d.peak();
  auto it = state.find(0);
  res.value = it == state.end() ? IntLaurent() : to_integer_laurent(it->second);
  return res;
}

EvalResult invariant(const BraidWord& b, const Category& cat) {
  return evaluate_sliced(braid_closure_slices(b), cat);
}

}  // namespace dx
