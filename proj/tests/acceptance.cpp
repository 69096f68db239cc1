// Acceptance run: one PASS/FAIL line per criterion.
//
// usage: acceptance <path-to-dxlink> <deviations-file>

#include "dx/dubrovnik.hpp"
#include "dx/rmatrix.hpp"
#include "dx/suites.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace dx;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool ok = o.passed && in_time;
  if (!ok) ++failures;
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " " << n << " " << name << "  " << o.detail << " ["
       << std::fixed << std::setprecision(2) << secs << " s, limit " << limit_seconds << " s"
       << (in_time ? "" : ", exceeded") << "]";
  std::cout << line.str() << std::endl;
}

Outcome from_report(const Report& r) {
  std::size_t total = r.checks().size();
  std::ostringstream d;
  d << total - r.failures() << "/" << total << " checks";
  for (const Check& c : r.checks())
    if (!c.passed) d << "; failed " << c.id << (c.detail.empty() ? "" : " (" + c.detail + ")");
  return {r.passed() && total > 0, d.str()};
}

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <dxlink> <deviations-file>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string deviations_path = argv[2];

  const Category& cat = standard_category();

  criterion(1, "relation suite", 5, [&] {
    Report r = check_defining_relations(cat.module);
    std::size_t commut = 0;
    for (const Check& c : r.checks())
      if (c.id.rfind("commut.", 0) == 0 && c.id.find("misprint") == std::string::npos) ++commut;
    Outcome o = from_report(r);
    o.detail += ", " + std::to_string(commut) + " commutation identities";
    o.passed = o.passed && commut >= 2 * 16;
    return o;
  });

  criterion(2, "braiding regression against the reference blocks", 60, [&] {
    ReferenceComparison cmp = compare_with_printed(cat.braid);
    std::ofstream(deviations_path) << render_deviations(cmp);
    Report r = rmatrix_check(cat);
    bool corroborated = true;
    for (const Check& c : r.checks())
      if (c.id.rfind("corroborated", 0) == 0) corroborated = corroborated && c.passed;
    std::ostringstream d;
    d << cmp.matches << "/" << cmp.entries << " entries match (" << std::setprecision(4)
      << 100.0 * cmp.match_ratio() << "%), " << cmp.deviations.size()
      << " deviations logged to " << deviations_path;
    return Outcome{cmp.entries == 656 && cmp.match_ratio() >= 0.95 && corroborated && r.passed(), d.str()};
  });

  criterion(3, "spectral claims", 120, [&] { return from_report(spectral_check(cat.braid)); });

  criterion(4, "graded Yang-Baxter on M^3", 600, [&] { return from_report(yang_baxter_check(cat)); });

  criterion(5, "category identities", 60, [&] { return from_report(category_check(cat)); });

  criterion(6, "tangle invariant equals 2 Lambda(-q^-1, q-q^-1) on the corpus", 120, [&] {
    Outcome o{skein_corpus().size() >= 8, ""};
    for (const auto& entry : skein_corpus()) {
      SkeinComparison cmp = compare(parse_braid(entry.braid), cat);
      o.passed = o.passed && cmp.agrees();
      o.detail += entry.name + "=" + to_string(cmp.tangle);
      if (!cmp.agrees()) o.detail += "(oracle " + to_string(cmp.expected) + ")";
      o.detail += "; ";
    }
    o.detail += std::to_string(skein_corpus().size()) + " diagrams";
    return o;
  });

  criterion(7, "presentation independence", 120, [&] {
    Outcome o{true, ""};
    for (const auto& fam : presentation_families()) {
      if (fam.name != "hopf" && fam.name != "trefoil") continue;
      const IntLaurent ref = evaluate_sliced(fam.members.front().second, cat).value;
      bool same = fam.members.size() >= 3;
      for (const auto& m : fam.members) same = same && evaluate_sliced(m.second, cat).value == ref;
      o.passed = o.passed && same;
      o.detail += fam.name + ": " + std::to_string(fam.members.size()) + " presentations -> " +
                  to_string(ref) + (same ? "" : " (MISMATCH)") + "; ";
    }
    return o;
  });

  criterion(8, "CLI output determinism", 600, [&] {
    const std::vector<std::string> cmds{
        "invariant --braid \"3: 1 -2 1 -2\" --json",
        "dubrovnik --braid \"2: 1 1 1\"",
        "dubrovnik --braid \"2: 1 1 1\" --specialize",
        "braiding --format json --split",
        "braiding --format csv",
        "verify --suite all --json",
    };
    Outcome o{true, ""};
    for (const auto& c : cmds) {
      Run a = run("\"" + cli + "\" " + c), b = run("\"" + cli + "\" " + c);
      const bool same = a.out == b.out && a.status == 0 && b.status == 0 && !a.out.empty();
      o.passed = o.passed && same;
      if (!same) o.detail += "differs or failed: " + c + "; ";
    }
    Run all = run("\"" + cli + "\" verify --suite all");
    o.passed = o.passed && all.status == 0;
    o.detail += std::to_string(cmds.size()) + " commands byte-identical over two runs; verify --suite all exit " +
                std::to_string(all.status);
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
