// dxlink: invariants of framed links from the six-dimensional D(2,1;1) module.

#include "dx/dubrovnik.hpp"
#include "dx/rmatrix.hpp"
#include "dx/suites.hpp"
#include "dx/tangle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct DiagramInput {
  std::string braid;
  std::string sliced;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--braid", braid, "braid word, e.g. \"3: 1 -2 1 -2\"");
    auto* s = cmd->add_option("--sliced", sliced, "file of `kind position` events");
    b->excludes(s);
    s->excludes(b);
  }

  dx::SlicedDiagram diagram() const {
    if (!sliced.empty()) return dx::parse_sliced(read_file(sliced));
    if (braid.empty()) throw std::invalid_argument("one of --braid or --sliced is required");
    return dx::braid_closure_slices(dx::parse_braid(braid));
  }
};

std::string entry_text(const dx::RatFunc& f) { return dx::to_string(dx::to_integer_laurent(f)); }

std::vector<std::vector<std::string>> rows_of(const dx::SuperMap& m, const std::vector<std::size_t>& rows,
                                              const std::vector<std::size_t>& cols) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t r : rows) {
    std::vector<std::string> line;
    for (std::size_t c : cols) line.push_back(entry_text(m.get(r, c)));
    out.push_back(std::move(line));
  }
  return out;
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string s;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i];
    s += "\n";
  }
  return s;
}

std::string basis_label(std::size_t idx) {
  return "v" + std::to_string(idx / 6 + 1) + "v" + std::to_string(idx % 6 + 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact link invariants from the D(2,1;1) six-dimensional module"};
  app.require_subcommand(1);

  DiagramInput inv_in;
  bool inv_json = false;
  auto* inv = app.add_subcommand("invariant", "evaluate I_L of a closed diagram");
  inv_in.attach(inv);
  inv->add_flag("--json", inv_json, "print value and statistics as JSON");

  DiagramInput dub_in;
  bool dub_spec = false;
  auto* dub = app.add_subcommand("dubrovnik", "Dubrovnik polynomial of a closed diagram");
  dub_in.attach(dub);
  dub->add_flag("--specialize", dub_spec, "substitute a = -q^-1, z = q - q^-1");

  std::string format = "json";
  bool split = false;
  std::string deviations;
  auto* brd = app.add_subcommand("braiding", "dump the braiding c on M (x) M");
  brd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  brd->add_flag("--split", split, "even and odd blocks in the reference basis order");
  brd->add_option("--deviations", deviations, "write mismatches against the reference blocks");

  std::string suite = "all";
  bool ver_json = false;
  bool verbose = false;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", suite)->check(CLI::IsMember(dx::suite_names()));
  ver->add_flag("--json", ver_json);
  ver->add_flag("-v,--verbose", verbose, "stream progress to stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) {
      dx::EvalResult r = dx::evaluate_sliced(inv_in.diagram());
      if (inv_json) {
        ordered_json j;
        j["value"] = dx::to_string(r.value);
        j["stats"] = {{"slices", r.stats.slices},
                      {"peak_strands", r.stats.peak_strands},
                      {"peak_terms", r.stats.peak_terms}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << dx::to_string(r.value) << "\n";
      }
      return 0;
    }

    if (dub->parsed()) {
      dx::TwoVarPoly p = dx::dubrovnik_poly(dx::link_graph(dub_in.diagram()));
      std::cout << (dub_spec ? dx::to_string(dx::specialize(p)) : dx::to_string(p)) << "\n";
      return 0;
    }

    if (brd->parsed()) {
      const dx::Category& cat = dx::standard_category();
      const dx::SuperMap& c = cat.braid.c;
      if (!deviations.empty()) {
        std::ofstream out(deviations);
        if (!out) throw std::runtime_error("cannot write " + deviations);
        out << dx::render_deviations(dx::compare_with_printed(cat.braid));
      }
      if (split) {
        auto even = dx::even_block_basis(), odd = dx::odd_block_basis();
        auto c0 = rows_of(c, even, even), c1 = rows_of(c, odd, odd);
        if (format == "csv") {
          std::cout << "# c0\n" << csv(c0) << "# c1\n" << csv(c1);
        } else {
          ordered_json j;
          std::vector<std::string> be, bo;
          for (auto i : even) be.push_back(basis_label(i));
          for (auto i : odd) bo.push_back(basis_label(i));
          j["c0"] = {{"basis", be}, {"matrix", c0}};
          j["c1"] = {{"basis", bo}, {"matrix", c1}};
          std::cout << j.dump(2) << "\n";
        }
      } else {
        std::vector<std::size_t> all(36);
        for (std::size_t i = 0; i < 36; ++i) all[i] = i;
        auto full = rows_of(c, all, all);
        if (format == "csv") {
          std::cout << csv(full);
        } else {
          std::vector<std::string> basis;
          for (auto i : all) basis.push_back(basis_label(i));
          ordered_json j;
          j["basis"] = basis;
          j["matrix"] = full;
          std::cout << j.dump(2) << "\n";
        }
      }
      return 0;
    }

    if (ver->parsed()) {
      std::function<void(const std::string&)> progress;
      if (verbose) progress = [](const std::string& line) { std::cerr << line << std::endl; };
      dx::Report rep = dx::run_suite(suite, progress);
      std::cout << (ver_json ? rep.to_json() + "\n" : rep.to_text());
      return rep.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
