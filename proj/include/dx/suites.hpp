/**
 * @file suites.hpp
 * @brief Named verification suites exposed through `dxlink verify`.
 */

#pragma once

#include "dx/report.hpp"
#include "dx/tangle.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dx {

struct CorpusEntry {
  std::string name;
  std::string braid;
};

/// The cross-validation corpus of braid closures.
const std::vector<CorpusEntry>& skein_corpus();

/// Closed diagrams that present the same framed link in different ways.
struct PresentationFamily {
  std::string name;
  std::vector<std::pair<std::string, SlicedDiagram>> members;
};

std::vector<PresentationFamily> presentation_families();

/// Closure with the braid on strands 1..n and the return strands on the right.
SlicedDiagram left_braid_closure_slices(const BraidWord& b);

Report skein_check(const Category& cat);

/// relations | rmatrix | category | skein | all. Throws std::invalid_argument
/// on an unknown name. `progress` receives one line per finished check.
Report run_suite(const std::string& name,
                 const std::function<void(const std::string&)>& progress = {});

const std::vector<std::string>& suite_names();

}  // namespace dx
