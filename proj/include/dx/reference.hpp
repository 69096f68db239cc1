#pragma once

#include <array>

namespace dx {

/// Regression targets: the reference braiding blocks of M (x) M, entries in
/// canonical polynomial text. Indexing follows even_block_basis() and
/// odd_block_basis() in rmatrix.hpp.
extern const std::array<std::array<const char*, 20>, 20> kPrintedEven;
extern const std::array<std::array<const char*, 16>, 16> kPrintedOdd;

}  // namespace dx
