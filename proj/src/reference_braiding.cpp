// Braiding of M (x) M as printed for the even block c_0 (20x20) and the odd
// block c_1 (16x16), with lambda = q - q^{-1} expanded. Row-major; basis
// orders are those of even_block_basis() / odd_block_basis().

#include "dx/reference.hpp"

namespace dx {

const std::array<std::array<const char*, 20>, 20> kPrintedEven = {{
    {{"q", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "q^-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "q^-1", "-q^-1 + q^3", "0", "0", "0", "0", "-1 + q^2", "0", "0", "q - q^3", "0", "0", "q - q^3", "0", "0", "-q^2 + q^4", "0", "0", "0"}},
    {{"0", "0", "0", "q", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "-q^-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "q^-2 - 1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-q", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "-1", "0", "0", "-q^-1 + q", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "-q^-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "-q^-1 + q", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-q", "0", "0", "-1 + q^2", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "-q^-1 + q", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "-q^-1 + q", "0", "0", "0", "0", "0", "0", "0", "-q", "0", "0", "0", "0", "0", "-1 + q^2", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-q^-1", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "0"}},
    {{"0", "0", "1 - q^2", "0", "0", "0", "0", "-q", "0", "0", "-1 + q^2", "0", "0", "-1 + q^2", "0", "0", "-q^-1 + 2*q - q^3", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "0", "0", "0", "-q^-1 + q", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-1", "0", "0", "-q^-1 + q", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-q^-1"}},
}};

const std::array<std::array<const char*, 16>, 16> kPrintedOdd = {{
    {{"0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"}},
    {{"0", "0", "0", "0", "-q^-1 + q", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "-q^-1 + q", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "-q^-1 + q", "0", "0", "0", "0", "0", "0", "1", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "-q^-1 + q", "0", "0", "0", "0", "0", "0", "0", "1"}},
    {{"1", "0", "0", "0", "0", "0", "0", "0", "-q^-1 + q", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "-q^-1 + q", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-q^-1 + q", "0", "0", "0"}},
    {{"0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0"}},
    {{"0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "-q^-1 + q", "0"}},
    {{"0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0"}},
}};

}  // namespace dx
