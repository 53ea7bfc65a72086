#pragma once

#include <complex>

namespace pdm {

// Grid values are carried in extended precision. Fourth-order second
// differences on ~4000-node grids otherwise sit on the double roundoff floor.
using real = long double;
using complex = std::complex<real>;

inline constexpr real pi = 3.141592653589793238462643383279502884L;

}  // namespace pdm
