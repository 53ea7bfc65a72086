#include <algorithm>
#include <cmath>

#include "pdm/validation.hpp"

namespace pdm {

NodeCount node_count(const GridFunction& f, Component component, real amplitude_floor) {
    std::vector<real> v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) v[i] = component == Component::real ? f[i].real() : f[i].imag();
    real peak = 0;
    for (real x : v) peak = std::max(peak, std::abs(x));
    if (peak == 0) return {0, true};

    const real cut = amplitude_floor * peak;
    NodeCount out;
    int last_sign = 0;
    for (real x : v) {
        if (std::abs(x) <= cut) continue;
        const int s = x > 0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++out.count;
        last_sign = s;
    }
    return out;
}

}  // namespace pdm
