#include <doctest.h>

#include <cmath>

#include "pdm/quadrature.hpp"
#include "pdm/validation.hpp"
#include "support.hpp"

using namespace pdm;
using pdm::test::make_system;
using pdm::test::near;

TEST_SUITE("ladder-core") {

TEST_CASE("single state set") {
    const StateSet s = build_states(make_system("1 + x^2", -4, 4, 801, 0.2L), 0);
    CHECK(s.size() == 1);
    CHECK(s.n_max() == 0);
    CHECK_THROWS_AS(build_states(make_system("1", -8, 8, 801), -1), std::invalid_argument);
}

TEST_CASE("oscillator states are the Hermite functions") {
    const LadderSystem sys = make_system("1", -10, 10, 2001);
    const StateSet s = build_states(sys, 5);
    // textbook recurrence on a real argument, independent of the complex-shift oracle
    for (std::size_t i = 0; i < sys.grid().size(); ++i) {
        const real x = sys.grid().x(i);
        real prev = 0, cur = std::pow(pi, -0.25L) * std::exp(-x * x / 2);
        for (int n = 0; n <= 5; ++n) {
            CHECK(std::abs(s.psi(n)[i] - cur) < 1e-8L);
            const real next = std::sqrt(2.0L / (n + 1)) * x * cur - std::sqrt(real(n) / (n + 1)) * prev;
            prev = cur;
            cur = next;
        }
    }
}

TEST_CASE("normalization, energies and conjugate family") {
    const LadderSystem sys = make_system("1 + x^2", -4, 4, 4001, 0.2L);
    const StateSet s = build_states(sys, 6);
    for (std::size_t n = 0; n < s.size(); ++n) {
        CHECK(near(sesquilinear_pair(s.psi(n), s.psi(n)).real(), 1, 1e-15L));
        CHECK(s.norm_constants()[n].imag() == 0);
        CHECK(s.norm_constants()[n].real() > 0);
        if (n > 0) CHECK(s.energies()[n] - s.energies()[n - 1] == 1);
        const GridFunction phi = s.phi(n);
        for (std::size_t i = 0; i < phi.size(); ++i) CHECK(phi[i] == std::conj(s.psi(n)[i]));
    }
    CHECK(near(s.norm_constants()[0].real(), 0.7511255444649424829L, 1e-9L));
    CHECK(s.warnings().empty());
    // level 9 needs a wider box than [-4, 4] to decay
    CHECK_FALSE(build_states(make_system("1 + x^2", -5, 5, 5001, 0.2L), 9).warnings().empty());
}

TEST_CASE("grid construction agrees with the polynomial construction at low levels") {
    const LadderSystem sys = make_system("1 + x^2", -4, 4, 4001, 0.2L);
    const StateSet exact = build_states(sys, 3);
    const StateSet fd = build_states(sys, 3, StateConstruction::grid);
    for (std::size_t n = 0; n <= 3; ++n) {
        real worst = 0;
        for (std::size_t i = 0; i < sys.grid().size(); ++i) {
            worst = std::max(worst, std::abs(exact.psi(n)[i] - fd.psi(n)[i]));
        }
        CHECK(worst < 1e-5L);
        CHECK(near(exact.norm_constants()[n].real(), fd.norm_constants()[n].real(),
                   1e-5L * exact.norm_constants()[n].real()));
    }
}

TEST_CASE("excited states decay requirement") {
    // ψ₀ decays on [-3.6, 3.6] for the quadratic profile but high levels widen.
    const LadderSystem sys = make_system("1 + x^2", -3.6L, 3.6L, 2001, 0.2L);
    CHECK_NOTHROW(ground_state(sys));
    CHECK_THROWS_AS(build_states(sys, 12), DecayError);
}

TEST_CASE("first excited state of the quadratic profile has one sign change") {
    const StateSet s = build_states(make_system("1 + x^2", -4, 4, 4001, 0.2L), 1);
    CHECK(node_count(s.psi(1), Component::real).count == 1);
    CHECK(node_count(s.psi(0), Component::real).count == 0);
}

}  // TEST_SUITE
