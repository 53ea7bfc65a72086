#include <doctest.h>

#include <cmath>

#include "pdm/finite_difference.hpp"
#include "pdm/quadrature.hpp"
#include "pdm/validation.hpp"
#include "support.hpp"

using namespace pdm;
using pdm::test::near;

TEST_SUITE("numerics") {

TEST_CASE("grid geometry") {
    const Grid g(0, 1, 5);
    CHECK(g.h() == 0.25L);
    CHECK(g.x(4) == 1);
    CHECK(g.nearest(0.74L) == 3);
    CHECK(g.nearest(7) == 4);
    CHECK_THROWS_AS(Grid(0, 1, 3), GridError);
    CHECK_THROWS_AS(Grid(0, 1, 4), GridError);
    CHECK_THROWS_AS(Grid(1, 0, 10), GridError);
}

TEST_CASE("sample") {
    const GridFunction f = sample([](real x) { return complex(x); }, Grid(0, 1, 5));
    CHECK(f[2] == complex(0.5L));
    const GridFunction e = sample([](real x) { return std::exp(complex(0, x)); }, Grid(0, 1, 5));
    CHECK(e[0] == complex(1, 0));
    try {
        sample([](real x) { return complex(1 / x); }, Grid(-1, 1, 5));
        FAIL("expected NonFiniteError");
    } catch (const NonFiniteError& err) {
        CHECK(err.node() == 2);
    }
}

TEST_CASE("finite differences are exact on low-degree polynomials") {
    const Grid g(-1, 2, 31);
    const RealGridFunction sq = sample_real([](real x) { return x * x; }, g);
    const RealGridFunction quartic = sample_real([](real x) { return x * x * x * x - x; }, g);
    for (Stencil st : {Stencil::second, Stencil::fourth}) {
        const RealGridFunction d1 = derivative(sq, 1, st);
        const RealGridFunction d2 = derivative(sq, 2, st);
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(near(d1[i], 2 * g.x(i), 1e-14L));
            CHECK(near(d2[i], 2, 1e-11L));
        }
    }
    const RealGridFunction q1 = derivative(quartic, 1, Stencil::fourth);
    const RealGridFunction q2 = derivative(quartic, 2, Stencil::fourth);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const real x = g.x(i);
        CHECK(near(q1[i], 4 * x * x * x - 1, 1e-12L));
        CHECK(near(q2[i], 12 * x * x, 1e-10L));
    }
    const RealGridFunction c = derivative(sample_real([](real) { return 3.0L; }, g), 1, Stencil::fourth);
    for (real v : c) CHECK(std::abs(v) < 1e-15L);
}

TEST_CASE("fourth-order second derivative of sin at h = 1e-2") {
    const Grid g(0, 2, 201);
    const RealGridFunction d2 = derivative(sample_real([](real x) { return std::sin(x); }, g), 2, Stencil::fourth);
    real worst = 0;
    for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(d2[i] + std::sin(g.x(i))));
    CHECK(worst < 1e-7L);
}

TEST_CASE("derivative errors converge at the nominal order") {
    for (Stencil st : {Stencil::second, Stencil::fourth}) {
        for (int order : {1, 2}) {
            const auto err = [&](std::size_t n) {
                const Grid g(0, 3, n);
                const RealGridFunction d =
                    derivative(sample_real([](real x) { return std::sin(x); }, g), order, st);
                real worst = 0;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    const real exact = order == 1 ? std::cos(g.x(i)) : -std::sin(g.x(i));
                    worst = std::max(worst, std::abs(d[i] - exact));
                }
                return worst;
            };
            const ConvergenceStudy s = convergence_order(err, {41, 81, 161, 321}, 3);
            REQUIRE(s.slope);
            CHECK(std::abs(*s.slope - accuracy_order(st)) < 0.3L);
        }
    }
}

TEST_CASE("derivative needs enough points") {
    const Grid g(0, 1, 5);
    const RealGridFunction f(g);
    CHECK_NOTHROW(derivative(f, 1, Stencil::fourth));
    CHECK_THROWS_AS(derivative(f, 2, Stencil::fourth), GridError);
    CHECK_NOTHROW(derivative(f, 2, Stencil::second));
    CHECK_THROWS_AS(derivative(f, 3, Stencil::second), std::invalid_argument);
}

TEST_CASE("Simpson integration") {
    CHECK(near(integrate(sample_real([](real) { return 1.0L; }, Grid(0, 2, 11))), 2, 1e-17L));
    CHECK(near(integrate(sample_real([](real x) { return x * x; }, Grid(0, 1, 101))), 1.0L / 3, 1e-10L));
    CHECK(near(integrate(sample_real([](real x) { return x * x * x; }, Grid(0, 1, 100))), 0.25L, 1e-15L));
    CHECK(near(integrate(sample_real([](real x) { return std::exp(-x * x); }, Grid(-8, 8, 2001))),
               std::sqrt(pi), 1e-10L));
}

TEST_CASE("integrate is linear") {
    const Grid g(-2, 3, 77);
    const GridFunction f = sample([](real x) { return complex(std::sin(x), x); }, g);
    const GridFunction h = sample([](real x) { return complex(std::exp(-x), 1); }, g);
    const complex a(2, -1), b(0.5L, 3);
    CHECK(std::abs(integrate(a * f + b * h) - (a * integrate(f) + b * integrate(h))) < 1e-15L);
}

TEST_CASE("bilinear and sesquilinear pairings") {
    const Grid g(-8, 8, 2001);
    const GridFunction gauss = sample([](real x) { return complex(std::exp(-x * x / 2)); }, g);
    const GridFunction odd = sample([](real x) { return complex(x * std::exp(-x * x / 2)); }, g);
    CHECK(std::abs(bilinear_pair(gauss, gauss) - std::sqrt(pi)) < 1e-9L);
    CHECK(std::abs(bilinear_pair(gauss, odd)) < 1e-12L);

    const Grid period(-pi, pi, 1001);
    const GridFunction c = sample([](real x) { return complex(std::cos(x)); }, period);
    const GridFunction s = sample([](real x) { return complex(std::sin(x)); }, period);
    CHECK(std::abs(bilinear_pair(c, s)) < 1e-10L);
    CHECK(std::abs(sesquilinear_pair(c, s) - bilinear_pair(c, s)) == 0);

    const GridFunction chirp = sample([](real x) { return std::exp(complex(-x * x / 2, x)); }, g);
    CHECK(std::abs(sesquilinear_pair(chirp, chirp) - std::sqrt(pi)) < 1e-9L);
    const GridFunction wave = sample([](real x) { return std::exp(complex(0, x)); }, Grid(0, 2 * pi, 401));
    CHECK(std::abs(sesquilinear_pair(wave, wave) - 2 * pi) < 1e-15L);
    const complex self = sesquilinear_pair(odd + chirp, odd + chirp);
    CHECK(self.real() > 0);
    CHECK(std::abs(self.imag()) < 1e-17L);
    CHECK_THROWS_AS(bilinear_pair(gauss, c), GridError);
}

TEST_CASE("l2 norm is scaled by sqrt(h)") {
    const GridFunction one = sample([](real) { return complex(1); }, Grid(0, 1, 101));
    CHECK(near(l2_norm(one), std::sqrt(101 * 0.01L), 1e-17L));
}

TEST_CASE("antiderivative of sqrt(m)") {
    const Grid g(-4, 4, 401);
    const RealGridFunction unit = cumulative_antiderivative_sqrt_m(make_profile("1", {-4, 4}), g, 0);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(near(unit[i], g.x(i), 1e-16L));

    const MassProfile quad = make_profile("1 + x^2", {-4, 4});
    const RealGridFunction F = cumulative_antiderivative_sqrt_m(quad, g, 0);
    CHECK(F[g.nearest(0)] == 0);
    CHECK(near(F[g.nearest(2)], (2 * std::sqrt(5.0L) + std::asinh(2.0L)) / 2, 1e-15L));
    CHECK(near(F[g.nearest(2)], 2.957885715089194868L, 1e-15L));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(F[i] > F[i - 1]);
    CHECK(near(antiderivative_sqrt_m(quad, 0, 2), 2.957885715089194868L, 1e-15L));

    const MassProfile ex = make_profile("exp(-x)", {-1, 3});
    const Grid ge(-1, 3, 161);
    const RealGridFunction Fe = cumulative_antiderivative_sqrt_m(ex, ge, 0);
    for (std::size_t i = 0; i < ge.size(); ++i) CHECK(near(Fe[i], 2 * (1 - std::exp(-ge.x(i) / 2)), 1e-15L));
}

TEST_CASE("antiderivative with an anchor between nodes") {
    const Grid g(-1, 1, 11);
    const RealGridFunction F = cumulative_antiderivative_sqrt_m(make_profile("1 + x^2", {-1, 1}), g, 0.05L);
    const real F0 = antiderivative_sqrt_m(make_profile("1 + x^2", {-1, 1}), 0, 0.05L);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const real x = g.x(i);
        const real exact = (x * std::sqrt(1 + x * x) + std::asinh(x)) / 2 - F0;
        CHECK(near(F[i], exact, 1e-16L));
    }
    CHECK_THROWS_AS(cumulative_antiderivative_sqrt_m(make_profile("1", {-1, 1}), g, 2), std::invalid_argument);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials of degree 2n-1") {
    const GaussLegendre gl(8);
    real sum = 0, w = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        sum += gl.weights[i] * std::pow(gl.nodes[i], 14);
        w += gl.weights[i];
    }
    CHECK(near(w, 2, 1e-18L));
    CHECK(near(sum, 2.0L / 15, 1e-18L));
}

}  // TEST_SUITE
