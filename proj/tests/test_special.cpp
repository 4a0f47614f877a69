#include <doctest.h>

#include <cmath>
#include <random>

#include "mtl/kahan.hpp"
#include "mtl/laurent.hpp"
#include "mtl/special.hpp"

using namespace mtl;

namespace {

// Basel-value oracle: partial sum plus integral tail with midpoint correction,
//   sum_{n>N} n^{-2} = 1/N - 1/(2N^2) + 1/(6N^3) + O(N^-5)
double zeta2_oracle() {
    const long N = 200000;
    CompensatedSum s;
    for (long n = N; n >= 1; --n) s.add(1.0 / (static_cast<double>(n) * n));
    const double Nd = static_cast<double>(N);
    return s.value() + 1.0 / Nd - 1.0 / (2.0 * Nd * Nd) + 1.0 / (6.0 * Nd * Nd * Nd);
}

// zeta'(2) = -sum (log n) n^{-2}; tail from the closed-form integral
//   int_N^inf (log u) u^{-2} du = (log N + 1)/N  minus half the boundary term
double zeta_prime2_oracle() {
    const long N = 200000;
    CompensatedSum s;
    for (long n = N; n >= 2; --n)
        s.add(std::log(static_cast<double>(n)) / (static_cast<double>(n) * n));
    const double Nd = static_cast<double>(N);
    const double L = std::log(Nd);
    const double tail = (L + 1.0) / Nd - L / (2.0 * Nd * Nd);
    return -(s.value() + tail);
}

// zeta(3) partial sum with tail 1/(2N^2) - 1/(2N^3) + ...
double zeta3_oracle() {
    const long N = 100000;
    CompensatedSum s;
    for (long n = N; n >= 1; --n)
        s.add(1.0 / (static_cast<double>(n) * n * n));
    const double Nd = static_cast<double>(N);
    return s.value() + 1.0 / (2.0 * Nd * Nd) - 1.0 / (2.0 * Nd * Nd * Nd);
}

}  // namespace

TEST_CASE("zeta values against summation oracles") {
    const auto z2 = zeta_derivatives(complex(2.0, 0.0), 1);
    CHECK(std::abs(z2[0].real() - zeta2_oracle()) <= 1e-10);
    CHECK(std::abs(z2[0].imag()) <= 1e-12 * std::abs(z2[0].real()));
    CHECK(std::abs(z2[1].real() - zeta_prime2_oracle()) <= 1e-9);

    const auto z3 = zeta_derivatives(complex(3.0, 0.0), 0);
    CHECK(std::abs(z3[0].real() - zeta3_oracle()) <= 1e-10);

    // published decimals, cross-check only
    CHECK(z2[0].real() == doctest::Approx(1.6449340668482264).epsilon(1e-12));
    CHECK(z2[1].real() == doctest::Approx(-0.93754825431584376).epsilon(1e-11));
    CHECK(z3[0].real() == doctest::Approx(1.2020569031595943).epsilon(1e-12));
}

TEST_CASE("zeta second derivative against a summation oracle") {
    // zeta''(3) = sum (log n)^2 n^{-3}; tail via int (log u)^2 u^{-3} du
    const long N = 100000;
    CompensatedSum s;
    for (long n = N; n >= 2; --n) {
        const double L = std::log(static_cast<double>(n));
        s.add(L * L / (static_cast<double>(n) * n * n));
    }
    const double Nd = static_cast<double>(N), L = std::log(Nd);
    const double tail =
        (L * L / 2.0 + L / 2.0 + 0.25) / (Nd * Nd) - L * L / (2.0 * Nd * Nd * Nd);
    const double want = s.value() + tail;
    const auto z = zeta_derivatives(complex(3.0, 0.0), 2);
    CHECK(std::abs(z[2].real() - want) <= 1e-9);
    CHECK(z[2].real() == doctest::Approx(0.23974691730538718).epsilon(1e-10));
}

TEST_CASE("zeta domain guards") {
    CHECK_THROWS_AS(zeta_derivatives(complex(1.0005, 0.0), 0), DomainError);
    CHECK_THROWS_AS(zeta_derivatives(complex(-0.5, 3.0), 0), DomainError);
    CHECK_THROWS_AS(zeta_derivatives(complex(2.0, 2000.0), 0), RangeError);
    CHECK_THROWS_AS(zeta_derivatives(complex(2.0, 0.0), 7), ArgumentError);
    CHECK_NOTHROW(zeta_derivatives(complex(2.0, 999.0), 3));
}

TEST_CASE("zeta conjugate symmetry") {
    for (complex s : {complex(0.6, 14.1), complex(2.0, 300.0), complex(1.5, 77.7)}) {
        const auto up = zeta_derivatives(s, 3);
        const auto dn = zeta_derivatives(std::conj(s), 3);
        for (std::size_t j = 0; j < up.size(); ++j)
            CHECK(std::abs(up[j] - std::conj(dn[j])) <= 1e-12 * std::abs(up[j]));
    }
}

TEST_CASE("Dirichlet series identities") {
    SUBCASE("k = 1, s = 3: partial sum within the explicit tail bound") {
        const auto r = dirichlet_identity_check(1, Family::Conv, 3.0, 100000);
        CHECK(std::abs(r.partial - r.closed) <= r.tail_bound);
        CHECK(r.tail_bound < 1e-6);
    }
    SUBCASE("k = 2 closed forms are positive") {
        const auto conv = dirichlet_identity_check(2, Family::Conv, 3.0, 10000);
        CHECK(conv.closed > 0.0);  // (zeta'/zeta(3))^2
        const auto gen = dirichlet_identity_check(2, Family::Gen, 3.0, 10000);
        CHECK(gen.closed > 0.0);  // zeta''(3)/zeta(3)
        CHECK(std::abs(conv.partial - conv.closed) <= conv.tail_bound);
        CHECK(std::abs(gen.partial - gen.closed) <= gen.tail_bound);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(dirichlet_identity_check(1, Family::Conv, 2.0, 100000),
                        ArgumentError);
        CHECK_THROWS_AS(dirichlet_identity_check(1, Family::Conv, 3.0, 100), ArgumentError);
    }
}

TEST_CASE("digamma") {
    const double g0 = stieltjes_constants(0)[0];
    SUBCASE("forced values") {
        CHECK(digamma(complex(1.0, 0.0)).real() == doctest::Approx(-g0).epsilon(1e-13));
        CHECK(std::abs(digamma(complex(1.0, 0.0)).imag()) < 1e-14);
        CHECK(digamma(complex(2.0, 0.0)).real() ==
              doctest::Approx(1.0 - g0).epsilon(1e-13));
    }
    SUBCASE("recurrence digamma(s+1) = digamma(s) + 1/s") {
        std::mt19937 rng(1234);
        std::uniform_real_distribution<double> re(0.5, 10.0), im(-100.0, 100.0);
        for (int i = 0; i < 100; ++i) {
            const complex s(re(rng), im(rng));
            const complex diff = digamma(s + 1.0) - digamma(s);
            CHECK(std::abs(diff - 1.0 / s) <= 1e-9 * std::abs(1.0 / s));
        }
    }
    SUBCASE("log-shape estimate at height 100") {
        const complex s(1.0, 100.0);
        CHECK(std::abs(digamma(s) - std::log(s)) <= 0.02);
    }
    SUBCASE("domain guards") {
        CHECK_THROWS_AS(digamma(complex(0.01, 0.0)), DomainError);
        CHECK_THROWS_AS(digamma(complex(-3.0, 0.0)), DomainError);
    }
    SUBCASE("conjugate symmetry") {
        const complex s(1.7, 23.0);
        CHECK(std::abs(digamma(s) - std::conj(digamma(std::conj(s)))) <=
              1e-12 * std::abs(digamma(s)));
    }
}

TEST_CASE("polygamma") {
    SUBCASE("ell = 1 at s = 1 is zeta(2)") {
        CHECK(polygamma(1, complex(1.0, 0.0)).real() ==
              doctest::Approx(zeta2_oracle()).epsilon(1e-12));
    }
    SUBCASE("ell = 2 at s = 1 is -2 zeta(3)") {
        CHECK(polygamma(2, complex(1.0, 0.0)).real() ==
              doctest::Approx(-2.0 * zeta3_oracle()).epsilon(1e-12));
    }
    SUBCASE("matches finite differences of digamma on the real axis") {
        const double h = 1e-3;
        for (double x : {1.5, 2.5, 5.0}) {
            const double d1 =
                (digamma(complex(x + h, 0)).real() - digamma(complex(x - h, 0)).real()) /
                (2.0 * h);
            CHECK(std::abs(d1 - polygamma(1, complex(x, 0.0)).real()) <= 1e-4);
            const double d2 = (digamma(complex(x + h, 0)).real() -
                               2.0 * digamma(complex(x, 0)).real() +
                               digamma(complex(x - h, 0)).real()) /
                              (h * h);
            CHECK(std::abs(d2 - polygamma(2, complex(x, 0.0)).real()) <= 1e-4);
        }
    }
    SUBCASE("asymptotic shape at moderate height") {
        // polygamma(l, s) ~ (-1)^(l-1) (l-1)! s^{-l} with O(tau^{-l-1}) residue
        for (int ell : {1, 2, 3}) {
            const complex s(1.0, 50.0);
            complex lead = factorial(ell - 1);
            for (int i = 0; i < ell; ++i) lead /= s;
            if (ell % 2 == 0) lead = -lead;
            const double tau = std::abs(s.imag()) + 2.0;
            CHECK(std::abs(polygamma(ell, s) - lead) <= 5.0 * std::pow(tau, -ell - 1));
        }
    }
    SUBCASE("argument guards") {
        CHECK_THROWS_AS(polygamma(0, complex(2.0, 0.0)), ArgumentError);
        CHECK_THROWS_AS(polygamma(7, complex(2.0, 0.0)), ArgumentError);
        CHECK_THROWS_AS(polygamma(1, complex(0.01, 0.0)), DomainError);
    }
}
