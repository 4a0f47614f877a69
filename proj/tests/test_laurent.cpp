#include <doctest.h>

#include <cmath>
#include <random>

#include "mtl/laurent.hpp"
#include "mtl/special.hpp"

using namespace mtl;

namespace {

// independent oracle for gamma_0: Richardson extrapolation of
// S(N) = sum_{m<=N} 1/m - log N  (= gamma + c1/N + c2/N^2 + ...)
double gamma0_oracle() {
    auto S = [](long N) {
        double s = 0.0;
        for (long m = N; m >= 1; --m) s += 1.0 / m;
        return s - std::log(static_cast<double>(N));
    };
    const double s1 = S(40000), s2 = S(80000), s3 = S(160000);
    const double r1 = 2.0 * s2 - s1;  // kills 1/N
    const double r2 = 2.0 * s3 - s2;
    return (4.0 * r2 - r1) / 3.0;  // kills 1/N^2
}

// independent oracle for gamma_1 with weights log(m)/m: eliminate the
// a log(N)/N + b/N tail by solving a 3x3 system over N, 2N, 4N
double gamma1_oracle() {
    auto S = [](long N) {
        double s = 0.0;
        for (long m = N; m >= 2; --m) s += std::log(static_cast<double>(m)) / m;
        const double L = std::log(static_cast<double>(N));
        return s - 0.5 * L * L;
    };
    const long N = 100000;
    const double y0 = S(N), y1 = S(2 * N), y2 = S(4 * N);
    const double l0 = std::log(static_cast<double>(N)), l1 = std::log(2.0 * N),
                 l2 = std::log(4.0 * N);
    // y_i = g + a l_i/N_i + b/N_i
    const double n0 = static_cast<double>(N), n1 = 2.0 * n0, n2 = 4.0 * n0;
    // eliminate b, then a
    const double u01 = (y0 - y1), u12 = (y1 - y2);
    const double p01 = (l0 / n0 - l1 / n1), p12 = (l1 / n1 - l2 / n2);
    const double q01 = (1.0 / n0 - 1.0 / n1), q12 = (1.0 / n1 - 1.0 / n2);
    const double a = (u01 * q12 - u12 * q01) / (p01 * q12 - p12 * q01);
    const double b = (u01 - a * p01) / q01;
    return y0 - a * l0 / n0 - b / n0;
}

}  // namespace

TEST_CASE("stieltjes constants match independent oracles and cross-checks") {
    const auto g = stieltjes_constants(8);
    REQUIRE(g.size() == 9);

    CHECK(std::abs(g[0] - gamma0_oracle()) <= 1e-10);
    CHECK(std::abs(g[1] - gamma1_oracle()) <= 1e-8);

    // published decimals, cross-check only
    CHECK(g[0] == doctest::Approx(0.57721566490153286).epsilon(1e-12));
    CHECK(g[1] == doctest::Approx(-0.072815845483676725).epsilon(1e-10));
    CHECK(g[2] == doctest::Approx(-0.0096903631928723185).epsilon(1e-8));

    for (double v : g) {
        CHECK(std::isfinite(v));
        CHECK(std::abs(v) < 1.0);
    }
    CHECK_THROWS_AS(stieltjes_constants(9), ArgumentError);
}

TEST_CASE("zeta Laurent expansion") {
    const LaurentSeries z = zeta_laurent(8);
    const auto g = stieltjes_constants(2);
    CHECK(z.pole_order() == 1);
    CHECK(z.a(1) == 1.0);
    CHECK(z.b(0) == doctest::Approx(g[0]).epsilon(1e-14));
    CHECK(z.b(1) == doctest::Approx(-g[1]).epsilon(1e-14));

    // cross-check b_1 by numerically differencing zeta near s = 1
    const double h = 1e-3;
    const double zh = zeta_derivatives(complex(1.0 + h, 0.0), 0)[0].real();
    const double b1_approx = (zh - 1.0 / h - g[0]) / h;
    CHECK(z.b(1) == doctest::Approx(b1_approx).epsilon(1e-2));

    CHECK_THROWS_AS(zeta_laurent(100), ArgumentError);
}

TEST_CASE("series arithmetic basics") {
    const LaurentSeries z = zeta_laurent(8);

    SUBCASE("derivative of zeta leads with -1/(s-1)^2") {
        const LaurentSeries dz = series_derivative(z);
        CHECK(dz.pole_order() == 2);
        CHECK(dz.a(2) == -1.0);
        CHECK(dz.a(1) == 0.0);
    }

    SUBCASE("(zeta'/zeta) * zeta returns zeta' coefficientwise") {
        const LaurentSeries dz = series_derivative(z);
        const LaurentSeries ratio = series_div(dz, z);
        const LaurentSeries back = series_mul(ratio, z);
        for (int i = 0; i < std::min(back.terms(), dz.terms()); ++i) {
            const int e = back.lead() + i;
            CHECK(back.coeff_at(e) == doctest::Approx(dz.coeff_at(e)).epsilon(1e-10));
        }
    }

    SUBCASE("square of zeta'/zeta has pole order 2 with a_2 = 1") {
        const LaurentSeries ratio = series_div(series_derivative(z), z);
        const LaurentSeries sq = series_pow(ratio, 2);
        CHECK(sq.pole_order() == 2);
        CHECK(sq.a(2) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("division by a numerically zero series fails") {
        const LaurentSeries tiny(0, {1e-15, 1.0});
        CHECK_THROWS_AS(series_div(z, tiny), SingularSeriesError);
    }

    SUBCASE("division/multiplication round trip on random unit series") {
        std::mt19937 rng(90210);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        std::uniform_real_distribution<double> lead(0.5, 2.0);
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<double> ac{lead(rng)}, bc{lead(rng)};
            for (int i = 0; i < 9; ++i) {
                ac.push_back(coeff(rng));
                bc.push_back(coeff(rng));
            }
            const LaurentSeries a(-2, ac), b(rep % 2 ? -1 : 0, bc);
            const LaurentSeries q = series_div(a, b);
            const LaurentSeries back = series_mul(q, b);
            for (int i = 0; i < std::min(back.terms(), a.terms()); ++i) {
                const int e = back.lead() + i;
                CHECK(back.coeff_at(e) == doctest::Approx(a.coeff_at(e)).epsilon(1e-10));
            }
        }
    }

    SUBCASE("addition aligns exponents") {
        const LaurentSeries a(-1, {1.0, 2.0, 3.0});
        const LaurentSeries b(0, {5.0, 5.0});
        const LaurentSeries s = series_add(a, b);
        CHECK(s.pole_order() == 1);
        CHECK(s.a(1) == 1.0);
        CHECK(s.b(0) == 7.0);
        CHECK(s.b(1) == 8.0);
    }
}

TEST_CASE("alpha expansions") {
    const auto g = stieltjes_constants(0);

    SUBCASE("k = 1: both variants give 1/(s-1) - gamma_0 + ...") {
        const LaurentSeries c = alpha_laurent(1, Family::Conv);
        const LaurentSeries ge = alpha_laurent(1, Family::Gen);
        CHECK(c.pole_order() == 1);
        CHECK(c.a(1) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(c.b(0) == doctest::Approx(-g[0]).epsilon(1e-12));
        for (int e = -1; e <= 4; ++e)
            CHECK(c.coeff_at(e) == doctest::Approx(ge.coeff_at(e)).epsilon(1e-10));
    }

    SUBCASE("k = 2 principal coefficients") {
        const LaurentSeries c = alpha_laurent(2, Family::Conv);
        CHECK(c.pole_order() == 2);
        CHECK(c.a(2) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.a(1) == doctest::Approx(-2.0 * g[0]).epsilon(1e-12));

        const LaurentSeries ge = alpha_laurent(2, Family::Gen);
        CHECK(ge.pole_order() == 2);
        CHECK(ge.a(2) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(ge.a(1) == doctest::Approx(-2.0 * g[0]).epsilon(1e-12));
    }

    SUBCASE("pole order equals k; a_k matches 1 or k!") {
        for (int k = 1; k <= 6; ++k) {
            const LaurentSeries c = alpha_laurent(k, Family::Conv);
            const LaurentSeries ge = alpha_laurent(k, Family::Gen);
            CHECK(c.pole_order() == k);
            CHECK(ge.pole_order() == k);
            CHECK(c.a(k) == doctest::Approx(1.0).epsilon(1e-11));
            CHECK(ge.a(k) == doctest::Approx(factorial(k)).epsilon(1e-11));
        }
        CHECK_THROWS_AS(alpha_laurent(7, Family::Conv), ArgumentError);
        CHECK_THROWS_AS(alpha_laurent(0, Family::Gen), ArgumentError);
    }

    SUBCASE("truncated series tracks direct evaluation near s = 1") {
        // evaluate at the guaranteed regular order (4 coefficients survive
        // every k <= 6 derivation), with the matching h^4 allowance
        constexpr int m_reg = 4;
        for (int k = 1; k <= 4; ++k)
            for (Family f : {Family::Conv, Family::Gen})
                for (double h : {1e-2, 1e-3}) {
                    const LaurentSeries alpha = alpha_laurent(k, f);
                    REQUIRE(alpha.max_regular_order() >= m_reg);
                    double approx = 0.0;
                    for (int m = 1; m <= k; ++m) approx += alpha.a(m) / std::pow(h, m);
                    for (int n = 0; n <= m_reg; ++n) approx += alpha.b(n) * std::pow(h, n);
                    const auto zd = zeta_derivatives(complex(1.0 + h, 0.0), k);
                    double direct;
                    if (f == Family::Conv)
                        direct = std::pow(-(zd[1] / zd[0]).real(), k);
                    else
                        direct = ((k % 2 == 0) ? 1.0 : -1.0) *
                                 (zd[static_cast<std::size_t>(k)] / zd[0]).real();
                    const double allowed = 10.0 * std::pow(h, m_reg);
                    CHECK(std::abs(approx - direct) / std::abs(direct) <= allowed);
                }
    }
}
