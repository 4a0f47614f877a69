#include "mtl/mainterm.hpp"

#include <algorithm>
#include <cmath>

#include "mtl/errors.hpp"
#include "mtl/laurent.hpp"

namespace mtl {

namespace {

// x^{1-iy} = x (cos(y log x) - i sin(y log x))
complex x_power(double x, double y) {
    const double phase = y * std::log(x);
    return complex(x * std::cos(phase), -x * std::sin(phase));
}

complex cpow_int(complex base, int e) {
    complex v = 1.0;
    const complex b = e < 0 ? 1.0 / base : base;
    for (int i = 0, n = std::abs(e); i < n; ++i) v *= b;
    return v;
}

// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by
// Newton iteration on the Legendre recurrence.
struct GaussLegendre {
    static constexpr int n = 16;
    double node[n];
    double weight[n];

    GaussLegendre() {
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 64; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre& gauss16() {
    static const GaussLegendre g;
    return g;
}

template <typename F>
complex integrate_panels(F&& f, double a, double b, int panels) {
    const auto& g = gauss16();
    const double h = (b - a) / panels;
    complex total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        complex acc = 0.0;
        for (int i = 0; i < GaussLegendre::n; ++i)
            acc += g.weight[i] * f(mid + 0.5 * h * g.node[i]);
        total += acc * (0.5 * h);
    }
    return total;
}

// Adaptive composite rule: double the panel count until two refinements agree.
template <typename F>
complex integrate_adaptive(F&& f, double a, double b, double target) {
    complex prev = integrate_panels(f, a, b, 4);
    for (int panels = 8; panels <= 4096; panels *= 2) {
        const complex cur = integrate_panels(f, a, b, panels);
        const double change = std::abs(cur - prev);
        if (change <= std::max(target, target * std::abs(cur))) return cur;
        prev = cur;
    }
    throw NumericalError("quadrature did not reach the target tolerance " +
                         std::to_string(target));
}

// int_X^inf x^{1-sigma} (log x)^r dx = e^{-aL} sum_i r!/(r-i)! L^{r-i} / a^{i+1},
// a = sigma - 2, L = log X (valid for sigma > 2)
double log_moment_tail(int r, double sigma, double X) {
    const double a = sigma - 2.0;
    const double L = std::log(X);
    double sum = 0.0;
    double fall = 1.0;
    for (int i = 0; i <= r; ++i) {
        sum += fall * std::pow(L, r - i) / std::pow(a, i + 1);
        fall *= static_cast<double>(r - i);
    }
    return std::exp(-a * L) * sum;
}

}  // namespace

MainTermSpec MainTermSpec::make(int k, Family family) {
    const LaurentSeries alpha = alpha_laurent(k, family);
    MainTermSpec spec;
    spec.k = k;
    spec.family = family;
    spec.principal.resize(static_cast<std::size_t>(k));
    for (int m = 1; m <= k; ++m) spec.principal[static_cast<std::size_t>(m - 1)] = alpha.a(m);
    return spec;
}

complex residue_basis(int m, double x, double y) {
    if (m < 1) throw ArgumentError("residue_basis: m >= 1 required");
    if (x < 1.0) throw ArgumentError("residue_basis: x >= 1 required");
    const double lx = std::log(x);
    const complex xp = x_power(x, y);
    const complex iy_minus_1(-1.0, y);

    complex sum = 0.0;
    complex denom = iy_minus_1;  // (iy-1)^{j+1}
    for (int j = 0; j < m; ++j) {
        const int r = m - 1 - j;
        sum += xp * std::pow(lx, r) / (factorial(r) * denom);
        denom *= iy_minus_1;
    }
    return -sum;
}

complex main_term(const MainTermSpec& spec, double x, double y) {
    complex total = 0.0;
    for (int m = 1; m <= spec.k; ++m) {
        const double am = spec.a(m);
        if (am != 0.0) total += am * residue_basis(m, x, y);
    }
    return total;
}

complex main_term_closed_k2(Family family, double x, double y) {
    static const double c0 = stieltjes_constants(0)[0];
    const complex one_minus_iy(1.0, -y);
    const complex xp = x_power(x, y);
    const double lx = std::log(x);
    if (family == Family::Conv)
        return xp * (lx - 2.0 * c0) / one_minus_iy - xp / (one_minus_iy * one_minus_iy);
    return 2.0 * xp * (lx - c0) / one_minus_iy - 2.0 * xp / (one_minus_iy * one_minus_iy);
}

SaloniResult saloni_check(int m, double y, complex s, double X) {
    if (m < 1) throw ArgumentError("saloni_check: m >= 1 required");
    if (s.real() < 2.5)
        throw ArgumentError("saloni_check: Re(s) >= 2.5 required for a controlled tail");
    if (X < 1e3) throw ArgumentError("saloni_check: X >= 1e3 required");

    // substitute u = log x: integrand becomes residue_basis(m, e^u, y) e^{(1-s)u}
    const auto integrand = [&](double u) {
        return residue_basis(m, std::exp(u), y) * std::exp((1.0 - s) * u);
    };
    complex lhs;
    try {
        lhs = integrate_adaptive(integrand, 0.0, std::log(X), 1e-9);
    } catch (const NumericalError& e) {
        throw NumericalError(std::string("saloni_check: ") + e.what());
    }

    const complex iy_minus_1(-1.0, y);
    const complex shift = s - 2.0 + complex(0.0, y);
    const complex rhs =
        (1.0 / (s - 1.0)) * (cpow_int(shift, -m) - cpow_int(iy_minus_1, -m));

    // tail bound: |residue_basis| <= sum_j (log x)^{m-1-j} x / ((m-1-j)! |iy-1|^{j+1})
    double tail = 0.0;
    const double ay = std::abs(iy_minus_1);
    double aypow = ay;
    for (int j = 0; j < m; ++j) {
        const int r = m - 1 - j;
        tail += log_moment_tail(r, s.real(), X) / (factorial(r) * aypow);
        aypow *= ay;
    }

    return {lhs, rhs, std::abs(lhs - rhs) + tail};
}

ResidualProbe residual_bound_probe(const MainTermSpec& spec, std::span<const double> xs,
                                   std::span<const double> ys) {
    if (xs.empty() || ys.empty())
        throw ArgumentError("residual_bound_probe: grids must be nonempty");

    const auto q_value = [&](double x, double y) {
        const double denom = x * std::pow(std::log(x), spec.k - 1);
        return std::abs(main_term(spec, x, y)) * (std::abs(y) + 1.0) / denom;
    };

    double fitted = 0.0;
    bool calibrated = false;
    for (double x : xs)
        for (double y : ys)
            if (x <= 1e4 && std::abs(y) <= 1e2) {
                fitted = std::max(fitted, q_value(x, y));
                calibrated = true;
            }
    if (!calibrated) {
        // no calibration points: fall back to the full grid, making the
        // hold phase vacuous rather than spuriously violated
        for (double x : xs)
            for (double y : ys) fitted = std::max(fitted, q_value(x, y));
    }

    ResidualProbe probe;
    probe.fitted_constant = fitted;
    for (double x : xs)
        for (double y : ys) {
            const double q = q_value(x, y);
            if (q > 2.0 * fitted) probe.violations.push_back({x, y, q});
        }
    return probe;
}

}  // namespace mtl
