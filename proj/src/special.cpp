#include "mtl/special.hpp"

#include <algorithm>
#include <cmath>

#include "mtl/kahan.hpp"
#include "mtl/laurent.hpp"

namespace mtl {

namespace {

constexpr int kEulerMaclaurinDepth = 8;
constexpr double kMaxHeight = 1e3;

constexpr double kBernoulli[] = {
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510,
};  // B_2 .. B_16

// Coefficients of s(s+1)...(s+2r-2) and the s-derivatives thereof, for
// r = 1..depth. All integer-valued and exactly representable.
struct PochhammerPolys {
    // poly[r-1][i] = coefficient array of the i-th derivative
    std::vector<std::vector<std::vector<double>>> poly;

    PochhammerPolys() {
        std::vector<double> p{0.0, 1.0};  // s
        for (int r = 1; r <= kEulerMaclaurinDepth; ++r) {
            std::vector<std::vector<double>> derivs;
            std::vector<double> d = p;
            while (true) {
                derivs.push_back(d);
                if (d.size() <= 1) break;
                std::vector<double> next(d.size() - 1, 0.0);
                for (std::size_t i = 1; i < d.size(); ++i)
                    next[i - 1] = static_cast<double>(i) * d[i];
                d = std::move(next);
            }
            poly.push_back(std::move(derivs));
            // multiply by (s + 2r-1)(s + 2r) for the next r
            for (int step = 0; step < 2; ++step) {
                const double c = static_cast<double>(2 * r - 1 + step);
                std::vector<double> q(p.size() + 1, 0.0);
                for (std::size_t i = 0; i < p.size(); ++i) {
                    q[i + 1] += p[i];
                    q[i] += c * p[i];
                }
                p = std::move(q);
            }
        }
    }

    complex eval(int r, int deriv, complex s) const {
        const auto& all = poly[static_cast<std::size_t>(r - 1)];
        if (deriv >= static_cast<int>(all.size())) return 0.0;
        const auto& c = all[static_cast<std::size_t>(deriv)];
        complex v = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * s + c[i];
        return v;
    }
};

const PochhammerPolys& pochhammer() {
    static const PochhammerPolys p;
    return p;
}

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

complex cpow_int(complex base, int e) {
    complex v = 1.0;
    for (int i = 0; i < e; ++i) v *= base;
    return v;
}

// Euler-Mascheroni constant from the Laurent module (computed, not transcribed).
double euler_gamma() {
    static const double g = stieltjes_constants(0)[0];
    return g;
}

void check_gamma_domain(complex s) {
    if (s.real() < 0.05)
        throw DomainError("digamma/polygamma: Re(s) >= 0.05 required");
    const double nearest = std::round(s.real());
    if (nearest <= 0.0 &&
        std::hypot(s.real() - nearest, s.imag()) < 1e-6)
        throw DomainError("digamma/polygamma: evaluation within 1e-6 of a pole");
}

}  // namespace

std::vector<complex> zeta_derivatives(complex s, int j_max) {
    if (j_max < 0 || j_max > 6)
        throw ArgumentError("zeta_derivatives: j_max must be in [0, 6]");
    if (s.real() <= 0.0)
        throw DomainError("zeta_derivatives: Re(s) > 0 required");
    // threshold sits a hair under 1e-3 so that s = 1 + 1e-3, whose stored
    // difference rounds just below 1e-3, stays evaluable
    if (std::abs(s - complex(1.0, 0.0)) < 0.9995e-3)
        throw DomainError("zeta_derivatives: s within 1e-3 of the pole at 1; "
                          "use the Laurent expansion instead");
    if (std::abs(s.imag()) > kMaxHeight)
        throw RangeError("zeta_derivatives: |Im(s)| <= 1e3 supported");

    const int N = std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
    const double logN = std::log(static_cast<double>(N));

    std::vector<complex> out(static_cast<std::size_t>(j_max) + 1, complex(0.0));

    // sum_{n<N} (-log n)^j n^{-s}
    for (int n = 1; n < N; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const complex npow = std::exp(-s * ln);
        double lp = 1.0;
        for (int j = 0; j <= j_max; ++j) {
            out[static_cast<std::size_t>(j)] += lp * npow;
            lp *= -ln;
        }
    }

    const complex Npow = std::exp(-s * logN);   // N^{-s}
    const complex Npow1 = Npow * static_cast<double>(N);  // N^{1-s}

    for (int j = 0; j <= j_max; ++j) {
        complex& acc = out[static_cast<std::size_t>(j)];

        // d^j/ds^j [ N^{1-s} / (s-1) ]
        for (int i = 0; i <= j; ++i) {
            const double sign = ((j - i) % 2 == 0) ? 1.0 : -1.0;
            acc += binomial(j, i) * std::pow(-logN, i) * Npow1 * sign *
                   factorial(j - i) / cpow_int(s - 1.0, j - i + 1);
        }

        // d^j/ds^j [ N^{-s} / 2 ]
        acc += 0.5 * std::pow(-logN, j) * Npow;

        // d^j/ds^j [ B_2r/(2r)! s(s+1)...(s+2r-2) N^{-s-2r+1} ]
        for (int r = 1; r <= kEulerMaclaurinDepth; ++r) {
            const complex Nfac = Npow1 / std::pow(static_cast<double>(N), 2 * r);
            complex sum = 0.0;
            for (int i = 0; i <= j; ++i)
                sum += binomial(j, i) * pochhammer().eval(r, i, s) * std::pow(-logN, j - i);
            acc += kBernoulli[r - 1] / factorial(2 * r) * sum * Nfac;
        }
    }
    return out;
}

IdentityCheck dirichlet_identity_check(const ArithTable& table, double s) {
    if (s < 2.5)
        throw ArgumentError("dirichlet_identity_check: s >= 2.5 required");
    int k = 0;
    Family family;
    if (table.variant.tag == VariantTag::ConvPower) {
        k = table.variant.k;
        family = Family::Conv;
    } else if (table.variant.tag == VariantTag::Generalized) {
        k = table.variant.k;
        family = Family::Gen;
    } else if (table.variant.tag == VariantTag::VonMangoldt) {
        k = 1;
        family = Family::Conv;
    } else {
        throw ArgumentError("dirichlet_identity_check: table must hold a Lambda-family function");
    }

    CompensatedSum partial;
    for (std::uint64_t n = 2; n <= table.n_max; ++n) {
        const double v = table.values[n];
        if (v != 0.0) partial.add(v * std::pow(static_cast<double>(n), -s));
    }

    const auto zd = zeta_derivatives(complex(s, 0.0), k);
    double closed;
    if (family == Family::Conv) {
        const double logderiv = (zd[1] / zd[0]).real();
        closed = std::pow(-logderiv, k);
    } else {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        closed = sign * (zd[static_cast<std::size_t>(k)] / zd[0]).real();
    }

    // sum_{n>N} (log n)^k n^{-s} <= int_N^inf (log u)^k u^{-s} du, in closed form
    const double a = s - 1.0;
    const double L = std::log(static_cast<double>(table.n_max));
    double tail = 0.0;
    double lpow = std::pow(L, k);
    double fall = 1.0;  // k!/(k-i)!
    for (int i = 0; i <= k; ++i) {
        tail += fall * lpow / std::pow(a, i + 1);
        fall *= static_cast<double>(k - i);
        lpow = (k - i - 1 >= 0) ? std::pow(L, k - i - 1) : 0.0;
    }
    tail *= std::exp(-a * L);

    return {partial.value(), closed, tail};
}

IdentityCheck dirichlet_identity_check(int k, Family family, double s, std::uint64_t N) {
    if (k < 1) throw ArgumentError("dirichlet_identity_check: k >= 1 required");
    if (N < 10000) throw ArgumentError("dirichlet_identity_check: N >= 1e4 required");
    const ArithTable table = build_table(Variant::of(family, k), N);
    return dirichlet_identity_check(table, s);
}

complex digamma(complex s) {
    check_gamma_domain(s);
    const int N = 64 + static_cast<int>(std::ceil(8.0 * std::abs(s)));

    complex sum = 0.0;
    for (int n = N; n >= 1; --n) {
        const double nd = static_cast<double>(n);
        sum += 1.0 / (nd * (nd + s));
    }

    // tail of s * sum_{n>N} 1/(n(n+s)) for g(u) = 1/u - 1/(u+s)
    const double Nd = static_cast<double>(N);
    complex tail = std::log(1.0 + s / Nd);
    tail -= 0.5 * (1.0 / Nd - 1.0 / (Nd + s));
    double f2 = 1.0;  // (2r-1)!
    for (int r = 1; r <= 4; ++r) {
        if (r > 1) f2 *= static_cast<double>((2 * r - 2) * (2 * r - 1));
        const complex g = -f2 * (std::pow(Nd, -2 * r) - cpow_int(1.0 / (Nd + s), 2 * r));
        tail -= kBernoulli[r - 1] / factorial(2 * r) * g;
    }

    return -1.0 / s - euler_gamma() + s * sum + tail;
}

complex polygamma(int ell, complex s) {
    if (ell < 1 || ell > 6) throw ArgumentError("polygamma: ell must be in [1, 6]");
    check_gamma_domain(s);
    const int N = 64 + static_cast<int>(std::ceil(8.0 * std::abs(s)));
    const double Nd = static_cast<double>(N);

    complex sum = 0.0;
    for (int n = N; n >= 1; --n)
        sum += cpow_int(1.0 / (static_cast<double>(n) + s), ell + 1);

    // tail of sum_{n>N} (n+s)^{-ell-1} for g(u) = (u+s)^{-ell-1}
    complex tail = cpow_int(1.0 / (Nd + s), ell) / static_cast<double>(ell);
    tail -= 0.5 * cpow_int(1.0 / (Nd + s), ell + 1);
    for (int r = 1; r <= 4; ++r) {
        double rise = 1.0;  // (ell+1)...(ell+2r-1)
        for (int i = 1; i <= 2 * r - 1; ++i) rise *= static_cast<double>(ell + i);
        const complex g = -rise * cpow_int(1.0 / (Nd + s), ell + 2 * r);
        tail -= kBernoulli[r - 1] / factorial(2 * r) * g;
    }

    const double sign = (ell % 2 == 1) ? 1.0 : -1.0;
    return sign * factorial(ell) * (cpow_int(1.0 / s, ell + 1) + sum + tail);
}

}  // namespace mtl
