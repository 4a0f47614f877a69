#pragma once

#include <vector>

#include "mtl/common.hpp"
#include "mtl/errors.hpp"

namespace mtl {

// Division by a series whose leading available coefficient is numerically zero.
struct SingularSeriesError : DomainError {
    using DomainError::DomainError;
};

// Truncated power series around s = 1: c[0] + c[1](s-1) + ... + c[M](s-1)^M.
struct PowerSeries {
    std::vector<double> coeffs;

    PowerSeries() = default;
    explicit PowerSeries(std::vector<double> c) : coeffs(std::move(c)) {}
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs.size()))
                   ? coeffs[static_cast<std::size_t>(n)]
                   : 0.0;
    }
};

// Truncated Laurent series around s = 1. Stored as a contiguous run of
// known coefficients starting at exponent `lead` (negative lead = pole):
// coeffs[j] multiplies (s-1)^(lead+j). Exact leading zeros are trimmed on
// construction so that pole_order > 0 implies a_{pole_order} != 0.
class LaurentSeries {
public:
    LaurentSeries() : lead_(0), coeffs_{0.0} {}
    LaurentSeries(int lead, std::vector<double> coeffs);

    static LaurentSeries from_power(const PowerSeries& p) {
        return LaurentSeries(0, p.coeffs);
    }

    int lead() const { return lead_; }
    int terms() const { return static_cast<int>(coeffs_.size()); }
    int pole_order() const { return lead_ < 0 ? -lead_ : 0; }
    // highest regular exponent with a known coefficient (may be negative
    // when the truncation window ends inside the principal part)
    int max_regular_order() const { return lead_ + terms() - 1; }

    // coefficient of (s-1)^e, zero below the window; ArgumentError above it
    double coeff_at(int e) const;
    // principal coefficient a_m of (s-1)^{-m}; zero for m > pole_order
    double a(int m) const;
    // regular coefficient b_n of (s-1)^n
    double b(int n) const { return coeff_at(n); }

    std::vector<double> principal() const;  // a_p .. a_1
    PowerSeries regular() const;            // b_0 .. b_{max known}

    // value of the truncated series at s = 1 + h
    double eval(double h) const;

private:
    int lead_;
    std::vector<double> coeffs_;
};

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_scale(const LaurentSeries& a, double c);
LaurentSeries series_pow(const LaurentSeries& a, int k);
LaurentSeries series_derivative(const LaurentSeries& a);
LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b);

// Stieltjes constants gamma_0..gamma_M (gamma_0 is Euler-Mascheroni),
// computed by the tail-corrected Euler-Maclaurin limit. M <= 8.
std::vector<double> stieltjes_constants(int M);

// zeta at s = 1: 1/(s-1) + sum_n (-1)^n gamma_n (s-1)^n / n!. M <= 8.
LaurentSeries zeta_laurent(int M);

// Laurent expansion at s = 1 of the Dirichlet series of the given family:
//   Conv: (-1)^k (zeta'/zeta)^k      Gen: (-1)^k zeta^(k)/zeta
// Pole order is exactly k; a_1..a_k feed the main-term evaluation. k <= 6.
LaurentSeries alpha_laurent(int k, Family family);

}  // namespace mtl
