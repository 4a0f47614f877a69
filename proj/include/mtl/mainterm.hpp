#pragma once

#include <span>
#include <vector>

#include "mtl/common.hpp"

namespace mtl {

// Residue data driving the main term: the principal Laurent coefficients
// a_1..a_k of alpha(0, s) at s = 1 for one (k, family) pair.
struct MainTermSpec {
    int k = 1;
    Family family = Family::Conv;
    std::vector<double> principal;  // principal[m-1] = a_m

    static MainTermSpec make(int k, Family family);
    double a(int m) const { return principal[static_cast<std::size_t>(m - 1)]; }
};

// Res_{w=1} of x^{w-iy} / ((w-1)^m (w-iy)):
//   -sum_{j=0}^{m-1} x^{1-iy} (log x)^{m-1-j} / ((m-1-j)! (iy-1)^{j+1})
complex residue_basis(int m, double x, double y);

// Res_{w=1-iy} of alpha(y,w) x^w / w = sum_{m=1}^{k} a_m residue_basis(m, x, y).
complex main_term(const MainTermSpec& spec, double x, double y);

// The k = 2 closed forms, transcribed directly; oracle for main_term.
//   conv: x^{1-iy}(log x - 2C_0)/(1-iy) - x^{1-iy}/(1-iy)^2
//   gen:  2x^{1-iy}(log x - C_0)/(1-iy) - 2x^{1-iy}/(1-iy)^2
complex main_term_closed_k2(Family family, double x, double y);

struct SaloniResult {
    complex lhs;    // quadrature of int_1^X residue_basis(m,x,y) x^{-s} dx
    complex rhs;    // (1/(s-1)) ((s-2+iy)^{-m} - (iy-1)^{-m})
    double defect;  // |lhs - rhs| plus the analytic tail bound for (X, inf)
};

// Quadrature verification of the residue-integral identity. Re(s) >= 2.5,
// X >= 1e3; integration runs in u = log x where the integrand is a
// polynomial times a decaying exponential.
SaloniResult saloni_check(int m, double y, complex s, double X = 1e10);

struct ResidualProbe {
    double fitted_constant;  // max of Q over the calibration sub-grid
    struct Violation {
        double x, y, q;
    };
    std::vector<Violation> violations;  // points with Q > 2 * fitted_constant
};

// Empirical probe of |main term| <= C_k x (log x)^{k-1} / (|y|+1):
// Q(x,y) = |main| (|y|+1) / (x (log x)^{k-1}), calibrated on
// x <= 1e4, |y| <= 1e2 and held with factor-2 headroom elsewhere.
ResidualProbe residual_bound_probe(const MainTermSpec& spec, std::span<const double> xs,
                                   std::span<const double> ys);

}  // namespace mtl
