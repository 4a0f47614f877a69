#pragma once

#include <vector>

#include "mtl/arith.hpp"
#include "mtl/common.hpp"

namespace mtl {

// zeta(s), zeta'(s), ..., zeta^(j_max)(s) by Euler-Maclaurin with the
// correction terms differentiated analytically in s (powers of log, no
// numerical differencing). Valid for Re(s) > 0, |Im(s)| <= 1e3, s away
// from 1 (|s-1| >= 1e-3; use the Laurent expansion closer in). j_max <= 6.
std::vector<complex> zeta_derivatives(complex s, int j_max);

struct IdentityCheck {
    double partial;     // sum_{n<=N} f(n) n^{-s} from the table
    double closed;      // (-1)^k (zeta'/zeta)^k or (-1)^k zeta^(k)/zeta at s
    double tail_bound;  // integral majorant for the omitted n > N range
};

// Numerical check of the Dirichlet-series identities for Lambda^k / Lambda_k.
// Requires s >= 2.5 and N >= 1e4 so the explicit tail bound is tight.
IdentityCheck dirichlet_identity_check(int k, Family family, double s, std::uint64_t N);
IdentityCheck dirichlet_identity_check(const ArithTable& table, double s);

// Gamma'/Gamma from the Weierstrass-product series
//   -1/s - gamma + s sum_{n>=1} 1/(n(n+s)),
// truncated and completed with Euler-Maclaurin corrections of the
// Riemann-Stieltjes tail device. Re(s) >= 0.05.
complex digamma(complex s);

// (d/ds)^ell of Gamma'/Gamma:
//   (-1)^(ell-1) ell! { 1/s^(ell+1) + sum_{n>=1} 1/(n+s)^(ell+1) },
// same tail treatment. 1 <= ell <= 6.
complex polygamma(int ell, complex s);

}  // namespace mtl
