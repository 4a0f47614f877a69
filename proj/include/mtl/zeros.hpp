#pragma once

#include <filesystem>
#include <vector>

#include "mtl/common.hpp"

namespace mtl {

// Ascending positive ordinates gamma of zeta zeros 1/2 + i gamma, loaded
// from a text file. Negative-ordinate zeros enter every sum implicitly
// through conjugate pairing.
struct ZeroTable {
    std::vector<double> ordinates;
    std::string source;

    std::size_t count() const { return ordinates.size(); }
    // restriction to the first n ordinates (tail-sensitivity studies)
    ZeroTable head(std::size_t n) const;
};

// One decimal ordinate per line, ascending; '#' lines ignored. Parse errors
// carry the line number; a first ordinate <= 14 fails validation (zeta has
// no critical-strip zeros with |gamma| <= 14).
ZeroTable load_zeros(const std::filesystem::path& path);

struct ZeroSumLinear {
    complex sum;         // sum over rho and conjugates of 1/(s-rho) + 1/rho
    complex b_estimate;  // zeta'/zeta(s) - log(pi)/2 + 1/(s-1)
                         //   + digamma(s/2+1)/2 - sum
    double tail_estimate;
};

// Partial-fraction audit: conjugate pairs are combined analytically,
//   1/(s-rho) + 1/(s-conj(rho)) = (2s-1) / ((s-1/2)^2 + gamma^2),
// so the truncated sum converges like sum gamma^{-2}. b_estimate should sit
// near one constant for every admissible s. Re(s) in [1.5, 4].
ZeroSumLinear zero_sum_linear(const ZeroTable& table, complex s);

struct ZeroSumPower {
    complex sum;  // truncated sum over rho and conjugates of 1/(s-rho)^k
    double tail_estimate;
};

// Truncated sum_rho 1/(s-rho)^k, k >= 2, for s in the strip Re(s) in (1/2, 2].
// Diagnostic only: the contract is Cauchy-convergence of the truncation
// within the reported tail estimate, not any asserted bound.
ZeroSumPower zero_sum_power(const ZeroTable& table, int k, complex s);

}  // namespace mtl
