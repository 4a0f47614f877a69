#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "mtl/errors.hpp"

namespace mtl {

using complex = std::complex<double>;

// The two twisted-sum families handled throughout:
//   Conv: k-fold Dirichlet self-convolution of the von Mangoldt function,
//         Dirichlet series (-1)^k (zeta'/zeta)^k.
//   Gen:  generalized von Mangoldt function mu * (log)^k,
//         Dirichlet series (-1)^k zeta^(k)/zeta.
enum class Family : std::uint8_t { Conv, Gen };

inline const char* family_name(Family f) {
    return f == Family::Conv ? "conv" : "gen";
}

inline Family parse_family(const std::string& s) {
    if (s == "conv") return Family::Conv;
    if (s == "gen") return Family::Gen;
    throw ArgumentError("unknown variant '" + s + "' (expected conv or gen)");
}

// Exact factorials through 20! (largest exactly representable in binary64).
inline double factorial(int n) {
    static constexpr std::array<double, 21> table = [] {
        std::array<double, 21> t{};
        t[0] = 1.0;
        for (int i = 1; i <= 20; ++i) t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    if (n < 0 || n > 20) throw ArgumentError("factorial: n out of [0,20]");
    return table[static_cast<std::size_t>(n)];
}

}  // namespace mtl
