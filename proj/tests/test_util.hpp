#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

namespace testutil {

inline std::filesystem::path data_dir() {
    const char* env = std::getenv("MTL_TEST_DATA");
    return env ? std::filesystem::path(env) : std::filesystem::path("tests/data");
}

inline std::string cli_bin() {
    const char* env = std::getenv("MTL_CLI_BIN");
    return env ? env : "";
}

// trial-division factorization helpers shared by the oracle tests

inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline int omega(std::uint64_t n) { return static_cast<int>(factorize(n).size()); }

// Lambda(n) by definition: log p when n is a prime power, else 0
inline double lambda_ref(std::uint64_t n) {
    if (n < 2) return 0.0;
    const auto f = factorize(n);
    return f.size() == 1 ? std::log(static_cast<double>(f[0].first)) : 0.0;
}

// mu(n) by definition
inline int mu_ref(std::uint64_t n) {
    if (n == 1) return 1;
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

}  // namespace testutil
