#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mtl/common.hpp"
#include "mtl/errors.hpp"

namespace mtl {

// Which arithmetic function a table holds. Tag values double as the cache
// file encoding, so they are fixed.
enum class VariantTag : std::uint8_t {
    VonMangoldt = 0,  // Lambda
    Moebius = 1,      // mu
    ConvPower = 2,    // Lambda^k, k-fold Dirichlet convolution
    Generalized = 3,  // Lambda_k = mu * (log)^k
    NaturalLog = 4,   // log n
    Derived = 255,    // generic convolution result; in-memory only
};

struct Variant {
    VariantTag tag = VariantTag::VonMangoldt;
    int k = 0;  // order for ConvPower/Generalized, 0 otherwise

    static Variant von_mangoldt() { return {VariantTag::VonMangoldt, 0}; }
    static Variant moebius() { return {VariantTag::Moebius, 0}; }
    static Variant natural_log() { return {VariantTag::NaturalLog, 0}; }
    static Variant conv_power(int k);
    static Variant generalized(int k);
    static Variant derived() { return {VariantTag::Derived, 0}; }
    static Variant of(Family f, int k) {
        return f == Family::Conv ? conv_power(k) : generalized(k);
    }

    std::string name() const;
    bool operator==(const Variant&) const = default;
};

Variant parse_variant(const std::string& name, int k);

// Dense table of one arithmetic function on 1..n_max. values[0] is unused
// and always zero; immutable once built.
struct ArithTable {
    Variant variant;
    std::uint64_t n_max = 0;
    std::vector<double> values;  // size n_max + 1

    double operator[](std::uint64_t n) const { return values[n]; }
    std::span<const double> span() const { return {values.data(), values.size()}; }
};

// Memory ceiling for a single table allocation (bytes). Exceeding it raises
// ResourceError naming the budget instead of attempting the allocation.
std::uint64_t table_memory_budget();
void set_table_memory_budget(std::uint64_t bytes);

// Lambda(n) = log p if n = p^a, else 0. Segmented factor sieve, O(n) space.
ArithTable sieve_von_mangoldt(std::uint64_t n_max);

// mu(n) from the same segmented factor sieve.
ArithTable sieve_moebius(std::uint64_t n_max);

// values[n] = log n.
ArithTable natural_log_table(std::uint64_t n_max);

// (f * g)[n] = sum over d | n of f[d] g[n/d], n <= n_max. Plain double-loop
// over (d, multiples of d); zero entries of f are skipped, which makes the
// Lambda-family convolutions near-linear.
ArithTable dirichlet_convolve(const ArithTable& f, const ArithTable& g);

// Lambda^k by (k-1) convolutions of the sieved Lambda table.
ArithTable lambda_conv_power(int k, std::uint64_t n_max);

// Lambda_k by the recurrence Lambda_{m+1} = log * Lambda_m + Lambda (*) Lambda_m.
ArithTable lambda_generalized(int k, std::uint64_t n_max);

// Direct divisor-sum evaluation sum_{d|n} mu(d) (log(n/d))^k by trial
// division; the independent oracle for lambda_generalized.
double lambda_generalized_oracle(int k, std::uint64_t n);

// Dispatch on variant; the entry point used by the CLI and the cache.
ArithTable build_table(Variant v, std::uint64_t n_max);

}  // namespace mtl
