#include "mtl/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace mtl {

Variant Variant::conv_power(int k) {
    if (k < 1) throw ArgumentError("ConvPower requires k >= 1");
    return {VariantTag::ConvPower, k};
}

Variant Variant::generalized(int k) {
    if (k < 1) throw ArgumentError("Generalized requires k >= 1");
    return {VariantTag::Generalized, k};
}

std::string Variant::name() const {
    switch (tag) {
        case VariantTag::VonMangoldt: return "vonmangoldt";
        case VariantTag::Moebius: return "moebius";
        case VariantTag::ConvPower: return "conv_k" + std::to_string(k);
        case VariantTag::Generalized: return "gen_k" + std::to_string(k);
        case VariantTag::NaturalLog: return "log";
        case VariantTag::Derived: return "derived";
    }
    return "?";
}

Variant parse_variant(const std::string& name, int k) {
    if (name == "vonmangoldt" || name == "lambda") return Variant::von_mangoldt();
    if (name == "moebius" || name == "mu") return Variant::moebius();
    if (name == "log") return Variant::natural_log();
    if (name == "conv") return Variant::conv_power(k);
    if (name == "gen") return Variant::generalized(k);
    throw ArgumentError("unknown variant '" + name +
                        "' (expected vonmangoldt, moebius, conv, gen, or log)");
}

namespace {

std::atomic<std::uint64_t> g_table_budget{std::uint64_t{8} << 30};  // 8 GiB

std::vector<double> allocate_values(std::uint64_t n_max) {
    if (n_max < 1) throw ArgumentError("n_max must be >= 1");
    const std::uint64_t bytes = (n_max + 1) * sizeof(double);
    const std::uint64_t budget = g_table_budget.load();
    if (bytes > budget) {
        throw ResourceError("table of " + std::to_string(n_max) + " entries (" +
                            std::to_string(bytes) + " bytes) exceeds the memory budget of " +
                            std::to_string(budget) + " bytes");
    }
    try {
        return std::vector<double>(n_max + 1, 0.0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("allocation of " + std::to_string(bytes) + " bytes failed");
    }
}

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
    // simple odd sieve up to sqrt of the table size
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    const std::size_t n = static_cast<std::size_t>(limit);
    std::vector<bool> comp(n + 1, false);
    for (std::size_t i = 2; i * i <= n; ++i)
        if (!comp[i])
            for (std::size_t j = i * i; j <= n; j += i) comp[j] = true;
    for (std::size_t i = 2; i <= n; ++i)
        if (!comp[i]) primes.push_back(static_cast<std::uint32_t>(i));
    return primes;
}

// Segment width balances per-thread scratch (24 B/entry) against sieve
// startup overhead per base prime.
constexpr std::uint64_t kSegment = std::uint64_t{1} << 20;

enum class SieveOutput { Lambda, Moebius };

// Factor one segment [lo, hi) with the base primes and fill out[n] with
// Lambda(n) or mu(n). Scratch vectors are reused across segments.
void sieve_segment(std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint32_t>& primes, SieveOutput what,
                   std::vector<std::uint64_t>& rem, std::vector<std::uint8_t>& omega,
                   std::vector<std::int8_t>& mu, std::vector<std::uint32_t>& firstp,
                   double* out) {
    const std::size_t len = static_cast<std::size_t>(hi - lo);
    rem.assign(len, 0);
    omega.assign(len, 0);
    mu.assign(len, 1);
    firstp.assign(len, 0);
    for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;

    for (std::uint32_t p : primes) {
        const std::uint64_t p64 = p;
        if (p64 * p64 >= hi) break;
        std::uint64_t start = ((lo + p64 - 1) / p64) * p64;
        for (std::uint64_t m = start; m < hi; m += p64) {
            const std::size_t i = static_cast<std::size_t>(m - lo);
            int e = 0;
            while (rem[i] % p64 == 0) {
                rem[i] /= p64;
                ++e;
            }
            omega[i] = static_cast<std::uint8_t>(omega[i] + 1);
            mu[i] = (e >= 2) ? 0 : static_cast<std::int8_t>(-mu[i]);
            if (firstp[i] == 0) firstp[i] = p;
        }
    }

    for (std::size_t i = 0; i < len; ++i) {
        const std::uint64_t n = lo + i;
        if (n == 1) {
            out[1] = (what == SieveOutput::Moebius) ? 1.0 : 0.0;
            continue;
        }
        const bool large_prime_left = rem[i] > 1;  // one prime factor > sqrt(hi)
        const int distinct = omega[i] + (large_prime_left ? 1 : 0);
        if (what == SieveOutput::Moebius) {
            out[n] = large_prime_left ? -static_cast<double>(mu[i])
                                      : static_cast<double>(mu[i]);
        } else {
            if (distinct != 1) {
                out[n] = 0.0;
            } else if (large_prime_left) {
                out[n] = std::log(static_cast<double>(n));  // n itself prime
            } else {
                out[n] = std::log(static_cast<double>(firstp[i]));
            }
        }
    }
}

ArithTable sieve_table(std::uint64_t n_max, SieveOutput what, Variant variant) {
    ArithTable t;
    t.variant = variant;
    t.n_max = n_max;
    t.values = allocate_values(n_max);

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n_max)));
    while ((root + 1) * (root + 1) <= n_max) ++root;
    const auto primes = base_primes(root);

    const std::uint64_t nseg = (n_max + kSegment - 1) / kSegment;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, nseg));

    std::atomic<std::uint64_t> next{0};
    auto run = [&] {
        std::vector<std::uint64_t> rem;
        std::vector<std::uint8_t> omega;
        std::vector<std::int8_t> mu;
        std::vector<std::uint32_t> firstp;
        for (;;) {
            const std::uint64_t seg = next.fetch_add(1);
            if (seg >= nseg) return;
            const std::uint64_t lo = std::max<std::uint64_t>(1, seg * kSegment);
            const std::uint64_t hi = std::min(n_max + 1, (seg + 1) * kSegment);
            if (lo >= hi) continue;
            sieve_segment(lo, hi, primes, what, rem, omega, mu, firstp, t.values.data());
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    return t;
}

bool in_conv_family(const Variant& v) {
    return v.tag == VariantTag::VonMangoldt || v.tag == VariantTag::ConvPower;
}

int conv_degree(const Variant& v) {
    return v.tag == VariantTag::VonMangoldt ? 1 : v.k;
}

}  // namespace

std::uint64_t table_memory_budget() { return g_table_budget.load(); }

void set_table_memory_budget(std::uint64_t bytes) { g_table_budget.store(bytes); }

ArithTable sieve_von_mangoldt(std::uint64_t n_max) {
    return sieve_table(n_max, SieveOutput::Lambda, Variant::von_mangoldt());
}

ArithTable sieve_moebius(std::uint64_t n_max) {
    return sieve_table(n_max, SieveOutput::Moebius, Variant::moebius());
}

ArithTable natural_log_table(std::uint64_t n_max) {
    ArithTable t;
    t.variant = Variant::natural_log();
    t.n_max = n_max;
    t.values = allocate_values(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n)
        t.values[n] = std::log(static_cast<double>(n));
    return t;
}

ArithTable dirichlet_convolve(const ArithTable& f, const ArithTable& g) {
    if (f.n_max != g.n_max)
        throw ArgumentError("dirichlet_convolve: operand sizes differ (" +
                            std::to_string(f.n_max) + " vs " + std::to_string(g.n_max) + ")");
    const std::uint64_t n = f.n_max;
    ArithTable out;
    out.variant = (in_conv_family(f.variant) && in_conv_family(g.variant))
                      ? Variant::conv_power(conv_degree(f.variant) + conv_degree(g.variant))
                      : Variant::derived();
    out.n_max = n;
    out.values = allocate_values(n);
    for (std::uint64_t d = 1; d <= n; ++d) {
        const double fd = f.values[d];
        if (fd == 0.0) continue;
        std::uint64_t m = d;
        for (std::uint64_t q = 1; m <= n; m += d, ++q) out.values[m] += fd * g.values[q];
    }
    return out;
}

ArithTable lambda_conv_power(int k, std::uint64_t n_max) {
    if (k < 1) throw ArgumentError("lambda_conv_power requires k >= 1");
    ArithTable lambda = sieve_von_mangoldt(n_max);
    if (k == 1) {
        lambda.variant = Variant::conv_power(1);
        return lambda;
    }
    ArithTable acc = dirichlet_convolve(lambda, lambda);
    for (int i = 3; i <= k; ++i) acc = dirichlet_convolve(lambda, acc);  // sparse outer
    return acc;
}

ArithTable lambda_generalized(int k, std::uint64_t n_max) {
    if (k < 1) throw ArgumentError("lambda_generalized requires k >= 1");
    ArithTable lambda = sieve_von_mangoldt(n_max);
    ArithTable cur = lambda;
    cur.variant = Variant::generalized(1);
    for (int m = 1; m < k; ++m) {
        ArithTable next = dirichlet_convolve(lambda, cur);
        for (std::uint64_t n = 2; n <= n_max; ++n)
            next.values[n] += std::log(static_cast<double>(n)) * cur.values[n];
        next.variant = Variant::generalized(m + 1);
        cur = std::move(next);
    }
    return cur;
}

double lambda_generalized_oracle(int k, std::uint64_t n) {
    if (k < 1) throw ArgumentError("lambda_generalized_oracle requires k >= 1");
    if (n == 0) throw ArgumentError("n must be positive");
    if (n == 1) return 0.0;

    // distinct prime factors by trial division
    std::vector<std::uint64_t> primes;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) primes.push_back(m);

    // mu(d) vanishes off squarefree d, so enumerate subsets of distinct primes
    const double logn = std::log(static_cast<double>(n));
    double sum = 0.0;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        double logd = 0.0;
        int bits = 0;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                logd += std::log(static_cast<double>(primes[i]));
                ++bits;
            }
        }
        const double term = std::pow(logn - logd, k);
        sum += (bits % 2 == 0) ? term : -term;
    }
    return sum;
}

ArithTable build_table(Variant v, std::uint64_t n_max) {
    switch (v.tag) {
        case VariantTag::VonMangoldt: return sieve_von_mangoldt(n_max);
        case VariantTag::Moebius: return sieve_moebius(n_max);
        case VariantTag::ConvPower: return lambda_conv_power(v.k, n_max);
        case VariantTag::Generalized: return lambda_generalized(v.k, n_max);
        case VariantTag::NaturalLog: return natural_log_table(n_max);
        case VariantTag::Derived: break;
    }
    throw ArgumentError("cannot build a table for variant '" + v.name() + "'");
}

}  // namespace mtl
