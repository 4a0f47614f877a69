#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mtl/arith.hpp"
#include "mtl/common.hpp"
#include "mtl/mainterm.hpp"

namespace mtl {

// One (x, y) evaluation of a twisted sum against its residue main term.
// normalized = |remainder| / (sqrt(x) L^e), L = log(x + |y|),
// e = 2 for k = 1 and 2k+1 otherwise.
struct TwistRecord {
    double x = 0.0;
    double y = 0.0;
    complex psi;
    complex main;
    complex remainder;  // psi - main
    double normalized = 0.0;
};

struct ScanSpec {
    int k = 1;
    Family family = Family::Conv;
    std::vector<double> x_grid;  // strictly ascending, entries >= 2
    std::vector<double> y_list;
    std::uint64_t n_max = 0;  // >= max(x_grid)
    std::string output_path;  // empty: no CSV file
    int threads = 1;          // 0: hardware concurrency
};

// Psi(x, y) = sum_{n <= floor(x)} values[n] (cos(y log n) - i sin(y log n)),
// accumulated with two-sum compensated summation on both components.
// Supported twist range |y| <= 1e6. x > n_max raises RangeError.
complex twisted_sum(const ArithTable& table, double x, double y);

// Partial sums at every grid point from one pass over the table; bitwise
// identical to independent twisted_sum calls at the same cutoffs.
std::vector<complex> prefix_scan(const ArithTable& table, double y,
                                 std::span<const double> x_grid);

struct ScanResult {
    std::vector<TwistRecord> records;  // ordered by (y, x), both ascending
    double max_normalized = 0.0;
};

// Full scan: one prefix pass per y, main terms from the Laurent data,
// optional CSV emission (atomic write). The table must cover spec.n_max.
ScanResult scan(const ScanSpec& spec, const ArithTable& table);
ScanResult scan(const ScanSpec& spec);  // builds the table itself

// CSV with header
//   k,variant,x,y,psi_re,psi_im,main_re,main_im,r_re,r_im,normalized
// and 17-significant-digit fields; byte-deterministic for fixed input.
std::string scan_csv(const ScanSpec& spec, const ScanResult& result);
void write_scan_csv(const ScanSpec& spec, const ScanResult& result,
                    const std::filesystem::path& path);

}  // namespace mtl
