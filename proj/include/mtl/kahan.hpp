#pragma once

#include <cmath>

namespace mtl {

// Kahan-Babuska-Neumaier accumulator. The two-sum step is an error-free
// transformation, so the compensation term holds the exact rounding residue
// of every addition; combine() merges partial sums without losing it.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    void combine(const CompensatedSum& other) {
        add(other.sum);
        comp += other.comp;
    }

    double value() const { return sum + comp; }
};

}  // namespace mtl
