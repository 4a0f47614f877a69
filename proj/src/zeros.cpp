#include "mtl/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "mtl/errors.hpp"
#include "mtl/kahan.hpp"
#include "mtl/special.hpp"

namespace mtl {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// zero-counting density: dN(gamma) ~ log(gamma / 2pi) / 2pi d gamma
double density_integral_linear(double T) {
    // int_T^inf log(g/2pi)/(2pi) g^{-2} dg = (log(T/2pi) + 1) / (2pi T)
    return (std::log(T / kTwoPi) + 1.0) / (kTwoPi * T);
}

complex pair_term_linear(double gamma, complex s) {
    // 1/(s-rho) + 1/(s-conj rho) + 1/rho + 1/conj(rho), rho = 1/2 + i gamma
    const complex shalf = s - 0.5;
    return (2.0 * s - 1.0) / (shalf * shalf + gamma * gamma) +
           1.0 / (0.25 + gamma * gamma);
}

complex cpow_int(complex base, int e) {
    complex v = 1.0;
    for (int i = 0; i < e; ++i) v *= base;
    return v;
}

}  // namespace

ZeroTable ZeroTable::head(std::size_t n) const {
    ZeroTable t;
    t.source = source;
    t.ordinates.assign(ordinates.begin(),
                       ordinates.begin() + static_cast<std::ptrdiff_t>(std::min(n, count())));
    return t;
}

ZeroTable load_zeros(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ResourceError("cannot open zeros file '" + path.string() + "'");

    ZeroTable table;
    table.source = path.string();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        double value = 0.0;
        std::size_t used = 0;
        try {
            value = std::stod(line.substr(start), &used);
        } catch (const std::exception&) {
            throw FormatError("'" + path.string() + "' line " + std::to_string(lineno) +
                              ": not a number");
        }
        const std::size_t rest = line.find_first_not_of(" \t\r", start + used);
        if (rest != std::string::npos)
            throw FormatError("'" + path.string() + "' line " + std::to_string(lineno) +
                              ": trailing characters");
        if (!(value > 0.0) || !std::isfinite(value))
            throw FormatError("'" + path.string() + "' line " + std::to_string(lineno) +
                              ": ordinates must be positive");
        if (!table.ordinates.empty() && value <= table.ordinates.back())
            throw FormatError("'" + path.string() + "' line " + std::to_string(lineno) +
                              ": ordinates must be strictly ascending");
        table.ordinates.push_back(value);
    }
    if (!table.ordinates.empty() && table.ordinates.front() <= 14.0)
        throw ValidationError("'" + path.string() +
                              "': first ordinate <= 14 (zeta has no zeros there)");
    return table;
}

ZeroSumLinear zero_sum_linear(const ZeroTable& table, complex s) {
    if (s.real() < 1.5 || s.real() > 4.0)
        throw DomainError("zero_sum_linear: Re(s) in [1.5, 4] required");
    if (std::abs(s - complex(1.0, 0.0)) < 0.1)
        throw DomainError("zero_sum_linear: s too close to 1");

    CompensatedSum re, im;
    for (double gamma : table.ordinates) {
        const complex t = pair_term_linear(gamma, s);
        re.add(t.real());
        im.add(t.imag());
    }
    const complex sum(re.value(), im.value());

    const auto zd = zeta_derivatives(s, 1);
    const complex logderiv = zd[1] / zd[0];
    const complex b = logderiv - 0.5 * std::log(M_PI) + 1.0 / (s - 1.0) +
                      0.5 * digamma(s / 2.0 + 1.0) - sum;

    double tail = 0.0;
    if (!table.ordinates.empty()) {
        const double T = table.ordinates.back();
        tail = (std::abs(2.0 * s - 1.0) + 1.0) * density_integral_linear(T);
    }
    return {sum, b, tail};
}

ZeroSumPower zero_sum_power(const ZeroTable& table, int k, complex s) {
    if (k < 2) throw ArgumentError("zero_sum_power: k >= 2 required");
    if (s.real() <= 0.5 || s.real() > 2.0)
        throw DomainError("zero_sum_power: Re(s) in (1/2, 2] required");

    CompensatedSum re, im;
    for (double gamma : table.ordinates) {
        const complex rho(0.5, gamma);
        const complex a = cpow_int(1.0 / (s - rho), k);
        const complex b = cpow_int(1.0 / (s - std::conj(rho)), k);
        re.add(a.real() + b.real());
        im.add(a.imag() + b.imag());
    }

    double tail = 0.0;
    if (!table.ordinates.empty()) {
        // |s - rho| >= gamma - |Im s| for gamma above the table top; integrate
        // the density majorant int_T (v)^{-k} (log v + A) dv in closed form
        const double T = table.ordinates.back();
        const double c = std::abs(s.imag());
        const double V = T - c;
        if (V > 2.0) {
            const double A = std::log((1.0 + c / V) / kTwoPi);
            const double km1 = static_cast<double>(k - 1);
            tail = 2.0 / kTwoPi * std::pow(V, -km1) *
                   ((std::log(V) + A) / km1 + 1.0 / (km1 * km1));
        } else {
            tail = std::numeric_limits<double>::infinity();
        }
    }
    return {complex(re.value(), im.value()), tail};
}

}  // namespace mtl
