#include "mtl/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "mtl/kahan.hpp"

namespace mtl {

namespace {

// Regular coefficients carried by the internal zeta expansion. Six
// derivative/power operations still leave >= 4 trustworthy regular terms.
constexpr int kInternalRegularOrder = 11;

constexpr double kBernoulli[] = {
    1.0 / 6,       -1.0 / 30,       1.0 / 42,      -1.0 / 30,      5.0 / 66,
    -691.0 / 2730, 7.0 / 6,         -3617.0 / 510, 43867.0 / 798,  -174611.0 / 330,
};  // B_2, B_4, ..., B_20

// gamma_n = lim_N [ sum_{m<=N} (log m)^n / m - (log N)^{n+1}/(n+1) ],
// evaluated at modest N with deep Euler-Maclaurin tail corrections. N is
// kept small on purpose: the cancellation against (log N)^{n+1}/(n+1)
// grows with N and would erode the absolute accuracy of the small gamma_n.
double stieltjes_one(int n) {
    constexpr int N = 40;
    constexpr int depth = 10;

    CompensatedSum s;
    for (int m = 1; m <= N; ++m) {
        const double lm = std::log(static_cast<double>(m));
        s.add(std::pow(lm, n) / m);
    }
    const double L = std::log(static_cast<double>(N));
    double value = s.value() - std::pow(L, n + 1) / (n + 1);
    value -= 0.5 * std::pow(L, n) / N;

    // f(u) = (log u)^n / u. With f^(j)(u) = Q_j(log u) / u^(j+1), the
    // polynomials obey Q_{j+1} = Q_j' - (j+1) Q_j starting from Q_0 = X^n.
    std::vector<double> q(static_cast<std::size_t>(n) + 1, 0.0);
    q[static_cast<std::size_t>(n)] = 1.0;
    int m_exp = 1;
    double npow = 1.0 / N;  // N^{-(j+1)} for current j
    for (int r = 1; r <= depth; ++r) {
        // advance to the (2r-1)-th derivative
        while (m_exp < 2 * r) {
            std::vector<double> next(q.size(), 0.0);
            for (std::size_t i = 1; i < q.size(); ++i)
                next[i - 1] += static_cast<double>(i) * q[i];
            for (std::size_t i = 0; i < q.size(); ++i)
                next[i] -= static_cast<double>(m_exp) * q[i];
            q = std::move(next);
            ++m_exp;
            npow /= N;
        }
        double qval = 0.0;
        for (std::size_t i = q.size(); i-- > 0;) qval = qval * L + q[i];
        const double deriv = qval * npow;  // f^(2r-1)(N)
        value -= kBernoulli[r - 1] / factorial(2 * r) * deriv;
    }
    return value;
}

const std::vector<double>& stieltjes_internal() {
    static const std::vector<double> table = [] {
        std::vector<double> g(kInternalRegularOrder + 1);
        for (int n = 0; n <= kInternalRegularOrder; ++n) g[static_cast<std::size_t>(n)] = stieltjes_one(n);
        return g;
    }();
    return table;
}

LaurentSeries zeta_laurent_internal(int M) {
    const auto& g = stieltjes_internal();
    std::vector<double> c(static_cast<std::size_t>(M) + 2, 0.0);
    c[0] = 1.0;  // simple pole, residue 1
    double fact = 1.0;
    for (int n = 0; n <= M; ++n) {
        if (n > 0) fact *= n;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        c[static_cast<std::size_t>(n) + 1] = sign * g[static_cast<std::size_t>(n)] / fact;
    }
    return LaurentSeries(-1, std::move(c));
}

}  // namespace

LaurentSeries::LaurentSeries(int lead, std::vector<double> coeffs)
    : lead_(lead), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ArgumentError("LaurentSeries needs at least one coefficient");
    // trim exact leading zeros inside the principal part
    while (lead_ < 0 && coeffs_.size() > 1 && coeffs_.front() == 0.0) {
        coeffs_.erase(coeffs_.begin());
        ++lead_;
    }
}

double LaurentSeries::coeff_at(int e) const {
    if (e < lead_) return 0.0;
    const int idx = e - lead_;
    if (idx >= terms())
        throw ArgumentError("coefficient of order " + std::to_string(e) +
                            " is beyond the truncation window");
    return coeffs_[static_cast<std::size_t>(idx)];
}

double LaurentSeries::a(int m) const {
    if (m < 1) throw ArgumentError("principal index m must be >= 1");
    if (m > pole_order()) return 0.0;
    return coeff_at(-m);
}

std::vector<double> LaurentSeries::principal() const {
    std::vector<double> out;
    for (int m = pole_order(); m >= 1; --m) out.push_back(a(m));
    return out;
}

PowerSeries LaurentSeries::regular() const {
    std::vector<double> out;
    for (int n = 0; n <= max_regular_order(); ++n) out.push_back(coeff_at(n));
    if (out.empty()) out.push_back(0.0);
    return PowerSeries(std::move(out));
}

double LaurentSeries::eval(double h) const {
    // regular part by Horner, principal part by explicit powers
    double reg = 0.0;
    const int bottom = std::max(lead_, 0);
    for (int e = max_regular_order(); e >= bottom; --e) reg = reg * h + coeff_at(e);
    if (bottom > 0) reg *= std::pow(h, bottom);
    double prin = 0.0;
    double hp = 1.0;
    for (int m = 1; m <= pole_order(); ++m) {
        hp *= h;
        prin += a(m) / hp;
    }
    return reg + prin;
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
    const int lead = std::min(a.lead(), b.lead());
    const int top = std::min(a.lead() + a.terms(), b.lead() + b.terms());  // exclusive
    if (top <= lead) throw ArgumentError("series_add: truncation windows do not overlap");
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(top - lead));
    for (int e = lead; e < top; ++e) {
        const double av = (e < a.lead()) ? 0.0 : a.coeff_at(e);
        const double bv = (e < b.lead()) ? 0.0 : b.coeff_at(e);
        c.push_back(av + bv);
    }
    return LaurentSeries(lead, std::move(c));
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
    const int terms = std::min(a.terms(), b.terms());
    std::vector<double> c(static_cast<std::size_t>(terms), 0.0);
    for (int i = 0; i < terms; ++i) {
        const double ai = a.coeff_at(a.lead() + i);
        if (ai == 0.0) continue;
        for (int j = 0; i + j < terms; ++j)
            c[static_cast<std::size_t>(i + j)] += ai * b.coeff_at(b.lead() + j);
    }
    return LaurentSeries(a.lead() + b.lead(), std::move(c));
}

LaurentSeries series_scale(const LaurentSeries& a, double scale) {
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(a.terms()));
    for (int i = 0; i < a.terms(); ++i) c.push_back(scale * a.coeff_at(a.lead() + i));
    return LaurentSeries(a.lead(), std::move(c));
}

LaurentSeries series_pow(const LaurentSeries& a, int k) {
    if (k < 1) throw ArgumentError("series_pow: k must be >= 1");
    LaurentSeries out = a;
    for (int i = 1; i < k; ++i) out = series_mul(out, a);
    return out;
}

LaurentSeries series_derivative(const LaurentSeries& a) {
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(a.terms()));
    for (int i = 0; i < a.terms(); ++i) {
        const int e = a.lead() + i;
        c.push_back(static_cast<double>(e) * a.coeff_at(e));
    }
    return LaurentSeries(a.lead() - 1, std::move(c));
}

LaurentSeries series_div(const LaurentSeries& a, const LaurentSeries& b) {
    const double b0 = b.coeff_at(b.lead());
    if (std::abs(b0) < 1e-14)
        throw SingularSeriesError("series_div: leading coefficient " + std::to_string(b0) +
                                  " is numerically zero");
    const int terms = std::min(a.terms(), b.terms());
    // reciprocal of the unit series b / (b0 (s-1)^lead_b)
    std::vector<double> r(static_cast<std::size_t>(terms), 0.0);
    r[0] = 1.0 / b0;
    for (int j = 1; j < terms; ++j) {
        double acc = 0.0;
        for (int i = 1; i <= j; ++i)
            acc += b.coeff_at(b.lead() + i) * r[static_cast<std::size_t>(j - i)];
        r[static_cast<std::size_t>(j)] = -acc / b0;
    }
    std::vector<double> c(static_cast<std::size_t>(terms), 0.0);
    for (int i = 0; i < terms; ++i) {
        const double ai = a.coeff_at(a.lead() + i);
        if (ai == 0.0) continue;
        for (int j = 0; i + j < terms; ++j)
            c[static_cast<std::size_t>(i + j)] += ai * r[static_cast<std::size_t>(j)];
    }
    return LaurentSeries(a.lead() - b.lead(), std::move(c));
}

std::vector<double> stieltjes_constants(int M) {
    if (M < 0 || M > 8)
        throw ArgumentError("stieltjes_constants: M must be in [0, 8] "
                            "(accuracy contract not maintained beyond)");
    const auto& g = stieltjes_internal();
    return {g.begin(), g.begin() + M + 1};
}

LaurentSeries zeta_laurent(int M) {
    if (M < 0 || M > 8) throw ArgumentError("zeta_laurent: M must be in [0, 8]");
    return zeta_laurent_internal(M);
}

LaurentSeries alpha_laurent(int k, Family family) {
    if (k < 1) throw ArgumentError("alpha_laurent: k must be >= 1");
    if (k > 6)
        throw ArgumentError("alpha_laurent: k > 6 exceeds the Stieltjes accuracy budget");
    const LaurentSeries zeta = zeta_laurent_internal(kInternalRegularOrder);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    if (family == Family::Conv) {
        const LaurentSeries logderiv = series_div(series_derivative(zeta), zeta);
        return series_scale(series_pow(logderiv, k), sign);
    }
    LaurentSeries num = zeta;
    for (int i = 0; i < k; ++i) num = series_derivative(num);
    return series_scale(series_div(num, zeta), sign);
}

}  // namespace mtl
