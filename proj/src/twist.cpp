#include "mtl/twist.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include "mtl/kahan.hpp"

namespace mtl {

namespace {

// |y| beyond this would push phases y log n outside the range where
// argument reduction in cos/sin stays accurate.
constexpr double kMaxTwist = 1e6;

// Fixed chunk width: partial sums are computed per chunk and merged in
// chunk order, so results do not depend on the worker count.
constexpr std::uint64_t kChunk = std::uint64_t{1} << 18;

struct ComplexSum {
    CompensatedSum re, im;

    void add(double r, double i) {
        re.add(r);
        im.add(i);
    }
    void combine(const ComplexSum& o) {
        re.combine(o.re);
        im.combine(o.im);
    }
    complex value() const { return {re.value(), im.value()}; }
};

struct ChunkResult {
    ComplexSum total;                    // sum over the whole chunk
    std::vector<ComplexSum> snapshots;   // prefix-within-chunk at each cutoff inside
};

// Accumulate values[n] n^{-iy} for n in [lo, hi]; cutoffs must be the
// (ascending) subrange of summation cutoffs lying inside [lo, hi].
ChunkResult sum_chunk(std::span<const double> values, double y, std::uint64_t lo,
                      std::uint64_t hi, std::span<const std::uint64_t> cutoffs) {
    ChunkResult out;
    std::size_t next_cut = 0;
    // cutoffs below lo (cutoff 0 on the first chunk) snapshot the empty prefix
    while (next_cut < cutoffs.size() && cutoffs[next_cut] < lo) {
        out.snapshots.push_back(out.total);
        ++next_cut;
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
        const double v = values[n];
        if (v != 0.0) {
            if (y == 0.0) {
                out.total.add(v, 0.0);
            } else {
                const double phase = y * std::log(static_cast<double>(n));
                out.total.add(v * std::cos(phase), -v * std::sin(phase));
            }
        }
        while (next_cut < cutoffs.size() && cutoffs[next_cut] == n) {
            out.snapshots.push_back(out.total);
            ++next_cut;
        }
    }
    return out;
}

// One prefix computation per y: fixed chunk partition, per-chunk partial
// sums (parallelizable), then a sequential merge in chunk order. The chunk
// boundaries never depend on the worker count, so results are bitwise
// reproducible at any parallelism.
struct PrefixPlan {
    double y = 0.0;
    std::uint64_t n_top = 0;
    std::uint64_t nchunks = 0;
    std::vector<std::pair<std::size_t, std::size_t>> cut_ranges;  // per chunk
    std::vector<ChunkResult> results;                             // per chunk
};

PrefixPlan make_plan(const ArithTable& table, double y,
                     std::span<const std::uint64_t> cutoffs) {
    PrefixPlan plan;
    plan.y = y;
    plan.n_top = cutoffs.empty() ? 0 : cutoffs.back();
    if (plan.n_top > table.n_max)
        throw RangeError("summation cutoff " + std::to_string(plan.n_top) +
                         " exceeds table n_max " + std::to_string(table.n_max));
    if (std::abs(y) > kMaxTwist)
        throw DomainError("|y| <= 1e6 supported (phase accuracy)");
    plan.nchunks = (plan.n_top + kChunk - 1) / kChunk;
    plan.cut_ranges.resize(static_cast<std::size_t>(plan.nchunks));
    plan.results.resize(static_cast<std::size_t>(plan.nchunks));
    std::size_t pos = 0;
    for (std::uint64_t c = 0; c < plan.nchunks; ++c) {
        const std::uint64_t hi = std::min(plan.n_top, (c + 1) * kChunk);
        const std::size_t begin = pos;
        while (pos < cutoffs.size() && cutoffs[pos] <= hi) ++pos;
        plan.cut_ranges[static_cast<std::size_t>(c)] = {begin, pos};
    }
    return plan;
}

void run_plan_chunk(const ArithTable& table, PrefixPlan& plan,
                    std::span<const std::uint64_t> cutoffs, std::uint64_t c) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, c * kChunk + 1);
    const std::uint64_t hi = std::min(plan.n_top, (c + 1) * kChunk);
    const auto [cb, ce] = plan.cut_ranges[static_cast<std::size_t>(c)];
    plan.results[static_cast<std::size_t>(c)] =
        sum_chunk(table.span(), plan.y, lo, hi,
                  std::span<const std::uint64_t>(cutoffs.data() + cb, ce - cb));
}

std::vector<complex> merge_plan(const PrefixPlan& plan, std::size_t n_cutoffs) {
    std::vector<complex> out(n_cutoffs);
    ComplexSum running;
    for (std::uint64_t c = 0; c < plan.nchunks; ++c) {
        const auto [cb, ce] = plan.cut_ranges[static_cast<std::size_t>(c)];
        for (std::size_t i = cb; i < ce; ++i) {
            ComplexSum at_cut = running;
            at_cut.combine(plan.results[static_cast<std::size_t>(c)].snapshots[i - cb]);
            out[i] = at_cut.value();
        }
        running.combine(plan.results[static_cast<std::size_t>(c)].total);
    }
    return out;
}

std::vector<complex> prefix_pass(const ArithTable& table, double y,
                                 std::span<const std::uint64_t> cutoffs, int threads) {
    if (cutoffs.empty()) return {};
    PrefixPlan plan = make_plan(table, y, cutoffs);

    int workers = threads == 0 ? static_cast<int>(std::thread::hardware_concurrency())
                               : threads;
    workers = std::clamp<int>(workers, 1, static_cast<int>(plan.nchunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < plan.nchunks; ++c)
            run_plan_chunk(table, plan, cutoffs, c);
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= plan.nchunks) return;
                run_plan_chunk(table, plan, cutoffs, c);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return merge_plan(plan, cutoffs.size());
}

std::vector<std::uint64_t> cutoffs_from_grid(std::span<const double> x_grid) {
    std::vector<std::uint64_t> cuts;
    cuts.reserve(x_grid.size());
    for (double x : x_grid)
        cuts.push_back(x < 1.0 ? 0 : static_cast<std::uint64_t>(std::floor(x)));
    return cuts;
}

void append_g17(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

complex twisted_sum(const ArithTable& table, double x, double y) {
    if (x > static_cast<double>(table.n_max))
        throw RangeError("twisted_sum: x exceeds table n_max");
    const double grid[1] = {x};
    return prefix_pass(table, y, cutoffs_from_grid(grid), 1)[0];
}

std::vector<complex> prefix_scan(const ArithTable& table, double y,
                                 std::span<const double> x_grid) {
    if (!std::is_sorted(x_grid.begin(), x_grid.end()))
        throw ArgumentError("prefix_scan: x_grid must be ascending");
    if (!x_grid.empty() && x_grid.back() > static_cast<double>(table.n_max))
        throw RangeError("prefix_scan: grid exceeds table n_max");
    return prefix_pass(table, y, cutoffs_from_grid(x_grid), 1);
}

ScanResult scan(const ScanSpec& spec, const ArithTable& table) {
    if (spec.x_grid.empty()) throw ArgumentError("scan: empty x grid");
    for (std::size_t i = 0; i + 1 < spec.x_grid.size(); ++i)
        if (!(spec.x_grid[i] < spec.x_grid[i + 1]))
            throw ArgumentError("scan: x_grid must be strictly ascending");
    if (spec.x_grid.front() < 2.0) throw ArgumentError("scan: x >= 2 required");
    if (spec.x_grid.back() > static_cast<double>(spec.n_max))
        throw ArgumentError("scan: max(x_grid) exceeds n_max");
    if (spec.n_max > table.n_max)
        throw ArgumentError("scan: table smaller than spec.n_max");

    // deterministic (y, x) order; duplicate y values collapse
    std::vector<double> ys = spec.y_list;
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    const MainTermSpec mt = MainTermSpec::make(spec.k, spec.family);
    const int expo = spec.k == 1 ? 2 : 2 * spec.k + 1;
    const auto cutoffs = cutoffs_from_grid(spec.x_grid);

    // one worker pool over the flat (y, chunk) task list; merges stay
    // sequential per y, so the records are identical for any worker count
    std::vector<PrefixPlan> plans;
    plans.reserve(ys.size());
    for (double y : ys) plans.push_back(make_plan(table, y, cutoffs));

    std::uint64_t total_tasks = 0;
    for (const PrefixPlan& p : plans) total_tasks += p.nchunks;
    int workers = spec.threads == 0
                      ? static_cast<int>(std::thread::hardware_concurrency())
                      : spec.threads;
    workers = std::clamp<int>(workers, 1, static_cast<int>(std::max<std::uint64_t>(
                                              1, total_tasks)));
    auto run_task = [&](std::uint64_t t) {
        for (PrefixPlan& p : plans) {
            if (t < p.nchunks) {
                run_plan_chunk(table, p, cutoffs, t);
                return;
            }
            t -= p.nchunks;
        }
    };
    if (workers <= 1 || total_tasks <= 1) {
        for (std::uint64_t t = 0; t < total_tasks; ++t) run_task(t);
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::uint64_t t = next.fetch_add(1);
                if (t >= total_tasks) return;
                run_task(t);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ScanResult result;
    result.records.reserve(ys.size() * spec.x_grid.size());
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        const double y = ys[yi];
        const auto prefix = merge_plan(plans[yi], cutoffs.size());
        for (std::size_t i = 0; i < spec.x_grid.size(); ++i) {
            TwistRecord rec;
            rec.x = spec.x_grid[i];
            rec.y = y;
            rec.psi = prefix[i];
            rec.main = main_term(mt, rec.x, y);
            rec.remainder = rec.psi - rec.main;
            const double ell = std::log(rec.x + std::abs(y));
            rec.normalized = std::abs(rec.remainder) /
                             (std::sqrt(rec.x) * std::pow(ell, expo));
            result.max_normalized = std::max(result.max_normalized, rec.normalized);
            result.records.push_back(rec);
        }
    }

    if (!spec.output_path.empty())
        write_scan_csv(spec, result, spec.output_path);
    return result;
}

ScanResult scan(const ScanSpec& spec) {
    const ArithTable table = build_table(Variant::of(spec.family, spec.k), spec.n_max);
    return scan(spec, table);
}

std::string scan_csv(const ScanSpec& spec, const ScanResult& result) {
    std::string out = "k,variant,x,y,psi_re,psi_im,main_re,main_im,r_re,r_im,normalized\n";
    for (const TwistRecord& r : result.records) {
        out += std::to_string(spec.k);
        out += ',';
        out += family_name(spec.family);
        for (double v : {r.x, r.y, r.psi.real(), r.psi.imag(), r.main.real(), r.main.imag(),
                         r.remainder.real(), r.remainder.imag(), r.normalized}) {
            out += ',';
            append_g17(out, v);
        }
        out += '\n';
    }
    return out;
}

void write_scan_csv(const ScanSpec& spec, const ScanResult& result,
                    const std::filesystem::path& path) {
    const std::string body = scan_csv(spec, result);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ResourceError("cannot open '" + tmp.string() + "' for writing");
        out.write(body.data(), static_cast<std::streamsize>(body.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw ResourceError("write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw ResourceError("rename to '" + path.string() + "' failed: " + ec.message());
}

}  // namespace mtl
