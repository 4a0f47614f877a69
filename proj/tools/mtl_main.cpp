// mtl: numerical laboratory for twisted von Mangoldt sums and their
// residue main terms. Subcommands: sieve, table-dump, sum, main-term,
// scan, verify, zeros-audit.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "mtl/arith.hpp"
#include "mtl/errors.hpp"
#include "mtl/laurent.hpp"
#include "mtl/mainterm.hpp"
#include "mtl/special.hpp"
#include "mtl/table_io.hpp"
#include "mtl/twist.hpp"
#include "mtl/verify.hpp"
#include "mtl/zeros.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "a", "a+bi", "a-bi"
mtl::complex parse_complex(const std::string& text) {
    const std::size_t ipos = text.find('i');
    if (ipos == std::string::npos) {
        std::size_t used = 0;
        const double re = std::stod(text, &used);
        if (used != text.size()) throw mtl::ArgumentError("bad number '" + text + "'");
        return {re, 0.0};
    }
    if (ipos + 1 != text.size())
        throw mtl::ArgumentError("bad complex number '" + text + "'");
    // split at the last +/- that is not an exponent sign or leading
    std::size_t split = std::string::npos;
    for (std::size_t p = text.size() - 1; p > 0; --p) {
        const char c = text[p];
        if ((c == '+' || c == '-') && text[p - 1] != 'e' && text[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string::npos)
        throw mtl::ArgumentError("bad complex number '" + text + "'");
    const double re = std::stod(text.substr(0, split));
    std::string imtext = text.substr(split, ipos - split);
    if (imtext == "+") imtext = "1";
    if (imtext == "-") imtext = "-1";
    return {re, std::stod(imtext)};
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty()) throw mtl::ArgumentError("empty element in list '" + text + "'");
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size())
            throw mtl::ArgumentError("bad number '" + item + "' in list");
        pos = comma + 1;
    }
    return out;
}

// "geometric:LO:HI:COUNT" or a plain comma list; geometric grid points are
// rounded to integers before use as summation cutoffs.
std::vector<double> parse_x_grid(const std::string& text, bool* had_duplicates) {
    std::vector<double> grid;
    if (text.rfind("geometric:", 0) == 0) {
        const std::string rest = text.substr(10);
        double lo = 0, hi = 0;
        long count = 0;
        if (std::sscanf(rest.c_str(), "%lf:%lf:%ld", &lo, &hi, &count) != 3)
            throw mtl::ArgumentError("bad grid spec '" + text +
                                     "' (expected geometric:LO:HI:COUNT)");
        if (!(lo >= 2.0) || !(hi >= lo) || count < 1)
            throw mtl::ArgumentError("bad geometric grid bounds");
        for (long i = 0; i < count; ++i) {
            const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
            grid.push_back(std::round(lo * std::pow(hi / lo, t)));
        }
    } else {
        grid = parse_double_list(text);
    }
    std::sort(grid.begin(), grid.end());
    const auto last = std::unique(grid.begin(), grid.end());
    if (had_duplicates) *had_duplicates = last != grid.end();
    grid.erase(last, grid.end());
    return grid;
}

struct Options {
    std::string cache_dir = ".mtl-cache";
    int threads = 0;
    int verbosity = 0;
};

mtl::ArithTable table_from_cache(const mtl::Variant& v, std::uint64_t n_max,
                                 const Options& opt, bool* hit = nullptr) {
    std::string note;
    mtl::ArithTable t = mtl::cached_table(v, n_max, opt.cache_dir, hit, &note);
    if (!note.empty()) std::cerr << "warning: " << note << "\n";
    return t;
}

int run(int argc, char** argv) {
    CLI::App app{"numerical laboratory for twisted von Mangoldt sums"};
    app.require_subcommand(1);
    app.set_config("--config", "", "plain key=value configuration file");

    Options opt;
    app.add_option("--cache", opt.cache_dir,
                   "table cache directory (MTL_CACHE_DIR overrides config-file value)")
        ->capture_default_str();
    app.add_option("--threads", opt.threads,
                   "worker threads for scans and sieves (0: machine parallelism)")
        ->capture_default_str();
    app.add_flag("-v,--verbose", opt.verbosity, "more progress output");

    // global flags (--cache, --threads) may also be given after a subcommand
    app.fallthrough();

    // ---- sieve ----
    auto* sieve = app.add_subcommand("sieve", "build and cache an arithmetic table");
    std::string sieve_variant;
    int sieve_k = 0;
    std::uint64_t sieve_nmax = 0;
    sieve->add_option("--variant", sieve_variant,
                      "vonmangoldt | moebius | conv | gen | log")
        ->required();
    sieve->add_option("--k", sieve_k, "order for conv/gen variants");
    sieve->add_option("--nmax", sieve_nmax, "table size")->required();

    // ---- table-dump ----
    auto* dump = app.add_subcommand("table-dump", "write a table as CSV of n,value");
    std::string dump_variant, dump_file;
    int dump_k = 0;
    std::uint64_t dump_nmax = 0;
    dump->add_option("--file", dump_file, "dump an existing cache file");
    dump->add_option("--variant", dump_variant, "vonmangoldt | moebius | conv | gen | log");
    dump->add_option("--k", dump_k, "order for conv/gen variants");
    dump->add_option("--nmax", dump_nmax, "table size");

    // ---- sum ----
    auto* sum = app.add_subcommand("sum", "evaluate one twisted sum Psi(x, y)");
    int sum_k = 1;
    std::string sum_variant = "conv";
    double sum_x = 0, sum_y = 0;
    std::uint64_t sum_nmax = 0;
    sum->add_option("--k", sum_k, "convolution/generalization order")->required();
    sum->add_option("--variant", sum_variant, "conv | gen")->required();
    sum->add_option("--x", sum_x, "summation limit")->required();
    sum->add_option("--y", sum_y, "twist")->required();
    sum->add_option("--nmax", sum_nmax, "table size (default: ceil(x))");

    // ---- main-term ----
    auto* mterm = app.add_subcommand("main-term", "evaluate the residue main term");
    int mt_k = 1;
    std::string mt_variant = "conv";
    double mt_x = 0, mt_y = 0;
    mterm->add_option("--k", mt_k)->required();
    mterm->add_option("--variant", mt_variant, "conv | gen")->required();
    mterm->add_option("--x", mt_x)->required();
    mterm->add_option("--y", mt_y)->required();

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "twisted sums over an (x, y) grid, CSV out");
    int scan_k = 1;
    std::string scan_variant, scan_grid, scan_ylist, scan_out;
    std::uint64_t scan_nmax = 0;
    scan->add_option("--k", scan_k)->required();
    scan->add_option("--variant", scan_variant, "conv | gen")->required();
    scan->add_option("--x-grid", scan_grid, "geometric:LO:HI:COUNT or comma list")
        ->required();
    scan->add_option("--y", scan_ylist, "comma-separated twist values")->required();
    scan->add_option("--nmax", scan_nmax, "table size (default: ceil(max x))");
    scan->add_option("--out", scan_out, "CSV output path (default: stdout)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a module verification suite");
    std::string verify_suite, verify_zeros_path;
    verify
        ->add_option("--suite", verify_suite,
                     "arith | laurent | mainterm | special | zeros | all")
        ->required();
    verify->add_option("--zeros", verify_zeros_path, "zeros file (zeros/all suites)");

    // ---- zeros-audit ----
    auto* audit = app.add_subcommand("zeros-audit", "partial-fraction audit at chosen points");
    std::string audit_zeros, audit_points = "2,2.5,3,2+10i,2+20i";
    audit->add_option("--zeros", audit_zeros, "zeros file")->required();
    audit->add_option("--points", audit_points, "comma list of s values (a+bi)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    // precedence: --cache flag, then MTL_CACHE_DIR, then config file, then default
    bool cache_flag_given = false;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--cache" || a.rfind("--cache=", 0) == 0) cache_flag_given = true;
    }
    if (!cache_flag_given)
        if (const char* env = std::getenv("MTL_CACHE_DIR")) opt.cache_dir = env;

    if (sieve->parsed()) {
        const mtl::Variant v = mtl::parse_variant(sieve_variant, sieve_k);
        if ((v.tag == mtl::VariantTag::ConvPower || v.tag == mtl::VariantTag::Generalized) ==
            false &&
            sieve_k != 0)
            throw mtl::ArgumentError("variant '" + sieve_variant + "' takes no --k");
        bool hit = false;
        table_from_cache(v, sieve_nmax, opt, &hit);
        const fs::path file = fs::path(opt.cache_dir) / mtl::cache_file_name(v, sieve_nmax);
        std::cout << (hit ? "cache hit " : "built ") << file.string() << "\n";
        return kExitOk;
    }

    if (dump->parsed()) {
        mtl::ArithTable t;
        if (!dump_file.empty()) {
            t = mtl::load_table(dump_file);
        } else {
            if (dump_variant.empty() || dump_nmax == 0)
                throw mtl::ArgumentError("table-dump needs --file or --variant/--nmax");
            t = table_from_cache(mtl::parse_variant(dump_variant, dump_k), dump_nmax, opt);
        }
        std::string out = "n,value\n";
        for (std::uint64_t n = 1; n <= t.n_max; ++n) {
            out += std::to_string(n);
            out += ',';
            out += g17(t.values[n]);
            out += '\n';
            if (out.size() > (1u << 20)) {
                std::cout << out;
                out.clear();
            }
        }
        std::cout << out;
        return kExitOk;
    }

    if (sum->parsed()) {
        const std::uint64_t n_max =
            sum_nmax ? sum_nmax : static_cast<std::uint64_t>(std::ceil(sum_x));
        const mtl::ArithTable t =
            table_from_cache(mtl::Variant::of(mtl::parse_family(sum_variant), sum_k),
                             n_max, opt);
        const mtl::complex psi = mtl::twisted_sum(t, sum_x, sum_y);
        std::cout << g17(psi.real()) << " " << g17(psi.imag()) << "\n";
        return kExitOk;
    }

    if (mterm->parsed()) {
        const mtl::MainTermSpec spec =
            mtl::MainTermSpec::make(mt_k, mtl::parse_family(mt_variant));
        const mtl::complex m = mtl::main_term(spec, mt_x, mt_y);
        char buf[80];
        std::snprintf(buf, sizeof buf, "%.15g %.15g", m.real(), m.imag());
        std::cout << buf << "\n";
        return kExitOk;
    }

    if (scan->parsed()) {
        bool dup_x = false;
        mtl::ScanSpec spec;
        spec.k = scan_k;
        spec.family = mtl::parse_family(scan_variant);
        spec.x_grid = parse_x_grid(scan_grid, &dup_x);
        if (dup_x) std::cerr << "warning: duplicate x grid points merged\n";
        std::vector<double> ys = parse_double_list(scan_ylist);
        std::sort(ys.begin(), ys.end());
        if (std::unique(ys.begin(), ys.end()) != ys.end())
            std::cerr << "warning: duplicate y values deduplicated\n";
        spec.y_list = ys;  // scan() dedups
        spec.n_max = scan_nmax
                         ? scan_nmax
                         : static_cast<std::uint64_t>(std::ceil(
                               spec.x_grid.empty() ? 2.0 : spec.x_grid.back()));
        spec.threads = opt.threads;

        const mtl::ArithTable t =
            table_from_cache(mtl::Variant::of(spec.family, spec.k), spec.n_max, opt);
        spec.output_path = scan_out;  // scan() writes atomically when set
        const mtl::ScanResult result = mtl::scan(spec, t);
        if (scan_out.empty()) std::cout << mtl::scan_csv(spec, result);
        std::cerr << "rows: " << result.records.size()
                  << "  max normalized remainder: " << g17(result.max_normalized) << "\n";
        return kExitOk;
    }

    if (verify->parsed()) {
        const bool want_zeros = verify_suite == "zeros" || verify_suite == "all";
        if (want_zeros && verify_zeros_path.empty())
            throw mtl::ArgumentError("verify: --zeros PATH required for suite '" +
                                     verify_suite + "'");
        int failures = 0;
        bool ran = false;
        const auto run_suite = [&](const std::string& name,
                                   std::vector<mtl::CheckResult> (*fn)()) {
            if (verify_suite == name || verify_suite == "all") {
                failures += mtl::report(fn(), std::cout);
                ran = true;
            }
        };
        run_suite("arith", mtl::verify_arith);
        run_suite("laurent", mtl::verify_laurent);
        run_suite("mainterm", mtl::verify_mainterm);
        run_suite("special", mtl::verify_special);
        if (want_zeros) {
            const mtl::ZeroTable zt = mtl::load_zeros(verify_zeros_path);
            failures += mtl::report(mtl::verify_zeros(zt), std::cout);
            ran = true;
        }
        if (!ran)
            throw mtl::ArgumentError("unknown suite '" + verify_suite + "'");
        if (verify_suite == "laurent" || verify_suite == "all")
            mtl::print_alpha_tables(std::cout);
        return failures == 0 ? kExitOk : kExitCheckFailure;
    }

    if (audit->parsed()) {
        const mtl::ZeroTable zt = mtl::load_zeros(audit_zeros);
        std::vector<mtl::complex> points;
        {
            std::size_t pos = 0;
            while (pos < audit_points.size()) {
                std::size_t comma = audit_points.find(',', pos);
                if (comma == std::string::npos) comma = audit_points.size();
                points.push_back(parse_complex(audit_points.substr(pos, comma - pos)));
                pos = comma + 1;
            }
        }
        std::cout << "s_re,s_im,b_re,b_im,tail_estimate\n";
        std::vector<mtl::complex> bs;
        for (mtl::complex s : points) {
            const auto r = mtl::zero_sum_linear(zt, s);
            bs.push_back(r.b_estimate);
            std::cout << g17(s.real()) << ',' << g17(s.imag()) << ',' << g17(r.b_estimate.real())
                      << ',' << g17(r.b_estimate.imag()) << ',' << g17(r.tail_estimate) << "\n";
        }
        mtl::complex mean = 0.0;
        for (auto b : bs) mean += b;
        mean /= static_cast<double>(bs.size());
        double var = 0.0;
        for (auto b : bs) var += std::norm(b - mean);
        std::cerr << "zeros: " << zt.count() << "  b sd: "
                  << g17(std::sqrt(var / static_cast<double>(bs.size()))) << "\n";
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mtl::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const mtl::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const mtl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
