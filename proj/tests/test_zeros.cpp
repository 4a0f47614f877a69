#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "mtl/special.hpp"
#include "mtl/zeros.hpp"
#include "test_util.hpp"

using namespace mtl;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
    const auto dir = std::filesystem::temp_directory_path() / "mtl_zeros_test";
    std::filesystem::create_directories(dir);
    const auto p = dir / name;
    std::ofstream out(p);
    out << body;
    return p;
}

ZeroTable bundled_zeros() {
    return load_zeros(testutil::data_dir() / "zeros200.txt");
}

}  // namespace

TEST_CASE("zero table parsing") {
    SUBCASE("three known ordinates") {
        const auto p = write_temp("three.txt", "14.134725\n21.022040\n25.010858\n");
        const ZeroTable t = load_zeros(p);
        CHECK(t.count() == 3);
        CHECK(t.ordinates[0] == doctest::Approx(14.134725));
        CHECK(t.ordinates[2] == doctest::Approx(25.010858));
    }
    SUBCASE("comments and blank lines are ignored") {
        const auto p = write_temp("comments.txt",
                                  "# header\n\n14.134725\n# mid\n21.022040\n");
        CHECK(load_zeros(p).count() == 2);
    }
    SUBCASE("empty file is a valid empty table") {
        const auto p = write_temp("empty.txt", "");
        CHECK(load_zeros(p).count() == 0);
    }
    SUBCASE("descending pair is a parse error with the line number") {
        const auto p = write_temp("descending.txt", "21.0\n14.9\n");
        CHECK_THROWS_AS(load_zeros(p), FormatError);
        try {
            load_zeros(p);
        } catch (const FormatError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("non-numeric line is a parse error") {
        const auto p = write_temp("garbage.txt", "14.2\nfoo\n");
        CHECK_THROWS_AS(load_zeros(p), FormatError);
    }
    SUBCASE("first ordinate at or below 14 fails validation") {
        const auto p = write_temp("low.txt", "13.9\n21.0\n");
        CHECK_THROWS_AS(load_zeros(p), ValidationError);
    }
    SUBCASE("missing file is a resource error") {
        CHECK_THROWS_AS(load_zeros("/definitely/not/here.txt"), ResourceError);
    }
    SUBCASE("bundled table loads and is ascending") {
        const ZeroTable t = bundled_zeros();
        REQUIRE(t.count() == 200);
        CHECK(t.ordinates.front() == doctest::Approx(14.134725141734694));
    }
}

TEST_CASE("linear zero sum and the constant-B audit") {
    const ZeroTable zeros = bundled_zeros();
    const ZeroTable first100 = zeros.head(100);

    SUBCASE("b_estimate is stable between s = 2 and s = 3") {
        const auto a = zero_sum_linear(first100, complex(2.0, 0.0));
        const auto b = zero_sum_linear(first100, complex(3.0, 0.0));
        CHECK(std::abs(a.b_estimate - b.b_estimate) <= 0.05);
    }
    SUBCASE("standard deviation over the five audit points") {
        const std::vector<complex> pts{
            {2.0, 0.0}, {2.5, 0.0}, {3.0, 0.0}, {2.0, 10.0}, {2.0, 20.0}};
        std::vector<complex> bs;
        for (auto s : pts) bs.push_back(zero_sum_linear(first100, s).b_estimate);
        complex mean = 0.0;
        for (auto b : bs) mean += b;
        mean /= 5.0;
        double var = 0.0;
        for (auto b : bs) var += std::norm(b - mean);
        CHECK(std::sqrt(var / 5.0) <= 0.05);
    }
    SUBCASE("doubling the zero count moves b_estimate less than the tail estimate") {
        for (complex s : {complex(2.0, 0.0), complex(3.0, 0.0), complex(2.0, 20.0)}) {
            const auto small = zero_sum_linear(first100, s);
            const auto big = zero_sum_linear(zeros, s);
            CHECK(std::abs(big.b_estimate - small.b_estimate) <= small.tail_estimate);
        }
    }
    SUBCASE("empty table reduces to the zero-free part") {
        ZeroTable empty;
        const auto r = zero_sum_linear(empty, complex(2.0, 0.0));
        CHECK(r.sum == complex(0.0, 0.0));
        const auto zd = zeta_derivatives(complex(2.0, 0.0), 1);
        const complex want = zd[1] / zd[0] - 0.5 * std::log(M_PI) + 1.0 +
                             0.5 * digamma(complex(2.0, 0.0));
        CHECK(std::abs(r.b_estimate - want) <= 1e-12);
    }
    SUBCASE("conjugate symmetry") {
        const complex s(2.0, 7.0);
        const auto a = zero_sum_linear(zeros, s);
        const auto b = zero_sum_linear(zeros, std::conj(s));
        CHECK(std::abs(a.sum - std::conj(b.sum)) <= 1e-13);
        CHECK(std::abs(a.b_estimate - std::conj(b.b_estimate)) <= 1e-10);
    }
    SUBCASE("domain guards") {
        CHECK_THROWS_AS(zero_sum_linear(zeros, complex(1.0, 0.0)), DomainError);
        CHECK_THROWS_AS(zero_sum_linear(zeros, complex(5.0, 0.0)), DomainError);
    }
}

TEST_CASE("power zero sum") {
    const ZeroTable zeros = bundled_zeros();

    SUBCASE("Cauchy property of the truncation at s = 2") {
        const auto s50 = zero_sum_power(zeros.head(50), 2, complex(2.0, 0.0));
        const auto s100 = zero_sum_power(zeros.head(100), 2, complex(2.0, 0.0));
        double bound = 0.0;
        for (std::size_t j = 50; j < 100; ++j)
            bound += 4.0 / (zeros.ordinates[j] * zeros.ordinates[j]);
        CHECK(std::abs(s100.sum - s50.sum) <= bound);
        // and the full-table tail estimate covers the remaining drift
        CHECK(std::abs(zero_sum_power(zeros, 2, complex(2.0, 0.0)).sum - s100.sum) <=
              s100.tail_estimate);
    }
    SUBCASE("empty table sums to zero") {
        ZeroTable empty;
        CHECK(zero_sum_power(empty, 2, complex(1.5, 0.0)).sum == complex(0.0, 0.0));
    }
    SUBCASE("conjugate symmetry") {
        const complex s(1.2, 40.0);
        const auto a = zero_sum_power(zeros, 3, s);
        const auto b = zero_sum_power(zeros, 3, std::conj(s));
        CHECK(std::abs(a.sum - std::conj(b.sum)) <= 1e-13);
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(zero_sum_power(zeros, 1, complex(1.5, 0.0)), ArgumentError);
        CHECK_THROWS_AS(zero_sum_power(zeros, 2, complex(3.0, 0.0)), DomainError);
    }
}
