#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "fef/state_io.hpp"
#include "fef/sweeps.hpp"

using namespace fef;

TEST_CASE("threshold sweep geometry") {
    const ThresholdSweep sweep = sweep_thresholds(100);
    REQUIRE(sweep.rows.size() == 101);
    CHECK(sweep.rows.front().x == 0.0);
    CHECK(sweep.rows.back().x == 1.0);
    CHECK(sweep.rows[50].x == 0.5);

    // both curves equal 7/27 + (4/27)(2x-1)^2 - 1/3 for this family
    for (const ThresholdRow& row : sweep.rows) {
        const double t = 2.0 * row.x - 1.0;
        const double expected = 7.0 / 27.0 + (4.0 / 27.0) * t * t - 1.0 / 3.0;
        CHECK(row.fidelity_minus_third ==
              doctest::Approx(expected).epsilon(1e-10));
        CHECK(row.bound_minus_third ==
              doctest::Approx(expected).epsilon(1e-10));
    }

    // mirror symmetry x <-> 1-x
    for (size_t k = 0; k < sweep.rows.size(); ++k) {
        const ThresholdRow& a = sweep.rows[k];
        const ThresholdRow& b = sweep.rows[sweep.rows.size() - 1 - k];
        CHECK(std::abs(a.fidelity_minus_third - b.fidelity_minus_third) < 1e-9);
        CHECK(std::abs(a.bound_minus_third - b.bound_minus_third) < 1e-9);
    }

    // endpoints sit above the threshold, the middle below
    CHECK(sweep.rows.front().fidelity_minus_third > 0.0);
    CHECK(sweep.rows.back().fidelity_minus_third > 0.0);
    CHECK(sweep.rows[50].fidelity_minus_third < 0.0);
}

TEST_CASE("threshold crossings at (2 -/+ sqrt(2))/4") {
    const ThresholdSweep sweep = sweep_thresholds(200);
    REQUIRE(sweep.crossings.size() == 4);  // two per curve

    const double lo = (2.0 - std::sqrt(2.0)) / 4.0;
    const double hi = (2.0 + std::sqrt(2.0)) / 4.0;
    int fid_count = 0, bnd_count = 0;
    for (const ThresholdCrossing& c : sweep.crossings) {
        const bool near_lo = std::abs(c.x - lo) < 1e-4;
        const bool near_hi = std::abs(c.x - hi) < 1e-4;
        CHECK((near_lo || near_hi));
        if (c.curve == "fidelity_minus_third") ++fid_count;
        if (c.curve == "bound_minus_third") ++bnd_count;
    }
    CHECK(fid_count == 2);
    CHECK(bnd_count == 2);
}

TEST_CASE("w tradeoff sweep geometry") {
    const std::vector<WTradeoffRow> rows = sweep_w_tradeoff(50);
    REQUIRE(rows.size() == 51);
    CHECK(rows.front().gamma == 0.0);
    CHECK(rows.back().gamma == 1.0);

    for (const WTradeoffRow& row : rows) {
        CHECK(row.fef_n >= 0.0);
        CHECK(row.fef_n <= row.bound + 1e-9);
    }

    // gamma = 1: |psi> = |001>, AB side is the pure product |00>
    CHECK(rows.back().fef_n == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rows.back().bound == doctest::Approx(1.0).epsilon(1e-12));

    // gamma = 0.9 leaves a visible gap below the bound
    const std::vector<WTradeoffRow> fine = sweep_w_tradeoff(100);
    const WTradeoffRow& g09 = fine[90];
    CHECK(g09.gamma == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(g09.bound == doctest::Approx(0.62).epsilon(1e-12));
    CHECK(g09.bound - g09.fef_n > 0.5);
}

TEST_CASE("csv formatting is exact and stable") {
    CHECK(format_g17(0.5) == "0.5");
    CHECK(format_g17(1.0 / 3.0) == "0.33333333333333331");
    CHECK(format_g17(-2.0 / 27.0) == "-0.07407407407407407");

    ThresholdSweep sweep;
    sweep.rows.push_back({0.0, 1.0 / 3.0, -2.0 / 27.0});
    const std::string csv = threshold_csv(sweep);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,fidelity_minus_third,bound_minus_third");
    std::getline(lines, line);
    CHECK(line == "0,0.33333333333333331,-0.07407407407407407");

    std::vector<WTradeoffRow> rows;
    rows.push_back({0.25, 0.125, 0.5});
    CHECK(w_tradeoff_csv(rows) == "gamma,fef_n,bound\n0.25,0.125,0.5\n");

    // byte-identical across repeated generation
    CHECK(threshold_csv(sweep_thresholds(40)) ==
          threshold_csv(sweep_thresholds(40)));
    CHECK(w_tradeoff_csv(sweep_w_tradeoff(40)) ==
          w_tradeoff_csv(sweep_w_tradeoff(40)));
}

TEST_CASE("step count validation") {
    for (int bad : {1, 0, -3}) {
        CHECK_THROWS_AS(sweep_thresholds(bad), Error);
        CHECK_THROWS_AS(sweep_w_tradeoff(bad), Error);
    }
    try {
        sweep_thresholds(1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfRange);
    }
}

TEST_CASE("text files land atomically") {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() /
        ("fef_sweep_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string path = (dir / "out.csv").string();

    write_text_file(path, "a,b\n1,2\n");
    write_text_file(path, "a,b\n3,4\n");  // replaces
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "a,b\n3,4\n");
    CHECK_FALSE(fs::exists(path + ".tmp"));

    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/out.csv", "x"), IoError);
    std::error_code ec;
    fs::remove_all(dir, ec);
}
