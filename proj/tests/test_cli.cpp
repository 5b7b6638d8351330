#include "xdeficit/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "xdeficit/deficit.hpp"

using namespace xdeficit;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("xdeficit_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream l(line);
        std::string cell;
        while (std::getline(l, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST(cli_compute, bell_state_record) {
    const Outcome r = run({"compute", "0", "0", "1", "-1", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json rec = json::parse(r.out);
    EXPECT_NEAR(rec["deficit"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(rec["s_rho"].get<double>(), 0.0, 1e-15);
    for (const char* key : {"deficit", "phi_star", "g_max", "s_rho", "method", "case_label", "side"}) {
        EXPECT_TRUE(rec.contains(key)) << key;
    }
    EXPECT_EQ(rec["side"], "measure_b");
}

TEST(cli_compute, bell_diagonal_value) {
    const Outcome r = run({"compute", "-p", "0", "0", "0.3", "0.2", "0.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json::parse(r.out)["deficit"].get<double>(), bell_diagonal_deficit(0.3, 0.2, 0.1), 1e-12);
}

TEST(cli_compute, object_input_and_options) {
    const Outcome obj = run({"compute", R"({"r3":0.3,"s3":0.4,"c1":0.2,"c2":0.1,"c3":0.25})", "--side", "a"});
    ASSERT_EQ(obj.code, 0) << obj.err;
    const json rec = json::parse(obj.out);
    EXPECT_EQ(rec["side"], "measure_a");
    EXPECT_DOUBLE_EQ(rec["deficit"].get<double>(),
                     deficit_exact({0.3, 0.4, 0.2, 0.1, 0.25}, Side::measure_a).deficit);

    const Outcome numeric = run({"compute", "-0.1", "0.1", "0.1", "0.05", "0.5", "--method", "numeric"});
    ASSERT_EQ(numeric.code, 0) << numeric.err;
    EXPECT_EQ(json::parse(numeric.out)["method"], "numeric");

    const Outcome closed = run({"compute", "-0.1", "0.1", "0.1", "0.05", "0.5", "--method", "closed"});
    ASSERT_EQ(closed.code, 0) << closed.err;
    EXPECT_EQ(json::parse(closed.out)["method"], "closed_form_case_i");
    EXPECT_EQ(json::parse(closed.out)["case_label"], "case_i");

    EXPECT_EQ(run({"compute", "0.3", "0.4", "0.2", "0.1", "0.25", "--method", "closed"}).code, cli::kUsage);
}

TEST(cli_compute, invalid_state_exit_code) {
    const Outcome r = run({"compute", "0.5", "-0.45", "0.2", "0.2", "0"});
    EXPECT_EQ(r.code, cli::kInvalidState);
    const json rec = json::parse(r.out);
    EXPECT_EQ(rec["error"], "invalid_state");
    EXPECT_NE(rec["reason"].get<std::string>().find("not positive semidefinite"), std::string::npos);
}

TEST(cli_compute, malformed_input) {
    EXPECT_EQ(run({"compute", "1", "2"}).code, cli::kUsage);
    EXPECT_EQ(run({"compute", "a", "0", "0", "0", "0"}).code, cli::kUsage);
    EXPECT_EQ(run({"compute", R"({"r3":0})"}).code, cli::kUsage);
    EXPECT_EQ(run({"compute", "{not json"}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"compute", "0", "0", "0", "0", "0", "--side", "c"}).code, cli::kUsage);
}

TEST(cli_verify, seeded_grid_reproduction_run) {
    const auto path = temp_path("verify.csv");
    const Outcome r = run({"verify", "--seed", "42", "--count", "1000", "--grid", "101x101", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err << r.out;
    const json summary = json::parse(r.out);
    EXPECT_EQ(summary["n"], 1000);
    EXPECT_LE(summary["max_diff_grid"].get<double>(), 1e-4);
    EXPECT_EQ(summary["failures"], 0);

    const std::string text = slurp(path);
    const auto rows = csv_rows(text);
    ASSERT_EQ(rows.size(), 1001u);
    EXPECT_EQ(rows[0][0], "r3");
    EXPECT_EQ(rows[0].back(), "error");
    EXPECT_NE(text.find("# n=1000,max_diff_grid="), std::string::npos);
    EXPECT_EQ(text.find('\r'), std::string::npos);
    std::filesystem::remove(path);
}

TEST(cli_verify, fixed_bell_diagonal_state) {
    const auto path = temp_path("verify_fixed.csv");
    const Outcome r = run({"verify", "-p", "0", "0", "0.3", "0.2", "0.1", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(slurp(path));
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_LE(std::stod(rows[1][9]), 1e-12);
    std::filesystem::remove(path);
}

TEST(cli_verify, breach_and_io_errors) {
    const auto path = temp_path("verify_breach.csv");
    const Outcome breach = run({"verify", "--count", "5", "--tolerance", "0", "--out", path.string()});
    EXPECT_EQ(breach.code, cli::kToleranceBreach);
    EXPECT_EQ(csv_rows(slurp(path)).size(), 6u);
    std::filesystem::remove(path);

    EXPECT_EQ(run({"verify", "--count", "2", "--out", "/nonexistent_dir/x.csv"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--count", "2", "--grid", "1x5"}).code, cli::kUsage);
    EXPECT_EQ(run({"verify", "--count", "2", "--grid", "banana"}).code, cli::kUsage);
}

TEST(cli_sweep, bell_diagonal_row) {
    const Outcome r =
        run({"sweep", "-p", "0", "0", "0.3", "0.2", "0", "--vary", "c3", "--from", "-0.5", "--to", "0.5", "--steps", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 12u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"c3", "deficit", "phi_star", "case_label", "valid"}));
    EXPECT_EQ(std::stod(rows[6][0]), 0.0);
    EXPECT_NEAR(std::stod(rows[6][1]), bell_diagonal_deficit(0.3, 0.2, 0.0), 1e-12);
}

TEST(cli_sweep, invalid_rows_are_flagged_and_endpoints_exact) {
    const Outcome r =
        run({"sweep", "-p", "0.5", "0", "0.2", "0.2", "0", "--vary", "s3", "--from", "-0.6", "--to", "0.6", "--steps", "13"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 14u);
    int invalid = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        invalid += rows[i][4] == "0";
        if (rows[i][4] == "0") EXPECT_EQ(rows[i][1], "nan");
    }
    EXPECT_GT(invalid, 0);
    EXPECT_LT(invalid, 13);

    const Outcome two = run({"sweep", "-p", "0", "0", "0.3", "0.2", "0", "--vary", "c1", "--from", "0.1", "--to",
                             "0.35", "--steps", "2"});
    const auto ends = csv_rows(two.out);
    ASSERT_EQ(ends.size(), 3u);
    EXPECT_EQ(ends[1][0], cli::format_number(0.1));
    EXPECT_EQ(ends[2][0], cli::format_number(0.35));

    EXPECT_EQ(run({"sweep", "-p", "0", "0", "0", "0", "0", "--vary", "c1", "--from", "0", "--to", "1", "--steps", "1"})
                  .code,
              cli::kUsage);
}

TEST(cli_sweep, rows_round_trip) {
    const Outcome r =
        run({"sweep", "-p", "0.1", "0.2", "0.3", "0.2", "0", "--vary", "c3", "--from", "-0.4", "--to", "0.4", "--steps", "9"});
    ASSERT_EQ(r.code, 0);
    const auto rows = csv_rows(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double c3 = std::stod(rows[i][0]);
        const DeficitResult d = deficit_exact({0.1, 0.2, 0.3, 0.2, c3});
        ASSERT_NEAR(std::stod(rows[i][1]), d.deficit, 1e-12);
        ASSERT_NEAR(std::stod(rows[i][2]), d.phi_star, 1e-12);
    }
}

TEST(cli_gcurve, curves) {
    const auto zero = csv_rows(run({"gcurve", "0", "0", "0", "0", "0"}).out);
    ASSERT_EQ(zero.size(), 102u);
    for (std::size_t i = 1; i < zero.size(); ++i) ASSERT_EQ(std::stod(zero[i][1]), 0.0);

    const auto bell = csv_rows(run({"gcurve", "0", "0", "1", "-1", "1", "--steps", "101"}).out);
    for (std::size_t i = 1; i < bell.size(); ++i) ASSERT_NEAR(std::stod(bell[i][1]), 1.0, 1e-15);

    const Outcome case_i = run({"gcurve", "-0.1", "0.1", "0.1", "0.05", "0.5"});
    ASSERT_EQ(case_i.code, 0);
    EXPECT_NE(case_i.out.find("# argmax=1,max="), std::string::npos);

    EXPECT_EQ(run({"gcurve", "0.5", "-0.45", "0.2", "0.2", "0"}).code, cli::kInvalidState);
}

TEST(cli, output_is_deterministic) {
    const std::vector<std::string> args{"verify", "--count", "30", "--seed", "7", "--su2-samples", "100"};
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}

TEST(cli, number_format) {
    EXPECT_EQ(cli::format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(cli::format_number(1.0 / 3.0)), 1.0 / 3.0);
    EXPECT_EQ(cli::format_number(std::nan("")), "nan");
}
