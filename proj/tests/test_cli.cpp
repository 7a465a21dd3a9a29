// Expression grammar and the command-line surface.
#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>

#include "eigenseq/cli.hpp"
#include "eigenseq/expr.hpp"
#include "golden_runner.hpp"
#include "support.hpp"

using namespace eigenseq;

namespace {

const std::filesystem::path kGoldenDir = std::filesystem::path(EIGENSEQ_SOURCE_DIR) / "tests" / "golden";

std::size_t error_column(std::string_view text) {
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return 0;
}

}  // namespace

TEST(Grammar, Factors) {
    EXPECT_EQ(parse_expr("R^2∘STIRLING").factors, (std::vector<Factor>{{Op::R, 2}, {Op::stirling, 1}}));
    EXPECT_EQ(parse_expr("M^-1∘EULER").factors, (std::vector<Factor>{{Op::M, -1}, {Op::euler, 1}}));
    EXPECT_EQ(classify(parse_expr("M^-1∘EULER")).kind, EigenKind::doubling);
    EXPECT_EQ(parse_expr("R o BINOMIAL . CONV^+2").factors, (std::vector<Factor>{{Op::R, 1}, {Op::binomial, 1}, {Op::conv, 2}}));
}

TEST(Grammar, Aliases) {
    EXPECT_EQ(parse_expr("MÖBIUS"), parse_expr("MOBIUS"));
    EXPECT_EQ(parse_expr("MOBIUS-INV"), parse_expr("MOBIUS^-1"));
    EXPECT_EQ(parse_expr("MOBIUS-INV^2"), parse_expr("MOBIUS^-2"));
    EXPECT_EQ(to_string(parse_expr("M^-1 o MÖBIUS-INV")), "M^-1∘MOBIUS^-1");
}

TEST(Grammar, ErrorsCarryColumns) {
    EXPECT_EQ(error_column("R∘∘X"), 3u);
    EXPECT_EQ(error_column(""), 1u);
    EXPECT_EQ(error_column("R∘FOO"), 3u);
    EXPECT_EQ(error_column("R∘CONV^-1"), 3u);
    EXPECT_EQ(error_column("BINOMIAL^0"), 10u);
    EXPECT_EQ(error_column("BINOMIAL^"), 10u);
    EXPECT_EQ(error_column("R∘"), 3u);
    EXPECT_EQ(error_column("R BINOMIAL"), 3u);
    // M^-1 only as the leading equation marker
    EXPECT_EQ(error_column("M^-1"), 1u);
    EXPECT_EQ(error_column("R∘M^-1∘BINOMIAL"), 3u);
    // CONV acts at offset 0, EULER at offset 1
    EXPECT_EQ(error_column("CONV∘EULER"), 6u);
    try {
        parse_expr("R∘∘X");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("offset 3"), std::string::npos);
    }
}

TEST(Grammar, PrintParseRoundtrip) {
    oracle::Random rng(401);
    const std::vector<Op> offset0 = {Op::R, Op::L, Op::N, Op::M, Op::binomial, Op::stirling, Op::conv, Op::exp_conv, Op::lcm_conv,
                                     Op::gcd_conv, Op::and_conv, Op::or_conv, Op::xor_conv};
    const std::vector<Op> offset1 = {Op::R, Op::L, Op::N, Op::M, Op::binomial, Op::stirling, Op::mobius, Op::weigh,
                                     Op::euler, Op::partition, Op::invert, Op::revert, Op::exp};
    for (int i = 0; i < 200; ++i) {
        const auto& pool = i % 2 ? offset1 : offset0;
        TransformExpr e;
        const long len = rng.integer(1, 5);
        for (long j = 0; j < len; ++j) {
            const Op op = pool[static_cast<std::size_t>(rng.integer(0, static_cast<long>(pool.size()) - 1))];
            long p = rng.integer(1, 3);
            if (op_info(op).invertible && rng.integer(0, 1)) p = -p;
            e.factors.push_back({op, p});
        }
        if (rng.integer(0, 3) == 0 && len > 1) e.factors.front() = {Op::M, -1};
        EXPECT_EQ(parse_expr(to_string(e)), e) << to_string(e);
    }
}

TEST(Cli, TermsFile) {
    const auto path = std::filesystem::temp_directory_path() / "eigenseq_terms.txt";
    {
        std::ofstream f(path);
        f << "1\n1\n1\n1\n";
    }
    std::ostringstream out, err;
    EXPECT_EQ(run_command({"transform", "BINOMIAL^2", "--terms-file", path.string()}, out, err), kExitOk);
    EXPECT_EQ(out.str(), "1,3,9,27\n");
    std::filesystem::remove(path);
}

TEST(Cli, DefaultOffsetIsNative) {
    std::ostringstream out, err;
    EXPECT_EQ(run_command({"transform", "STIRLING", "--terms", "1,1,1,1,1"}, out, err), kExitOk);
    EXPECT_EQ(out.str(), "1,2,5,15,52\n");
    std::ostringstream out2;
    EXPECT_EQ(run_command({"transform", "CONV", "--terms", "1,1", "--offset", "1"}, out2, err), kExitUsage);
}

TEST(Cli, UsageErrors) {
    std::ostringstream out, err;
    EXPECT_EQ(run_command({"transform", "BINOMIAL"}, out, err), kExitUsage);
    EXPECT_EQ(run_command({"eigen", "R∘BINOMIAL"}, out, err), kExitUsage);
    EXPECT_EQ(run_command({"eigen", "BINOMIAL", "-n", "4"}, out, err), kExitUsage);
    EXPECT_EQ(run_command({"transform", "BINOMIAL", "--terms", "1,2/4"}, out, err), kExitUsage);
    EXPECT_EQ(run_command({"transform", "BINOMIAL", "--terms", "1", "--json", "--bfile"}, out, err), kExitUsage);
    EXPECT_EQ(run_command({"verify"}, out, err), kExitUsage);
    EXPECT_EQ(run_command({"frobnicate"}, out, err), kExitUsage);
}

TEST(Cli, Help) {
    std::ostringstream out, err;
    EXPECT_EQ(run_command({"--help"}, out, err), kExitOk);
    EXPECT_NE(out.str().find("eigen"), std::string::npos);
}

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, Matches) {
    const auto r = golden::run_case(kGoldenDir, GetParam());
    EXPECT_TRUE(r.pass) << r.detail;
}

INSTANTIATE_TEST_SUITE_P(Cases, Golden, ::testing::ValuesIn(golden::case_names(kGoldenDir)),
                         [](const auto& info) { return info.param; });

// The built binary, not just run_command.
TEST(Binary, ExitStatusAndOutput) {
    const auto tmp = std::filesystem::temp_directory_path() / "eigenseq_cli_out.txt";
    const std::string cli = EIGENSEQ_CLI;
    int rc = std::system(("'" + cli + "' eigen 'R∘BINOMIAL' -n 9 > '" + tmp.string() + "'").c_str());
    EXPECT_EQ(WEXITSTATUS(rc), 0);
    EXPECT_EQ(golden::slurp(tmp), "1,1,2,5,15,52,203,877,4140\n");
    rc = std::system(("'" + cli + "' verify S99 > '" + tmp.string() + "' 2>&1").c_str());
    EXPECT_EQ(WEXITSTATUS(rc), 2);
    rc = std::system(("'" + cli + "' verify --all > '" + tmp.string() + "'").c_str());
    EXPECT_EQ(WEXITSTATUS(rc), 0);
    std::filesystem::remove(tmp);
}
