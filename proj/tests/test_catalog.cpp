// Catalogue records, per-row verification and the closed-form identities.
#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>

#include "eigenseq/catalog.hpp"
#include "golden_runner.hpp"
#include "support.hpp"

using namespace eigenseq;

namespace {

bool all_pass(const std::vector<VerifyReport>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

}  // namespace

TEST(Catalog, Lookup) {
    const auto& s1 = lookup("S1");
    EXPECT_EQ(s1.op, parse_expr("R∘BINOMIAL"));
    EXPECT_EQ(s1.property, Property::alpha);
    EXPECT_EQ(s1.terms, Sequence(0, {1, 1, 2, 5, 15, 52, 203, 877, 4140}));
    EXPECT_EQ(lookup("S41").terms, Sequence(1, {1, 1, 1, 2, 4, 9, 21, 51, 127, 323, 835}));
    EXPECT_THROW(lookup("S99"), DomainError);
    EXPECT_THROW(verify_entry("S99"), DomainError);
}

TEST(Catalog, RowCountAndDuplicates) {
    EXPECT_EQ(catalog().size(), 55u);
    for (const char* id : {"S11", "S15", "S39"}) {
        const auto rows = lookup_all(id);
        ASSERT_EQ(rows.size(), 2u) << id;
        EXPECT_EQ(rows[0].terms.terms().size(), rows[1].terms.terms().size());
        EXPECT_NE(rows[0].operator_text, rows[1].operator_text);
    }
}

TEST(Catalog, EmbeddedCopyMatchesDataFile) {
    const auto file = golden::slurp(std::filesystem::path(EIGENSEQ_SOURCE_DIR) / "data" / "catalog.txt");
    std::string embedded(kCatalogText);
    if (!embedded.empty() && embedded.front() == '\n') embedded.erase(0, 1);
    EXPECT_EQ(file, embedded);
    EXPECT_EQ(load_catalog_file(std::string(EIGENSEQ_SOURCE_DIR) + "/data/catalog.txt").size(), 55u);
}

TEST(Catalog, RecordRoundtrip) {
    for (const auto& e : catalog()) {
        const auto back = parse_catalog(format_catalog_record(e));
        ASSERT_EQ(back.size(), 1u);
        EXPECT_EQ(back[0].id, e.id);
        EXPECT_EQ(back[0].terms, e.terms);
        EXPECT_EQ(back[0].op, e.op);
        EXPECT_EQ(back[0].property, e.property);
    }
}

TEST(Catalog, MalformedRecords) {
    EXPECT_THROW(parse_catalog("S1 | 0 | alpha | R∘BINOMIAL\n"), DomainError);
    EXPECT_THROW(parse_catalog("S1 | 2 | alpha | R∘BINOMIAL | 1,1\n"), std::exception);
    EXPECT_THROW(parse_catalog("S1 | 0 | zeta | R∘BINOMIAL | 1,1\n"), DomainError);
    EXPECT_TRUE(parse_catalog("# comment\n\n").empty());
}

TEST(Verify, S2UsesRecurrenceValue) {
    const auto& s2 = lookup("S2");
    EXPECT_EQ(s2.terms.at(6), Rational(1539));
    EXPECT_TRUE(all_pass(verify_entry("S2")));
    EXPECT_NE(s2.notes.find("1531"), std::string::npos);
}

TEST(Verify, PartitionSwapPair) {
    const auto rows = verify_entry("S36");
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_TRUE(rows[0].pass) << rows[0].detail;
    EXPECT_EQ(apply_expr("PARTITION", lookup("S36").terms).prefix(8), lookup("S35").terms.prefix(8));
}

TEST(Verify, RevertLexLeast) { EXPECT_TRUE(all_pass(verify_entry("S44"))); }

TEST(Verify, WholeCatalogue) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto summary = verify_all();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_EQ(summary.reports.size(), 55u);
    for (const auto& r : summary.reports) EXPECT_TRUE(r.pass) << r.id << " " << r.operator_text << ": " << r.detail;
    EXPECT_LT(secs, 10.0);
}

TEST(Verify, CorruptedTermIsLocalised) {
    oracle::Random rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        auto entries = catalog();
        const auto victim = static_cast<std::size_t>(rng.integer(0, static_cast<long>(entries.size()) - 1));
        auto& e = entries[victim];
        const auto pos = static_cast<std::size_t>(rng.integer(2, static_cast<long>(e.terms.size()) - 1));
        e.terms = e.terms.with_term(pos, e.terms[pos] + 1);
        const auto summary = verify_all(entries);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& r = summary.reports[i];
            // a PARTITION swap partner reads the corrupted row too
            const bool partner = detail::swap_partner(r.id) == e.id;
            if (i == victim) {
                EXPECT_FALSE(r.pass) << e.id << " term " << pos;
            } else if (!partner) {
                EXPECT_TRUE(r.pass) << r.id << " failed after corrupting " << e.id;
            }
        }
    }
}

TEST(ClosedForms, AllHold) {
    const auto checks = check_closed_forms();
    EXPECT_GE(checks.size(), 14u);
    for (char item = 'a'; item <= 'n'; ++item)
        EXPECT_TRUE(std::any_of(checks.begin(), checks.end(), [&](const auto& c) { return c.label.front() == item; })) << item;
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.label << ": " << c.detail;
    EXPECT_THROW(check_closed_forms(6), DomainError);
}

TEST(ClosedForms, SpotValues) {
    // 2/(1 + e^x) = 1 - x/2 + x^3/24 - ...
    const auto s49 = solve_eigen(parse_expr("N^-1∘BINOMIAL"), 6);
    EXPECT_EQ(s49.at(1), Rational(-1, 2));
    EXPECT_EQ(s49.at(2), Rational(0));
    // r = 2, n = 3: C(6,3)/(3+1) = 5
    EXPECT_EQ(solve_eigen(parse_expr("R∘CONV"), 6).at(3), Rational(5));
    // 6 = 6 = 2*3 = 3*2
    EXPECT_EQ(detail::ordered_factorizations(6), Integer(3));
    EXPECT_EQ(lookup("S26").terms.at(6), Rational(3));
}
