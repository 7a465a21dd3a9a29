#pragma once

/**
 * @file cli.hpp
 * @brief Command dispatch for the eigenseq tool.
 *
 * Exit status: 0 success, 1 verification failure, 2 usage or domain error.
 * Sequences print as comma lists without spaces; --json prints
 * {"id"?, "offset", "terms": [strings]} and --bfile prints "n a(n)" lines.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigenseq/catalog.hpp"
#include "eigenseq/eigen.hpp"
#include "eigenseq/error.hpp"
#include "eigenseq/expr.hpp"
#include "eigenseq/linear.hpp"
#include "eigenseq/sequence.hpp"

namespace eigenseq {

enum ExitStatus : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

namespace detail {

struct OutputFormat {
    bool json = false;
    bool bfile = false;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void print_sequence(std::ostream& out, const Sequence& s, const OutputFormat& fmt,
                           const std::optional<std::string>& id = std::nullopt) {
    if (fmt.json) {
        nlohmann::ordered_json j;
        if (id) j["id"] = *id;
        j["offset"] = s.offset();
        j["terms"] = nlohmann::json::array();
        for (const auto& t : s.terms()) j["terms"].push_back(to_string(t));
        out << j.dump() << "\n";
    } else if (fmt.bfile) {
        if (!s.is_integral()) throw DomainError("b-file output needs integer terms");
        for (std::size_t i = 0; i < s.size(); ++i) out << static_cast<long>(i) + s.offset() << " " << to_string(s[i]) << "\n";
    } else {
        out << to_string(s) << "\n";
    }
}

inline Sequence read_terms(const std::string& list, const std::string& file, int offset) {
    if (!list.empty() && !file.empty()) throw DomainError("give either --terms or --terms-file, not both");
    if (list.empty() && file.empty()) throw DomainError("no input terms; use --terms or --terms-file");
    return parse_sequence(file.empty() ? list : read_file(file), offset);
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integer-sequence transforms and their eigen-sequences", "eigenseq"};
    app.require_subcommand(1);

    detail::OutputFormat fmt;
    const auto add_format = [&](CLI::App* sub) {
        auto* j = sub->add_flag("--json", fmt.json, "JSON output");
        auto* b = sub->add_flag("--bfile", fmt.bfile, "b-file output (n a(n) per line)");
        j->excludes(b);
    };

    // transform
    std::string t_expr, t_terms, t_file;
    std::optional<int> t_offset;
    auto* transform = app.add_subcommand("transform", "Apply an operator expression to a sequence");
    transform->add_option("expr", t_expr, "Operator expression, e.g. BINOMIAL^2")->required();
    transform->add_option("--terms", t_terms, "Comma-separated terms");
    transform->add_option("--terms-file", t_file, "File with one term per line or a comma list");
    transform->add_option("--offset", t_offset, "Offset of the input (default: the expression's native offset)")
        ->check(CLI::IsMember({0, 1}));
    add_format(transform);

    // eigen
    std::string e_expr;
    std::size_t e_n = 0;
    std::string e_cap = "1000";
    auto* eigen = app.add_subcommand("eigen", "Solve the eigen equation named by an operator expression");
    eigen->add_option("expr", e_expr, "e.g. R∘BINOMIAL, M^-1∘EXP, N^-1∘MOBIUS")->required();
    eigen->add_option("-n", e_n, "Number of terms")->required()->check(CLI::PositiveNumber);
    eigen->add_option("--cap", e_cap, "Value cap for the REVERT search");
    add_format(eigen);

    // orbit partition
    std::string o_start, o_file;
    std::size_t o_n = 0, o_max = 50;
    auto* orbit = app.add_subcommand("orbit", "Iterate a transform to a cycle");
    orbit->require_subcommand(1);
    auto* orbit_partition = orbit->add_subcommand("partition", "PARTITION orbit of a start sequence");
    orbit_partition->add_option("--start", o_start, "Comma-separated start terms (offset 1)");
    orbit_partition->add_option("--terms-file", o_file, "File with the start terms");
    orbit_partition->add_option("-n", o_n, "Prefix length (default: length of the start)");
    orbit_partition->add_option("--max-iter", o_max, "Iteration limit");

    // search revert
    std::size_t s_n = 0;
    std::string s_cap = "1000";
    auto* search = app.add_subcommand("search", "Lexicographic searches");
    search->require_subcommand(1);
    auto* search_revert = search->add_subcommand("revert", "Earliest increasing REVERT fixed point");
    search_revert->add_option("-n", s_n, "Number of terms")->required()->check(CLI::PositiveNumber);
    search_revert->add_option("--cap", s_cap, "Largest term value tried");

    // difftable
    std::string d_terms, d_file;
    long d_depth = 1;
    auto* difftable = app.add_subcommand("difftable", "Difference tables and their leading diagonal");
    difftable->add_option("--terms", d_terms, "Comma-separated terms (offset 0)");
    difftable->add_option("--terms-file", d_file, "File with the terms");
    difftable->add_option("--depth", d_depth, "Depth r >= 1")->check(CLI::PositiveNumber);

    // verify
    bool v_all = false;
    std::string v_id;
    bool v_closed = false;
    auto* verify = app.add_subcommand("verify", "Recompute catalog entries from their operators");
    auto* v_all_opt = verify->add_flag("--all", v_all, "Verify every entry");
    verify->add_option("id", v_id, "Catalog id, e.g. S1")->excludes(v_all_opt);
    verify->add_flag("--closed-forms", v_closed, "Also check generating-function identities");

    // list
    auto* list = app.add_subcommand("list", "Catalog ids, operators and notes");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*transform) {
            const TransformExpr e = parse_expr(t_expr);
            const int offset = t_offset.value_or(native_offset(e));
            const Sequence a = detail::read_terms(t_terms, t_file, offset);
            detail::print_sequence(out, apply_expr(e, a), fmt);
            return kExitOk;
        }
        if (*eigen) {
            const TransformExpr e = parse_expr(e_expr);
            detail::print_sequence(out, solve_eigen(e, e_n, Integer(e_cap)), fmt);
            return kExitOk;
        }
        if (*orbit_partition) {
            Sequence start = detail::read_terms(o_start, o_file, 1);
            const std::size_t n = o_n ? o_n : start.size();
            if (start.size() < n) throw DomainError("start has fewer than " + std::to_string(n) + " terms");
            const OrbitReport r = partition_orbit(start, n, o_max);
            for (std::size_t i = 0; i < r.iterates.size(); ++i) out << i << ": " << to_string(r.iterates[i]) << "\n";
            out << "tail " << r.tail << ", period " << r.period << "\n";
            const auto cyc = r.cycle();
            if (r.period == 1 && cyc.front() == Sequence::ones(1, n))
                out << "note: reached the all-ones sequence, a trivial fixed point of PARTITION "
                       "(parts {1} give one partition of every n)\n";
            return kExitOk;
        }
        if (*search_revert) {
            const RevertSearchResult r = revert_lex_search(s_n, Integer(s_cap));
            out << to_string(r.terms) << "\n";
            err << "horizon " << r.horizon << ", cap " << r.cap.str() << "\n";
            return kExitOk;
        }
        if (*difftable) {
            Sequence cur = detail::read_terms(d_terms, d_file, 0);
            for (long level = 1; level <= d_depth; ++level) {
                if (d_depth > 1) out << "table " << level << ":\n";
                for (const auto& row : difference_table(cur)) out << to_string(Sequence(0, row)) << "\n";
                cur = diff_table_diagonal(cur, 1);
            }
            out << "diagonal: " << to_string(cur) << "\n";
            return kExitOk;
        }
        if (*verify) {
            if (!v_all && v_id.empty()) throw DomainError("verify needs --all or an id");
            const std::vector<VerifyReport> reports = v_all ? verify_all().reports : verify_entry(v_id);
            bool ok = true;
            for (const auto& r : reports) {
                out << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.operator_text;
                if (!r.pass) out << ": " << r.detail;
                out << "\n";
                ok = ok && r.pass;
            }
            if (v_all) {
                std::size_t passed = 0;
                for (const auto& r : reports) passed += r.pass;
                out << passed << "/" << reports.size() << " rows pass\n";
            }
            if (v_closed) {
                for (const auto& c : check_closed_forms()) {
                    out << (c.pass ? "PASS " : "FAIL ") << c.label << " (" << c.detail << ")\n";
                    ok = ok && c.pass;
                }
            }
            return ok ? kExitOk : kExitVerifyFailed;
        }
        if (*list) {
            for (const auto& e : catalog()) {
                out << e.id << "\t" << to_string(e.op) << "\t" << property_name(e.property);
                if (!e.notes.empty()) out << "\t" << e.notes;
                out << "\n";
            }
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace eigenseq
