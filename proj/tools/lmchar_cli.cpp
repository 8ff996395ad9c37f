#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmchar/lmchar.hpp"

namespace {

// Guard against accidental huge computations: default limit 12, LMCHAR_MAX_N
// overrides it, --force bypasses it.
bool guard_allows(unsigned n, bool force, std::string& message) {
    if (force) return true;
    unsigned limit = 12;
    if (const char* env = std::getenv("LMCHAR_MAX_N")) {
        try {
            const long v = std::stol(env);
            if (v < 1) throw std::invalid_argument("non-positive");
            limit = static_cast<unsigned>(v);
        } catch (...) {
            message = "invalid LMCHAR_MAX_N value: " + std::string(env);
            return false;
        }
    }
    if (n > limit) {
        message = "n = " + std::to_string(n) + " exceeds the computation guard (" +
                  std::to_string(limit) + "); pass --force or raise LMCHAR_MAX_N";
        return false;
    }
    return true;
}

int run_table(unsigned n, bool forget, const std::string& format) {
    const lmchar::BiSymFunc e = lmchar::equivariant_poincare(n);
    if (forget) {
        const lmchar::SymFunc f = lmchar::forget_s2(e, n);
        if (format == "json")
            std::cout << lmchar::symfunc_to_json(f, lmchar::Basis::schur).dump(2) << "\n";
        else if (format == "latex")
            std::cout << lmchar::table_latex(lmchar::to_schur(f)) << "\n";
        else
            std::cout << lmchar::table_text(lmchar::to_schur(f)) << "\n";
    } else {
        if (format == "json")
            std::cout << lmchar::bisymfunc_to_json(e, lmchar::Basis::schur).dump(2) << "\n";
        else if (format == "latex")
            std::cout << lmchar::table_latex(lmchar::bi_to_schur(e)) << "\n";
        else
            std::cout << lmchar::table_text(lmchar::bi_to_schur(e)) << "\n";
    }
    return 0;
}

int run_verify(unsigned max_n, const std::vector<std::string>& suites,
               const std::string& format) {
    const lmchar::VerificationReport report = lmchar::verify(max_n, suites);
    if (format == "json") {
        std::cout << lmchar::report_to_json(report).dump(2) << "\n";
    } else {
        unsigned passed = 0;
        for (const auto& c : report.checks) {
            if (c.pass) ++passed;
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " n=" << c.n;
            if (!c.pass) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
        std::cout << passed << "/" << report.checks.size() << " checks passed\n";
    }
    return report.passing() ? 0 : 1;
}

int run_euler(unsigned max_n, const std::string& format) {
    const lmchar::SymFuncSeries series = lmchar::euler_characteristic_series(max_n);
    if (format == "json") {
        lmchar::Json entries = lmchar::Json::array();
        for (unsigned n = 1; n <= max_n; ++n) {
            const lmchar::SymFunc e = series.coeff(n);
            const lmchar::RationalPoly dim = lmchar::dimension(e, n);
            entries.push_back(
                lmchar::Json{{"n", n},
                             {"dimension", lmchar::detail::to_int64(numerator(dim.coeff(0)))},
                             {"value", lmchar::symfunc_to_json(e, lmchar::Basis::powersum)}});
        }
        std::cout << lmchar::Json{{"max_n", max_n}, {"entries", entries}}.dump(2) << "\n";
    } else {
        for (unsigned n = 1; n <= max_n; ++n) {
            const lmchar::SymFunc e = series.coeff(n);
            const lmchar::RationalPoly dim = lmchar::dimension(e, n);
            std::cout << "e[" << n << "] = " << lmchar::powersum_text(e) << "  [dim "
                      << lmchar::rational_text(dim.coeff(0)) << "]\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact S2 x Sn-equivariant Poincare-Serre polynomials of the "
        "Losev-Manin moduli spaces"};
    app.require_subcommand(1);

    unsigned table_n = 0;
    bool table_forget = false;
    bool table_force = false;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Print the Schur-basis expansion for one n");
    table->add_option("--n", table_n, "Number of light marked points (>= 1)")->required();
    table->add_flag("--forget-s2", table_forget,
                    "Print the S_n-equivariant polynomial (S_2 action forgotten)");
    table->add_option("--format", table_format, "Output format (text|json|latex)")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    table->add_flag("--force", table_force, "Bypass the computation guard");

    unsigned verify_max_n = 0;
    bool verify_force = false;
    std::vector<std::string> verify_suites;
    std::string verify_format = "text";
    auto* verify_cmd = app.add_subcommand("verify", "Run cross-check suites for n = 1..max-n");
    verify_cmd->add_option("--max-n", verify_max_n, "Largest n to check (>= 1)")->required();
    verify_cmd->add_option("--suite", verify_suites, "Suite name (repeatable), or 'all'");
    verify_cmd->add_option("--format", verify_format, "Output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--force", verify_force, "Bypass the computation guard");

    unsigned euler_max_n = 0;
    bool euler_force = false;
    std::string euler_format = "text";
    auto* euler_cmd =
        app.add_subcommand("euler", "Print equivariant Euler characteristics for n = 1..max-n");
    euler_cmd->add_option("--max-n", euler_max_n, "Largest n to print (>= 1)")->required();
    euler_cmd->add_option("--format", euler_format, "Output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    euler_cmd->add_flag("--force", euler_force, "Bypass the computation guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string guard_message;
        if (table->parsed()) {
            if (table_n < 1) {
                std::cerr << "--n must be >= 1\n";
                return 2;
            }
            if (!guard_allows(table_n, table_force, guard_message)) {
                std::cerr << guard_message << "\n";
                return 2;
            }
            return run_table(table_n, table_forget, table_format);
        }
        if (verify_cmd->parsed()) {
            if (verify_max_n < 1) {
                std::cerr << "--max-n must be >= 1\n";
                return 2;
            }
            if (!guard_allows(verify_max_n, verify_force, guard_message)) {
                std::cerr << guard_message << "\n";
                return 2;
            }
            if (verify_suites.empty()) verify_suites = {"all"};
            const auto& known = lmchar::verification_suites();
            for (const auto& s : verify_suites) {
                if (s == "all" || std::find(known.begin(), known.end(), s) != known.end())
                    continue;
                std::cerr << "unknown suite: " << s << "\nvalid suites: all";
                for (const auto& k : known) std::cerr << ", " << k;
                std::cerr << "\n";
                return 2;
            }
            return run_verify(verify_max_n, verify_suites, verify_format);
        }
        if (euler_cmd->parsed()) {
            if (euler_max_n < 1) {
                std::cerr << "--max-n must be >= 1\n";
                return 2;
            }
            if (!guard_allows(euler_max_n, euler_force, guard_message)) {
                std::cerr << guard_message << "\n";
                return 2;
            }
            return run_euler(euler_max_n, euler_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
