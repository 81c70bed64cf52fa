#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "simcore/abacus.hpp"
#include "simcore/counting.hpp"
#include "simcore/enumerate.hpp"
#include "simcore/errors.hpp"
#include "simcore/partition.hpp"
#include "simcore/qseries.hpp"
#include "simcore/verify.hpp"
#include "simcore/yinyang.hpp"

namespace {

using namespace simcore;

constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitDomain = 4;
constexpr int kExitVerification = 5;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

std::pair<int, int> parse_two(const std::string& text, const char* what) {
    auto v = parse_int_list(text, what);
    if (v.size() != 2) throw std::invalid_argument(std::string(what) + ": expected two integers");
    return {v[0], v[1]};
}

void require_pairwise_coprime(const std::vector<int>& moduli) {
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (std::gcd(moduli[i], moduli[j]) != 1)
                throw HypothesisError("moduli " + std::to_string(moduli[i]) + " and " +
                                      std::to_string(moduli[j]) + " are not coprime");
}

int run_enumerate(Family family, const std::string& moduli_arg, int bound,
                  const std::string& format, bool strict) {
    std::vector<int> moduli = parse_int_list(moduli_arg, "--moduli");
    if (strict) require_pairwise_coprime(moduli);
    if (bound == 0) bound = default_part_bound(moduli);
    auto members = enumerate_family({family, moduli, bound});
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& m : members) out.push_back(m.parts());
        std::cout << out.dump() << "\n";
    } else { // lines, csv
        for (const auto& m : members) std::cout << m.str() << "\n";
    }
    return 0;
}

int run_count(Family family, const std::string& pair_arg, const std::string& triple_arg,
              const std::string& method, const std::string& format) {
    const bool is_pair = !pair_arg.empty();
    const auto [x, y] = parse_two(is_pair ? pair_arg : triple_arg, is_pair ? "--pair" : "--triple");

    auto formula = [&]() {
        return is_pair ? count_pair(family, x, y) : count_triple(family, x, y);
    };
    auto brute = [&]() {
        std::vector<int> moduli =
            is_pair ? std::vector<int>{x, y} : std::vector<int>{x, x + y, x + 2 * y};
        return BigInt(enumerate_family(family, moduli).size());
    };
    auto paths = [&]() -> BigInt {
        if (!is_pair) return BigInt(enumerate_motzkin(family_path_set(x, y, family)).size());
        YinYangDiagram d = YinYangDiagram::for_pair(x, y);
        if ((x % 2 != 0 && y % 2 != 0) || family == Family::BC)
            return BigInt(all_ne_paths(d.cols(), d.rows()).size());
        if (family == Family::DD) return BigInt(dd_paths(d.s(), d.t()).size());
        return BigInt(csyd_paths(d.s(), d.t()).size()); // CS
    };

    if (family == Family::SC && method != "formula")
        throw std::invalid_argument("sc counts are closed-form only; use --method formula");

    std::vector<BigInt> values;
    if (method == "formula") values.push_back(formula());
    else if (method == "brute") values.push_back(brute());
    else if (method == "paths") values.push_back(paths());
    else { // all
        values.push_back(formula());
        values.push_back(paths());
        values.push_back(brute());
    }

    if (format == "json") {
        nlohmann::json out;
        if (method == "all") {
            out["formula"] = values[0].str();
            out["paths"] = values[1].str();
            out["brute"] = values[2].str();
        } else {
            out["count"] = values[0].str();
        }
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            std::cout << values[i].str() << (i + 1 < values.size() ? " " : "\n");
    }
    for (const BigInt& v : values)
        if (v != values[0])
            throw VerificationError("count methods disagree: formula " + values[0].str() +
                                    ", paths " + values[1].str() + ", brute " + values[2].str());
    return 0;
}

int run_map(Family family, const std::string& pair_arg, const std::string& triple_arg,
            const std::string& to_path_arg, const std::string& to_partition_arg) {
    const bool is_pair = !pair_arg.empty();
    const auto [x, y] = parse_two(is_pair ? pair_arg : triple_arg, is_pair ? "--pair" : "--triple");
    if (!to_path_arg.empty()) {
        StrictPartition p = StrictPartition::parse(to_path_arg);
        if (is_pair) {
            YinYangDiagram d = YinYangDiagram::for_pair(x, y);
            if (family != Family::BC) { // subfamilies exclude some bar-cores
                for (int m : {x, y}) {
                    auto v = family == Family::CS ? csyd_violation(p, m) : dd_core_violation(p, m);
                    if (v) throw DomainViolation(*v);
                }
            }
            std::cout << to_path(d, p) << "\n";
        } else {
            std::cout << to_motzkin(x, y, p, family) << "\n";
        }
        return 0;
    }
    if (is_pair) {
        YinYangDiagram d = YinYangDiagram::for_pair(x, y);
        std::cout << from_path(d, to_partition_arg).str() << "\n";
    } else {
        std::cout << from_motzkin(x, y, to_partition_arg, family).str() << "\n";
    }
    return 0;
}

int run_series(Family family, int modulus, int max_n, const std::string& format) {
    QSeries s = series_family(family, modulus, max_n);
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (int n = 0; n <= max_n; ++n) out.push_back(s.coeff(n).str());
        std::cout << out.dump() << "\n";
    } else { // csv, lines
        for (int n = 0; n <= max_n; ++n) std::cout << n << "," << s.coeff(n).str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int max) {
    std::vector<verify::Check> checks;
    if (suite == "pair") checks = verify::pair_suite(max ? max : 13);
    else if (suite == "triple") checks = verify::triple_suite(max ? max : 21);
    else if (suite == "series") checks = verify::series_suite(8, max ? max : 30);
    else checks = verify::figures_suite();

    std::size_t failed = 0;
    for (const auto& c : checks) {
        if (c.pass) {
            std::cout << "PASS  " << c.name << " (" << c.detail << ")\n";
        } else {
            ++failed;
            std::cout << "FAIL  " << c.name << ": " << c.detail << "\n";
        }
    }
    if (failed) {
        std::cout << failed << " of " << checks.size() << " checks failed\n";
        return kExitVerification;
    }
    std::cout << "all " << checks.size() << " checks passed\n";
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"exact enumeration toolkit for simultaneous core partitions"};
    app.require_subcommand(1);
    auto family_check = CLI::IsMember({"bc", "cs", "dd"});
    auto family_check_sc = CLI::IsMember({"sc", "bc", "cs", "dd"});
    auto format_check = CLI::IsMember({"lines", "json", "csv"});

    std::string family_arg, format_arg, method_arg, suite_arg;
    std::string moduli_arg, pair_arg, triple_arg, to_path_arg, to_partition_arg;
    int bound = 0, modulus = 0, max_n = kDefaultSeriesTrunc, verify_max = 0;
    bool strict = false;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all members of a family");
    enumerate->add_option("--family", family_arg, "family")->required()->check(family_check);
    enumerate->add_option("--moduli", moduli_arg, "comma-separated moduli")->required();
    enumerate->add_option("--bound", bound, "largest part to consider")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--format", format_arg, "lines|json|csv")
        ->default_val("lines")
        ->check(format_check);
    enumerate->add_flag("--strict-hypotheses", strict, "require pairwise coprime moduli");

    CLI::App* count = app.add_subcommand("count", "count members");
    count->add_option("--family", family_arg, "family")->required()->check(family_check_sc);
    count->add_option("--pair", pair_arg, "s,t");
    count->add_option("--triple", triple_arg, "s,d for moduli (s, s+d, s+2d)");
    count->add_option("--method", method_arg, "formula|paths|brute|all")
        ->default_val("formula")
        ->check(CLI::IsMember({"formula", "paths", "brute", "all"}));
    count->add_option("--format", format_arg, "lines|json|csv")
        ->default_val("lines")
        ->check(format_check);

    CLI::App* map_cmd = app.add_subcommand("map", "apply the path bijections");
    map_cmd->add_option("--family", family_arg, "family")->required()->check(family_check);
    map_cmd->add_option("--pair", pair_arg, "s,t");
    map_cmd->add_option("--triple", triple_arg, "s,d for moduli (s, s+d, s+2d)");
    map_cmd->add_option("--to-path", to_path_arg, "partition to map to its path");
    map_cmd->add_option("--to-partition", to_partition_arg, "path to map to its partition");

    CLI::App* series = app.add_subcommand("series", "generating function coefficients");
    series->add_option("--family", family_arg, "family")->required()->check(family_check_sc);
    series->add_option("--modulus", modulus, "modulus")->required()->check(CLI::PositiveNumber);
    series->add_option("--max-n", max_n, "largest exponent")->check(CLI::NonNegativeNumber);
    series->add_option("--format", format_arg, "lines|json|csv")
        ->default_val("csv")
        ->check(format_check);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite_arg, "pair|triple|series|figures")
        ->required()
        ->check(CLI::IsMember({"pair", "triple", "series", "figures"}));
    verify_cmd->add_option("--max", verify_max, "sweep bound")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*enumerate)
        return run_enumerate(family_from_name(family_arg), moduli_arg, bound, format_arg, strict);
    if (*count || *map_cmd) {
        if (pair_arg.empty() == triple_arg.empty())
            throw std::invalid_argument("exactly one of --pair and --triple is required");
        if (*count)
            return run_count(family_from_name(family_arg), pair_arg, triple_arg, method_arg,
                             format_arg);
        if (to_path_arg.empty() == to_partition_arg.empty())
            throw std::invalid_argument("exactly one of --to-path and --to-partition is required");
        return run_map(family_from_name(family_arg), pair_arg, triple_arg, to_path_arg,
                       to_partition_arg);
    }
    if (*series) return run_series(family_from_name(family_arg), modulus, max_n, format_arg);
    return run_verify(suite_arg, verify_max);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const DomainViolation& e) {
        std::cerr << "domain violation: " << e.what() << "\n";
        return kExitDomain;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
