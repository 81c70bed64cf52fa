// Acceptance harness: one line per criterion, nonzero exit on any failure.
#include <iostream>
#include <string>
#include <vector>

#include "simcore/verify.hpp"

using simcore::verify::Check;

int main() {
    struct Criterion {
        std::string description;
        std::vector<Check> checks;
    };
    namespace v = simcore::verify;

    std::vector<Criterion> criteria;
    criteria.push_back({"pair bar-core counts equal the binomial closed form",
                        {v::pair_counts_bc(13)}});
    criteria.push_back(
        {"pair doubled-distinct and shifted counts equal their closed forms",
         {v::pair_counts_dd_cs(13)}});
    criteria.push_back({"NE lattice paths biject with pair families",
                        {v::ne_bijections(13)}});
    criteria.push_back({"triple counts: enumeration = closed form = path count",
                        {v::triple_counts(21)}});
    criteria.push_back({"abacus paths biject with triple families",
                        {v::motzkin_bijections(21)}});
    criteria.push_back({"free Motzkin closed forms count their path sets",
                        {v::motzkin_closed_forms(8)}});
    criteria.push_back({"structural invariants: bars, hooks, abacus layout",
                        {v::partition_structure(20, 8),
                         v::abacus_structure(21)}});
    criteria.push_back({"generating functions count members weight by weight",
                        {v::series_match(8, 30)}});
    criteria.push_back({"family size orderings hold in every parity case",
                        {v::size_orderings(21)}});

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool pass = true;
        std::string why;
        for (const auto& check : criteria[i].checks)
            if (!check.pass) {
                pass = false;
                if (!why.empty()) why += "; ";
                why += check.name + ": " + check.detail;
            }
        if (pass) {
            std::cout << "PASS criterion " << i + 1 << ": "
                      << criteria[i].description << "\n";
        } else {
            ++failures;
            std::cout << "FAIL criterion " << i + 1 << ": "
                      << criteria[i].description << " [" << why << "]\n";
        }
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
