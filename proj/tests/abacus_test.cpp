#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "simcore/abacus.hpp"
#include "simcore/enumerate.hpp"

using namespace simcore;

TEST_CASE("integer division helpers") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-8, 2) == -4);
    CHECK(floor_div(0, 5) == 0);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(ceil_div(6, 3) == 2);
}

TEST_CASE("abacus labels and positions") {
    AbacusDiagram ab(7, 4); // period 11, columns 0..5
    CHECK(ab.period() == 11);
    CHECK(ab.max_col() == 5);
    CHECK(ab.label(0, 0) == 0);
    CHECK(ab.label(-1, 1) == -7);
    CHECK(ab.label(1, 0) == 11);
    CHECK_THROWS_AS(ab.label(0, 6), std::out_of_range);
    CHECK_THROWS_AS(ab.label(0, -1), std::out_of_range);

    CHECK(ab.position_of(8) == AbacusPosition{0, 2});
    CHECK(ab.position_of(11) == AbacusPosition{1, 0}); // multiple of s+d
    CHECK(ab.position_of(7) == AbacusPosition{-1, 1}); // only as -7

    AbacusDiagram ab73(7, 3); // period 10, columns 0..5
    CHECK(ab73.label(-2, 4) == -8);
    CHECK(ab73.position_of(1) == AbacusPosition{-1, 3});
    // 5 has residue (s+d)/2: both signs occur, positive label wins.
    CHECK(ab73.position_of(5) == AbacusPosition{-1, 5});
    CHECK(ab73.label(-1, 5) == 5);

    CHECK_THROWS_AS(AbacusDiagram(5, 5), HypothesisError);
    CHECK_THROWS_AS(AbacusDiagram(6, 4), HypothesisError);
    CHECK_THROWS_AS(AbacusDiagram(0, 3), HypothesisError);
}

TEST_CASE("first positive row r(j)") {
    AbacusDiagram ab(7, 4);
    CHECK(ab.r(0) == 1);  // labels 11i: first positive at i = 1
    CHECK(ab.r(1) == 0);  // 11i + 4
    CHECK(ab.r(5) == -1); // 11i + 20: -11 + 20 = 9 > 0
}

TEST_CASE("abacus function fixtures") {
    auto f1 = abacus_function(7, 4, StrictPartition({8, 4, 2, 1}));
    CHECK(f1.values == std::vector<long long>{0, 0, 0, -1, -2, -3});
    CHECK(f1.extended() ==
          std::vector<long long>{0, 0, 0, -1, -2, -3, -2});

    auto f2 = abacus_function(7, 3, StrictPartition({8, 3, 1}));
    CHECK(f2.values == std::vector<long long>{0, 0, -1, -2, -3, -2});
    CHECK(f2.extended() ==
          std::vector<long long>{0, 0, -1, -2, -3, -2, -2});

    auto f3 = abacus_function(7, 4, StrictPartition());
    CHECK(f3.values == std::vector<long long>{0, -1, -1, -2, -2, -2});

    // Modulus smaller than the gap: s < d is allowed.
    auto f4 = abacus_function(3, 5, StrictPartition({5, 2}));
    CHECK(f4.values == std::vector<long long>{0, 0, -1, -2, -3});
    auto f5 = abacus_function(3, 5, StrictPartition({4, 1}));
    CHECK(f5.values == std::vector<long long>{0, -1, -2, -3, -2});
}

TEST_CASE("family path sets") {
    // d even (case a): same set for every family.
    auto bc74 = family_path_set(7, 4, Family::BC);
    CHECK(bc74.length == 6);
    CHECK(bc74.end == -2);
    CHECK(bc74.forbidden_prefixes == std::vector<std::string>{"U"});
    CHECK(bc74.forbidden_suffixes == std::vector<std::string>{"D"});
    CHECK(bc74.appended_final_step);
    CHECK(family_path_set(7, 4, Family::CS) == bc74);
    CHECK(family_path_set(7, 4, Family::DD) == bc74);

    // s, d both odd (case b).
    auto bc73 = family_path_set(7, 3, Family::BC);
    CHECK(bc73.length == 6);
    CHECK(bc73.end == -2);
    CHECK(bc73.forbidden_suffixes ==
          std::vector<std::string>{"FD", "DD", "U"});
    CHECK(family_path_set(7, 3, Family::CS) == bc73);
    auto dd73 = family_path_set(7, 3, Family::DD);
    CHECK(dd73.length == 5);
    CHECK(dd73.end == -2);
    CHECK(dd73.forbidden_suffixes.empty());
    CHECK_FALSE(dd73.appended_final_step);

    // s even, d odd (case c).
    auto bc83 = family_path_set(8, 3, Family::BC);
    CHECK(bc83.length == 6);
    CHECK(bc83.end == -2);
    CHECK(bc83.forbidden_suffixes.empty());
    auto cs83 = family_path_set(8, 3, Family::CS);
    CHECK(cs83.forbidden_suffixes == std::vector<std::string>{"UU", "DD"});
    auto dd83 = family_path_set(8, 3, Family::DD);
    CHECK(dd83.length == 5);
    CHECK_FALSE(dd83.appended_final_step);

    CHECK_THROWS_AS(family_path_set(6, 4, Family::BC), HypothesisError);
    CHECK_THROWS_AS(family_path_set(7, 4, Family::SC), std::invalid_argument);
}

TEST_CASE("to_motzkin fixtures") {
    CHECK(to_motzkin(7, 4, StrictPartition({8, 4, 2, 1}), Family::BC) ==
          "FFDDDU");
    CHECK(to_motzkin(7, 3, StrictPartition({8, 3, 1}), Family::BC) ==
          "FDDDUF");
    CHECK(to_motzkin(7, 3, StrictPartition({5, 3, 1}), Family::BC) ==
          "FDDFUD");
    CHECK(to_motzkin(8, 3, StrictPartition({7, 6, 3}), Family::BC) ==
          "FFDDDU");
    CHECK(to_motzkin(3, 5, StrictPartition({5, 2}), Family::BC) == "FDDDF");
    CHECK(to_motzkin(3, 5, StrictPartition({4, 1}), Family::BC) == "DDDUD");
    CHECK(to_motzkin(7, 3, StrictPartition({8, 3, 1}), Family::DD) ==
          "FDDDU");
}

TEST_CASE("to_motzkin rejects non-members") {
    // 7 is a part: not a (7, 11, 15)-bar-core.
    CHECK_THROWS_AS(to_motzkin(7, 4, StrictPartition({7}), Family::BC),
                    DomainViolation);
    // 4 + 7 = 11: clause (c) for modulus 11.
    CHECK_THROWS_AS(to_motzkin(7, 4, StrictPartition({7, 4}), Family::BC),
                    DomainViolation);
    // 2 = 4/2 is a part: fine for BC, fatal for DD at even modulus 4.
    CHECK_NOTHROW(to_motzkin(4, 3, StrictPartition({2}), Family::BC));
    CHECK_THROWS_AS(to_motzkin(4, 3, StrictPartition({2}), Family::DD),
                    DomainViolation);
}

TEST_CASE("from_motzkin inverts to_motzkin") {
    CHECK(from_motzkin(7, 4, "FFDDDU", Family::BC) ==
          StrictPartition({8, 4, 2, 1}));
    CHECK(from_motzkin(7, 3, "FDDDUF", Family::BC) ==
          StrictPartition({8, 3, 1}));
    CHECK(from_motzkin(7, 3, "FDDFUD", Family::BC) ==
          StrictPartition({5, 3, 1}));
    CHECK(from_motzkin(3, 5, "DDDUD", Family::BC) == StrictPartition({4, 1}));
}

TEST_CASE("from_motzkin validates the path set") {
    CHECK_THROWS_AS(from_motzkin(7, 4, "UFFFFF", Family::BC),
                    DomainViolation); // forbidden prefix U
    CHECK_THROWS_AS(from_motzkin(7, 4, "FFDDD", Family::BC),
                    DomainViolation); // wrong length
    CHECK_THROWS_AS(from_motzkin(7, 4, "FFFDDD", Family::BC),
                    DomainViolation); // wrong endpoint
    CHECK_THROWS_AS(from_motzkin(7, 4, "FFDDDD", Family::BC),
                    DomainViolation); // wrong endpoint
    CHECK_THROWS_AS(from_motzkin(7, 3, "FUFDDD", Family::BC),
                    DomainViolation); // forbidden suffix DD
    CHECK_THROWS_AS(from_motzkin(7, 4, "FFDXDU", Family::BC),
                    std::invalid_argument); // bad step character
}

TEST_CASE("path enumeration") {
    auto paths = enumerate_motzkin(2, -1, {"U"}, {});
    std::sort(paths.begin(), paths.end());
    CHECK(paths == std::vector<std::string>{"DF", "FD"});

    CHECK(enumerate_motzkin(0, 0, {}, {}) == std::vector<std::string>{""});
    CHECK(enumerate_motzkin(1, 2, {}, {}).empty());

    // Forbidding a prefix only prunes paths that start with it.
    auto all3 = enumerate_motzkin(3, 0, {}, {});
    CHECK(all3.size() == 7); // UFD UDF FUD FDU FFF DUF DFU
    auto no_u = enumerate_motzkin(3, 0, {"U"}, {});
    CHECK(no_u.size() == 5);
}

TEST_CASE("bijection with enumerated triples") {
    for (auto [s, d] : std::vector<std::pair<int, int>>{
             {7, 4}, {7, 3}, {8, 3}, {3, 5}, {4, 3}, {5, 2}}) {
        std::vector<int> mods = {s, s + d, s + 2 * d};
        for (auto family : {Family::BC, Family::CS, Family::DD}) {
            auto members = enumerate_family(family, mods);
            auto paths = enumerate_motzkin(family_path_set(s, d, family));
            CHECK(paths.size() == members.size());
            std::set<std::string> seen;
            for (const auto& p : members) {
                std::string path = to_motzkin(s, d, p, family);
                CHECK(from_motzkin(s, d, path, family) == p);
                CHECK(seen.insert(path).second);
            }
            CHECK(seen == std::set<std::string>(paths.begin(), paths.end()));
        }
    }
}
