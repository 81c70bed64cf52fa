#include <doctest.h>

#include <algorithm>
#include <vector>

#include "simcore/enumerate.hpp"

using namespace simcore;

namespace {

std::vector<StrictPartition> from_subsets(int max_part,
                                          auto&& keep) {
    std::vector<StrictPartition> out;
    for (unsigned mask = 0; mask < (1u << max_part); ++mask) {
        std::vector<int> parts;
        for (int p = max_part; p >= 1; --p)
            if (mask & (1u << (p - 1))) parts.push_back(p);
        StrictPartition sp(parts);
        if (keep(sp)) out.push_back(sp);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("default part bound") {
    CHECK(default_part_bound({9, 13}) == 59);
    CHECK(default_part_bound({13, 9}) == 59);
    CHECK(default_part_bound({3, 5, 7}) == 8);
    CHECK(default_part_bound({2, 3}) == 3);       // clamped to max modulus
    CHECK(default_part_bound({2, 3, 1000}) == 1000);
    CHECK_THROWS_AS(default_part_bound({2, 4}), HypothesisError);
    CHECK_THROWS_AS(default_part_bound({5}), HypothesisError);
    CHECK_THROWS_AS(default_part_bound({6, 10, 15}), HypothesisError);
}

TEST_CASE("enumerate_family argument validation") {
    CHECK_THROWS_AS(enumerate_family({Family::SC, {3, 5}, 10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family({Family::BC, {4, 5}, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family({Family::BC, {}, 5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family(Family::BC, {2, 4}), HypothesisError);
}

TEST_CASE("enumerate small instances") {
    auto bc357 = enumerate_family(Family::BC, {3, 5, 7});
    std::vector<StrictPartition> want357 = {StrictPartition(),
                                            StrictPartition({1}),
                                            StrictPartition({2})};
    CHECK(bc357 == want357);

    auto bc45 = enumerate_family(Family::BC, {4, 5});
    std::vector<StrictPartition> want45 = {
        StrictPartition(),          StrictPartition({1}),
        StrictPartition({2}),       StrictPartition({2, 1}),
        StrictPartition({3}),       StrictPartition({6, 2, 1})};
    CHECK(bc45 == want45);

    auto dd45 = enumerate_family(Family::DD, {4, 5});
    std::vector<StrictPartition> wantdd = {StrictPartition(),
                                           StrictPartition({1}),
                                           StrictPartition({3})};
    CHECK(dd45 == wantdd);

    auto cs45 = enumerate_family(Family::CS, {4, 5});
    CHECK(cs45.size() == 5); // dd45 plus (2) and (2,1)
    CHECK(std::find(cs45.begin(), cs45.end(), StrictPartition({2, 1})) !=
          cs45.end());

    auto dd345 = enumerate_family(Family::DD, {3, 4, 5});
    CHECK(dd345 == std::vector<StrictPartition>{StrictPartition(),
                                                StrictPartition({1})});
}

TEST_CASE("enumeration agrees with subset filtering") {
    const std::vector<int> mods = {4, 5};
    auto direct_bc = from_subsets(10, [&](const StrictPartition& p) {
        return is_bar_core(p, 4) && is_bar_core(p, 5);
    });
    CHECK(enumerate_family(Family::BC, mods) == direct_bc);

    auto direct_cs = from_subsets(10, [&](const StrictPartition& p) {
        return is_csyd(p, 4) && is_csyd(p, 5);
    });
    CHECK(enumerate_family(Family::CS, mods) == direct_cs);

    auto direct_dd = from_subsets(10, [&](const StrictPartition& p) {
        return is_dd_core(p, 4) && is_dd_core(p, 5);
    });
    CHECK(enumerate_family(Family::DD, mods) == direct_dd);
}

TEST_CASE("enumeration saturates below the default bound") {
    for (auto family : {Family::BC, Family::CS, Family::DD}) {
        for (const auto& mods :
             std::vector<std::vector<int>>{{4, 5}, {3, 5, 7}, {5, 6}}) {
            EnumerationSpec spec{family, mods, default_part_bound(mods)};
            auto base = enumerate_family(spec);
            spec.part_bound += 9;
            CHECK(enumerate_family(spec) == base);
        }
    }
}

TEST_CASE("members satisfy the defining predicates") {
    for (const auto& mods : std::vector<std::vector<int>>{{4, 7}, {5, 6}}) {
        for (const auto& p : enumerate_family(Family::BC, mods))
            for (int s : mods) CHECK(is_bar_core(p, s));
        for (const auto& p : enumerate_family(Family::CS, mods))
            for (int s : mods) CHECK(is_csyd(p, s));
        for (const auto& p : enumerate_family(Family::DD, mods))
            for (int s : mods) CHECK(is_dd_core(p, s));
    }
}

TEST_CASE("odd moduli give identical families") {
    for (const auto& mods : std::vector<std::vector<int>>{{3, 5}, {3, 5, 7}}) {
        auto bc = enumerate_family(Family::BC, mods);
        CHECK(enumerate_family(Family::CS, mods) == bc);
        CHECK(enumerate_family(Family::DD, mods) == bc);
    }
}

TEST_CASE("single modulus slice") {
    auto slice = enumerate_family({Family::BC, {3}, 6});
    CHECK(std::find(slice.begin(), slice.end(), StrictPartition({1})) !=
          slice.end());
    CHECK(std::find(slice.begin(), slice.end(), StrictPartition({3})) ==
          slice.end());
    for (const auto& p : slice) CHECK(is_bar_core(p, 3));
}

TEST_CASE("partition generators") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    CHECK(strict_partitions_of(0).size() == 1);
    CHECK(strict_partitions_of(5).size() == 3);  // 5, 4+1, 3+2
    CHECK(strict_partitions_of(10).size() == 10);
    for (const auto& p : strict_partitions_of(9)) CHECK(p.weight() == 9);
}

TEST_CASE("count_by_weight") {
    auto bc4 = count_by_weight(Family::BC, 4, 6);
    CHECK(bc4.coeff(0) == 1);
    CHECK(bc4.coeff(1) == 1);
    CHECK(bc4.coeff(2) == 1);
    CHECK(bc4.coeff(3) == 2);

    // Doubled distinct partitions have even weight.
    for (int s = 2; s <= 6; ++s) {
        auto dd = count_by_weight(Family::DD, s, 15);
        for (int n = 1; n <= 15; n += 2) CHECK(dd.coeff(n) == 0);
    }

    auto sc2 = count_by_weight(Family::SC, 2, 4);
    CHECK(sc2.coeff(0) == 1);
    CHECK(sc2.coeff(1) == 1);
    CHECK(sc2.coeff(2) == 0);
    CHECK(sc2.coeff(3) == 1); // (2,1)

    // For odd s, a doubling of weight 2n exists per bar-core of weight n.
    auto bc5 = count_by_weight(Family::BC, 5, 8);
    auto dd5 = count_by_weight(Family::DD, 5, 16);
    for (int n = 0; n <= 8; ++n) CHECK(dd5.coeff(2 * n) == bc5.coeff(n));
}
