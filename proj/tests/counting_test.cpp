#include <doctest.h>

#include <numeric>
#include <vector>

#include "simcore/abacus.hpp"
#include "simcore/counting.hpp"
#include "simcore/enumerate.hpp"

using namespace simcore;

namespace {

// Self-conjugate partition with the given (strictly decreasing, odd)
// principal hook lengths.
Partition self_conj_from_diagonal(const std::vector<int>& hooks) {
    const int r = static_cast<int>(hooks.size());
    std::vector<int> arms;
    for (int h : hooks) arms.push_back((h - 1) / 2);
    std::vector<int> parts;
    for (int i = 0; i < r; ++i) parts.push_back(arms[i] + i + 1);
    for (int k = r + 1;; ++k) {
        int cnt = 0;
        for (int i = 0; i < r; ++i)
            if (arms[i] + i + 1 >= k) ++cnt;
        if (cnt == 0) break;
        parts.push_back(cnt);
    }
    return Partition(parts);
}

// Count self-conjugate partitions that are s-cores for every given modulus,
// by enumerating principal hooks (distinct odd parts) up to total weight W.
long long brute_self_conjugate_cores(const std::vector<int>& moduli, int W) {
    long long count = 0;
    std::vector<int> hooks;
    auto rec = [&](auto&& self, int max_hook, int remaining) -> void {
        Partition p = self_conj_from_diagonal(hooks);
        bool ok = true;
        for (int s : moduli)
            if (!is_s_core(p, s)) { ok = false; break; }
        if (ok) ++count;
        int start = std::min(max_hook, remaining);
        if (start % 2 == 0) --start; // principal hooks are odd
        for (int h = start; h >= 1; h -= 2) {
            hooks.push_back(h);
            self(self, h - 2, remaining - h);
            hooks.pop_back();
        }
    };
    rec(rec, W, W);
    return count;
}

} // namespace

TEST_CASE("binomial and multinomial conventions") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-1, 0) == 0); // negative upper index counts nothing
    CHECK(binomial(-3, 2) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));

    CHECK(multinomial(4, 2, 1, 1) == 12);
    CHECK(multinomial(0, 0, 0, 0) == 1);
    CHECK(multinomial(4, 2, 1, 0) == 0);  // parts do not sum to n
    CHECK(multinomial(4, -1, 4, 1) == 0); // negative part
}

TEST_CASE("pair counts: fixtures") {
    CHECK(count_pair(Family::BC, 4, 5) == 6);
    CHECK(count_pair(Family::DD, 4, 5) == 3);
    CHECK(count_pair(Family::CS, 4, 5) == 5);
    CHECK(count_pair(Family::SC, 9, 13) == 210);
    CHECK(count_pair(Family::BC, 9, 13) == 210);
    CHECK(count_pair(Family::BC, 13, 9) == 210); // symmetric
    CHECK(count_pair(Family::DD, 8, 13) == 84);
    CHECK(count_pair(Family::CS, 8, 13) == 140);
    CHECK(count_pair(Family::BC, 1, 2) == 1);
    CHECK_THROWS_AS(count_pair(Family::BC, 6, 9), HypothesisError);
}

TEST_CASE("pair counts match enumeration") {
    for (auto [s, t] : std::vector<std::pair<int, int>>{
             {2, 3}, {3, 4}, {4, 5}, {3, 5}, {5, 6}, {4, 7}, {5, 8}, {2, 9}}) {
        for (auto family : {Family::BC, Family::CS, Family::DD})
            CHECK(count_pair(family, s, t) ==
                  BigInt(enumerate_family(family, {s, t}).size()));
    }
}

TEST_CASE("pair counts: self-conjugate brute force") {
    for (auto [s, t] : std::vector<std::pair<int, int>>{
             {2, 3}, {3, 4}, {4, 5}, {3, 5}, {5, 6}, {2, 7}, {4, 9}}) {
        int W = (s * s - 1) * (t * t - 1) / 24;
        CHECK(count_pair(Family::SC, s, t) ==
              brute_self_conjugate_cores({s, t}, W));
    }
}

TEST_CASE("consecutive-pair shifted-core count") {
    CHECK(consecutive_csyd_count(2) == 2);
    CHECK(consecutive_csyd_count(4) == 5);
    for (int s = 2; s <= 12; ++s)
        CHECK(consecutive_csyd_count(s) == count_pair(Family::CS, s, s + 1));
    CHECK_THROWS_AS(consecutive_csyd_count(1), std::invalid_argument);
}

TEST_CASE("triple counts: fixtures") {
    CHECK(count_triple(Family::BC, 1, 1) == 1);
    CHECK(count_triple(Family::BC, 3, 2) == 3);
    CHECK(count_triple(Family::CS, 3, 2) == 3);
    CHECK(count_triple(Family::DD, 3, 2) == 3);
    CHECK(count_triple(Family::SC, 3, 2) == 2);

    CHECK(count_triple(Family::BC, 3, 1) == 3);
    CHECK(count_triple(Family::CS, 3, 1) == 3);
    CHECK(count_triple(Family::DD, 3, 1) == 2);
    CHECK(count_triple(Family::SC, 3, 1) == 2);

    CHECK(count_triple(Family::BC, 4, 1) == 5);
    CHECK(count_triple(Family::CS, 4, 1) == 5);
    CHECK(count_triple(Family::SC, 4, 1) == 5);
    CHECK(count_triple(Family::DD, 4, 1) == 2);

    CHECK(count_triple(Family::BC, 2, 1) == 2);
    CHECK(count_triple(Family::CS, 2, 1) == 2);
    CHECK(count_triple(Family::SC, 2, 1) == 2);
    CHECK(count_triple(Family::DD, 2, 1) == 1);

    CHECK_THROWS_AS(count_triple(Family::BC, 2, 4), HypothesisError);
    CHECK_THROWS_AS(count_triple(Family::BC, 0, 1), HypothesisError);
}

TEST_CASE("triple counts match enumeration") {
    for (auto [s, d] : std::vector<std::pair<int, int>>{
             {1, 1}, {1, 2}, {2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 1},
             {2, 3}, {3, 4}, {5, 2}, {4, 3}, {7, 2}, {8, 3}}) {
        std::vector<int> mods = {s, s + d, s + 2 * d};
        for (auto family : {Family::BC, Family::CS, Family::DD})
            CHECK(count_triple(family, s, d) ==
                  BigInt(enumerate_family(family, mods).size()));
    }
}

TEST_CASE("triple counts: self-conjugate brute force") {
    for (auto [s, d] : std::vector<std::pair<int, int>>{
             {1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 2}, {4, 1},
             {3, 4}, {4, 3}, {5, 1}, {5, 2}, {2, 5}, {6, 1}, {5, 4}}) {
        std::vector<int> mods = {s, s + d, s + 2 * d};
        int W = (s * s - 1) * ((s + d) * (s + d) - 1) / 24;
        CHECK(count_triple(Family::SC, s, d) ==
              brute_self_conjugate_cores(mods, W));
    }
}

TEST_CASE("free Motzkin path counts") {
    CHECK(motzkin_count(1, 1, MotzkinCountVariant::A) == 2); // DF, FD
    CHECK(motzkin_count(1, 1, MotzkinCountVariant::B) == 1); // DF
    CHECK(motzkin_count(2, 1, MotzkinCountVariant::A) == 5);
    CHECK(motzkin_count(2, 1, MotzkinCountVariant::B) == 3);
    CHECK(motzkin_count(2, 1, MotzkinCountVariant::C) == 4);
    const std::vector<std::string> none;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            CHECK(motzkin_count(a, b, MotzkinCountVariant::A) ==
                  BigInt(enumerate_motzkin(a + b, -b, {"U"}, none).size()));
            CHECK(motzkin_count(a, b, MotzkinCountVariant::B) ==
                  BigInt(enumerate_motzkin(a + b, -b, {"U"}, {"D"}).size()));
            CHECK(motzkin_count(a, b, MotzkinCountVariant::C) ==
                  BigInt(enumerate_motzkin(a + b, -b, {"U"}, {"U"}).size()));
        }
    CHECK_THROWS_AS(motzkin_count(0, 1, MotzkinCountVariant::A),
                    std::invalid_argument);
}

TEST_CASE("size orderings") {
    auto r = size_order_report(3, 2);
    CHECK(r.parity_case == 'a');
    CHECK(r.sc == 2);
    CHECK(r.bc == 3);
    CHECK(r.strict_ordering_holds);
    CHECK(r.expected_ordering_holds);
    CHECK(r.relation == "sc<bc=cs=dd");

    r = size_order_report(3, 1);
    CHECK(r.parity_case == 'b');
    CHECK(r.strict_ordering_holds);
    CHECK(r.relation == "sc=dd<bc=cs");

    r = size_order_report(8, 3);
    CHECK(r.parity_case == 'c');
    CHECK(r.strict_ordering_holds);
    CHECK(r.relation == "dd<cs<sc=bc");

    r = size_order_report(4, 1);
    CHECK(r.parity_case == 'c');
    CHECK_FALSE(r.strict_ordering_holds);
    CHECK(r.expected_ordering_holds); // known degenerate instance
    CHECK(r.relation == "dd<sc=bc=cs");

    r = size_order_report(2, 1);
    CHECK_FALSE(r.strict_ordering_holds);
    CHECK(r.expected_ordering_holds);

    r = size_order_report(1, 2);
    CHECK(r.expected_ordering_holds); // s = 1: all four counts are 1
    CHECK(r.sc == 1);
    CHECK(r.relation == "sc=bc=cs=dd");
}
