#include "simcore/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "simcore/abacus.hpp"
#include "simcore/counting.hpp"
#include "simcore/enumerate.hpp"
#include "simcore/errors.hpp"
#include "simcore/partition.hpp"
#include "simcore/qseries.hpp"
#include "simcore/yinyang.hpp"

namespace simcore::verify {

namespace {

struct Tally {
    std::string name;
    long long instances = 0;
    std::vector<std::string> failures;
    long long suppressed = 0;

    void fail(const std::string& msg) {
        if (failures.size() < 4) failures.push_back(msg);
        else ++suppressed;
    }
    void expect(bool ok, const std::string& msg) {
        if (!ok) fail(msg);
    }
    Check done() const {
        Check c;
        c.name = name;
        c.pass = failures.empty();
        if (c.pass) {
            c.detail = std::to_string(instances) + " instances, 0 violations";
        } else {
            std::string d;
            for (const auto& f : failures) d += (d.empty() ? "" : "; ") + f;
            if (suppressed) d += "; +" + std::to_string(suppressed) + " more";
            c.detail = d;
        }
        return c;
    }
};

std::vector<std::pair<int, int>> coprime_pairs(int max_t) {
    std::vector<std::pair<int, int>> out;
    for (int s = 2; s < max_t; ++s)
        for (int t = s + 1; t <= max_t; ++t)
            if (std::gcd(s, t) == 1) out.emplace_back(s, t);
    return out;
}

std::vector<std::pair<int, int>> coprime_triples(int max_s2d) {
    std::vector<std::pair<int, int>> out;
    for (int d = 1; 2 * d + 1 <= max_s2d; ++d)
        for (int s = 1; s + 2 * d <= max_s2d; ++s)
            if (std::gcd(s, d) == 1) out.emplace_back(s, d);
    return out;
}

std::string inst(int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; }

bool family_member(Family f, const StrictPartition& p, const std::vector<int>& moduli) {
    for (int m : moduli) {
        bool ok = (f == Family::BC)   ? is_bar_core(p, m)
                  : (f == Family::CS) ? is_csyd(p, m)
                                      : is_dd_core(p, m);
        if (!ok) return false;
    }
    return true;
}

const Family kPathFamilies[] = {Family::BC, Family::CS, Family::DD};

} // namespace

Check pair_counts_bc(int max_t) {
    Tally t{"pair counts: bar-cores vs binomial closed form"};
    for (auto [s, u] : coprime_pairs(max_t)) {
        ++t.instances;
        BigInt brute = enumerate_family(Family::BC, {s, u}).size();
        BigInt formula = count_pair(Family::BC, s, u);
        t.expect(brute == formula, "bc" + inst(s, u) + ": enumerated " + brute.str() +
                                       " vs formula " + formula.str());
    }
    return t.done();
}

Check pair_counts_dd_cs(int max_t) {
    Tally t{"pair counts: doubled-distinct and shifted vs closed forms"};
    for (auto [s, u] : coprime_pairs(max_t)) {
        ++t.instances;
        BigInt dd_brute = enumerate_family(Family::DD, {s, u}).size();
        BigInt dd_formula = count_pair(Family::DD, s, u);
        t.expect(dd_brute == dd_formula, "dd" + inst(s, u) + ": enumerated " + dd_brute.str() +
                                             " vs formula " + dd_formula.str());
        BigInt cs_brute = enumerate_family(Family::CS, {s, u}).size();
        BigInt cs_formula = count_pair(Family::CS, s, u);
        t.expect(cs_brute == cs_formula, "cs" + inst(s, u) + ": enumerated " + cs_brute.str() +
                                             " vs formula " + cs_formula.str());
    }
    for (int s = 2; s < max_t; ++s) {
        ++t.instances;
        t.expect(count_pair(Family::CS, s, s + 1) == consecutive_csyd_count(s),
                 "cs consecutive-pair specialization fails at s=" + std::to_string(s));
    }
    return t.done();
}

Check ne_bijections(int max_t) {
    Tally t{"NE-path bijections: round trips, path images, subfamily classes"};
    for (auto [s, u] : coprime_pairs(max_t)) {
        ++t.instances;
        YinYangDiagram dg = YinYangDiagram::for_pair(s, u);
        auto members = enumerate_family(Family::BC, {s, u});
        std::set<StrictPartition> member_set(members.begin(), members.end());

        auto paths = all_ne_paths(dg.cols(), dg.rows());
        t.expect(BigInt(paths.size()) == binomial(dg.rows() + dg.cols(), dg.rows()),
                 "path census broken at " + inst(s, u));
        t.expect(paths.size() == members.size(),
                 inst(s, u) + ": " + std::to_string(paths.size()) + " paths vs " +
                     std::to_string(members.size()) + " members");

        std::set<StrictPartition> image;
        for (const auto& p : paths) {
            StrictPartition m = from_path(dg, p);
            image.insert(m);
            try {
                if (to_path(dg, m) != p) t.fail(inst(s, u) + ": path round trip broke at " + p);
            } catch (const DomainViolation& e) {
                t.fail(inst(s, u) + ": from_path image rejected by to_path: " + e.what());
            }
        }
        t.expect(image == member_set, inst(s, u) + ": path image differs from enumerated family");

        for (const auto& m : members) {
            std::string p;
            try {
                p = to_path(dg, m);
            } catch (const DomainViolation& e) {
                t.fail(inst(s, u) + ": member " + m.str() + " rejected: " + e.what());
                continue;
            }
            std::set<long long> want(m.parts().begin(), m.parts().end());
            if (path_region_sets(dg, p) != want) {
                t.fail(inst(s, u) + ": M(path) != parts for " + m.str());
                continue;
            }
            if (s % 2 == 0 || u % 2 == 0) {
                bool dd = is_dd_core(m, s) && is_dd_core(m, u);
                bool cs = is_csyd(m, s) && is_csyd(m, u);
                t.expect(dd == ends_with_n(p),
                         inst(s, u) + ": doubled-distinct path class broken for " + m.str());
                t.expect(cs == (ends_with_n(p) || ends_with_ne(p)),
                         inst(s, u) + ": shifted path class broken for " + m.str());
            }
        }

        if (s % 2 == 0 || u % 2 == 0) {
            int e = s % 2 == 0 ? s : u;
            int o = s % 2 == 0 ? u : s;
            t.expect(BigInt(dd_paths(e, o).size()) == count_pair(Family::DD, s, u),
                     inst(s, u) + ": restricted path count != dd closed form");
            t.expect(BigInt(csyd_paths(e, o).size()) == count_pair(Family::CS, s, u),
                     inst(s, u) + ": restricted path count != cs closed form");
        }
    }

    // Pinned path fixtures.
    ++t.instances;
    YinYangDiagram a913 = YinYangDiagram::build(DiagramKind::A, 9, 13);
    t.expect(to_path(a913, StrictPartition({12, 4, 3, 2})) == "NEENNEEEEN",
             "A(9,13) path of (12,4,3,2) drifted");
    t.expect(to_path(a913, StrictPartition{}) == "ENENEENENE",
             "A(9,13) path of the empty partition drifted");
    YinYangDiagram b813 = YinYangDiagram::build(DiagramKind::B, 8, 13);
    t.expect(path_region_sets(b813, "NEENNEEEEN") == std::set<long long>({15, 7, 5, 2}),
             "B(8,13) region set of NEENNEEEEN drifted");
    t.expect(to_path(b813, StrictPartition({15, 7, 5, 2})) == "NEENNEEEEN",
             "B(8,13) path of (15,7,5,2) drifted");
    return t.done();
}

Check triple_counts(int max_s2d) {
    Tally t{"triple counts: enumeration vs closed forms vs path sets"};
    for (auto [s, d] : coprime_triples(max_s2d)) {
        std::vector<int> moduli{s, s + d, s + 2 * d};
        for (Family f : kPathFamilies) {
            ++t.instances;
            BigInt brute = enumerate_family(f, moduli).size();
            BigInt formula = count_triple(f, s, d);
            BigInt paths = enumerate_motzkin(family_path_set(s, d, f)).size();
            t.expect(brute == formula && brute == paths,
                     std::string(family_name(f)) + inst(s, d) + ": enumerated " + brute.str() +
                         ", formula " + formula.str() + ", paths " + paths.str());
        }
    }
    ++t.instances;
    t.expect(enumerate_family(Family::BC, {3, 5, 7}).size() == 3, "|bc(3,5,7)| != 3");
    t.expect(enumerate_family(Family::DD, {3, 4, 5}).size() == 2, "|dd(3,4,5)| != 2");
    return t.done();
}

Check motzkin_bijections(int max_s2d) {
    Tally t{"abacus path bijections: round trips and pinned fixtures"};
    for (auto [s, d] : coprime_triples(max_s2d)) {
        std::vector<int> moduli{s, s + d, s + 2 * d};
        for (Family f : kPathFamilies) {
            ++t.instances;
            auto members = enumerate_family(f, moduli);
            std::set<StrictPartition> member_set(members.begin(), members.end());
            auto paths = enumerate_motzkin(family_path_set(s, d, f));
            std::set<std::string> path_set(paths.begin(), paths.end());

            std::set<StrictPartition> image;
            for (const auto& p : paths) {
                try {
                    image.insert(from_motzkin(s, d, p, f));
                } catch (const DomainViolation& e) {
                    t.fail(std::string(family_name(f)) + inst(s, d) + ": path " + p +
                           " rejected: " + e.what());
                }
            }
            t.expect(image == member_set, std::string(family_name(f)) + inst(s, d) +
                                              ": path image differs from enumerated family");

            for (const auto& m : members) {
                std::string p;
                try {
                    p = to_motzkin(s, d, m, f);
                } catch (const DomainViolation& e) {
                    t.fail(std::string(family_name(f)) + inst(s, d) + ": member " + m.str() +
                           " rejected: " + e.what());
                    continue;
                }
                t.expect(path_set.count(p) == 1, std::string(family_name(f)) + inst(s, d) +
                                                     ": path " + p + " outside the family path set");
                if (path_set.count(p) && from_motzkin(s, d, p, f) != m)
                    t.fail(std::string(family_name(f)) + inst(s, d) + ": round trip broke at " +
                           m.str());
            }
        }
    }

    ++t.instances;
    t.expect(to_motzkin(7, 4, StrictPartition({8, 4, 2, 1}), Family::BC) == "FFDDDU",
             "(7,4) path of (8,4,2,1) drifted");
    t.expect(abacus_function(7, 4, StrictPartition({8, 4, 2, 1})).extended() ==
                 std::vector<long long>({0, 0, 0, -1, -2, -3, -2}),
             "(7,4) abacus function of (8,4,2,1) drifted");
    t.expect(from_motzkin(7, 4, "FFDDDU", Family::BC) == StrictPartition({8, 4, 2, 1}),
             "(7,4) member of FFDDDU drifted");
    t.expect(to_motzkin(7, 3, StrictPartition({8, 3, 1}), Family::BC) == "FDDDUF",
             "(7,3) path of (8,3,1) drifted");
    t.expect(to_motzkin(7, 3, StrictPartition({5, 3, 1}), Family::BC) == "FDDFUD",
             "(7,3) path of (5,3,1) drifted");
    t.expect(to_motzkin(8, 3, StrictPartition({7, 6, 3}), Family::BC) == "FFDDDU",
             "(8,3) path of (7,6,3) drifted");
    t.expect(from_motzkin(7, 3, "FDDFUD", Family::BC) == StrictPartition({5, 3, 1}),
             "(7,3) member of FDDFUD drifted");
    return t.done();
}

Check motzkin_closed_forms(int max_ab) {
    Tally t{"free-Motzkin closed forms vs direct path enumeration"};
    const std::vector<std::string> no_suffix;
    for (int a = 1; a <= max_ab; ++a)
        for (int b = 1; b <= max_ab; ++b) {
            ++t.instances;
            BigInt ea = enumerate_motzkin(a + b, -b, {"U"}, no_suffix).size();
            BigInt eb = enumerate_motzkin(a + b, -b, {"U"}, {"D"}).size();
            BigInt ec = enumerate_motzkin(a + b, -b, {"U"}, {"U"}).size();
            t.expect(motzkin_count(a, b, MotzkinCountVariant::A) == ea,
                     "variant A wrong at " + inst(a, b));
            t.expect(motzkin_count(a, b, MotzkinCountVariant::B) == eb,
                     "variant B wrong at " + inst(a, b));
            t.expect(motzkin_count(a, b, MotzkinCountVariant::C) == ec,
                     "variant C wrong at " + inst(a, b));
        }
    return t.done();
}

Check abacus_structure(int max_s2d) {
    Tally t{"abacus structure: label uniqueness, increments, contiguity, boundary"};
    for (auto [s, d] : coprime_triples(max_s2d)) {
        ++t.instances;
        AbacusDiagram a(s, d);
        const int m = a.period();

        for (long long h = 1; h <= 3LL * m; ++h) {
            int hits = 0;
            for (int j = 0; j <= a.max_col(); ++j) {
                if ((1LL * d * j - h) % m == 0) ++hits;
                if ((1LL * d * j + h) % m == 0) ++hits;
            }
            bool ambiguous = (h % m == 0) || (m % 2 == 0 && h % m == m / 2);
            t.expect(hits == (ambiguous ? 2 : 1),
                     inst(s, d) + ": label multiplicity " + std::to_string(hits) + " for h=" +
                         std::to_string(h));
            AbacusPosition pos = a.position_of(h);
            long long label = a.label(pos.row, pos.col);
            t.expect(label == h || (!ambiguous && label == -h),
                     inst(s, d) + ": position_of(" + std::to_string(h) + ") landed on label " +
                         std::to_string(label));
        }

        std::vector<int> moduli{s, s + d, s + 2 * d};
        for (Family f : kPathFamilies) {
            for (const auto& p : enumerate_family(f, moduli)) {
                AbacusFunction fn = abacus_function(s, d, p);
                const auto& fv = fn.values;
                t.expect(fv[0] == 0, inst(s, d) + ": f(0) != 0 for " + p.str());
                if (fv.size() > 1)
                    t.expect(fv[1] == 0 || fv[1] == -1,
                             inst(s, d) + ": f(1) = " + std::to_string(fv[1]) + " for " + p.str());
                for (std::size_t j = 1; j < fv.size(); ++j)
                    t.expect(std::llabs(fv[j] - fv[j - 1]) <= 1,
                             inst(s, d) + ": |f(" + std::to_string(j) + ") - f(" +
                                 std::to_string(j - 1) + ")| > 1 for " + p.str());

                // Bead contiguity per column.
                std::vector<std::set<long long>> beads(a.max_col() + 1);
                for (int part : p.parts()) {
                    AbacusPosition pos = a.position_of(part);
                    beads[pos.col].insert(pos.row);
                }
                for (int j = 0; j <= a.max_col(); ++j) {
                    long long rj = a.r(j);
                    long long pos_count = 0, neg_count = 0;
                    for (long long row : beads[j]) (row >= rj ? pos_count : neg_count)++;
                    bool contiguous = true;
                    for (long long i = rj; i < rj + pos_count; ++i)
                        if (!beads[j].count(i)) contiguous = false;
                    for (long long i = rj - neg_count; i < rj; ++i)
                        if (!beads[j].count(i)) contiguous = false;
                    t.expect(contiguous,
                             inst(s, d) + ": beads not contiguous in column " + std::to_string(j) +
                                 " for " + p.str());
                    t.expect(!(pos_count > 0 && neg_count > 0),
                             inst(s, d) + ": beads on both sides of r(j) in column " +
                                 std::to_string(j) + " for " + p.str());
                    long long expected_f = pos_count > 0 ? rj + pos_count - 1 : rj - neg_count - 1;
                    t.expect(fv[j] == expected_f, inst(s, d) + ": f(" + std::to_string(j) +
                                                      ") disagrees with bead layout for " + p.str());
                }

                // Boundary values at the last column.
                long long last = fv.back();
                if (d % 2 == 0) {
                    t.expect(last == -d / 2 || last == -d / 2 - 1,
                             inst(s, d) + ": boundary value f(max) = " + std::to_string(last) +
                                 " for " + p.str());
                } else if (f == Family::DD) {
                    t.expect(last == -(d + 1) / 2,
                             inst(s, d) + ": dd boundary f(max) = " + std::to_string(last) +
                                 " for " + p.str());
                } else if (s % 2 == 1) { // bc/cs, s and d odd
                    bool ok = last == -(d + 1) / 2 ||
                              (last == -(d - 1) / 2 && fv[fv.size() - 2] == -(d + 1) / 2);
                    t.expect(ok, inst(s, d) + ": coupled boundary broken for " + p.str());
                }
            }
        }
    }
    return t.done();
}

Check partition_structure(int max_part, int max_len) {
    Tally t{"bar lengths = shifted hooks; characterizations = direct membership"};
    // Divisor masks for hook values (all hooks here are <= 2*max_part).
    const int max_h = 2 * max_part;
    std::vector<std::uint64_t> div_mask(max_h + 1, 0);
    for (int dv = 1; dv <= 40; ++dv)
        for (int h = dv; h <= max_h; h += dv) div_mask[h] |= 1ULL << dv;

    std::vector<int> acc;
    auto visit = [&](const StrictPartition& p) {
        ++t.instances;
        auto bars = bar_lengths(p);
        auto shifted = shifted_hook_lengths(p);
        if (bars != shifted) {
            t.fail("bar rows != shifted hook rows for " + p.str());
            return;
        }
        std::uint64_t bar_mask = 0, cs_div = 0, dd_div = 0;
        for (const auto& row : bars)
            for (int b : row) {
                bar_mask |= 1ULL << b;
                cs_div |= div_mask[b];
            }
        for (const auto& row : hook_lengths(doubled_distinct(p)))
            for (int h : row) dd_div |= div_mask[h];

        for (int s = 1; s <= 40; ++s) {
            bool bc_direct = !(bar_mask >> s & 1);
            bool cs_direct = !(cs_div >> s & 1);
            bool dd_direct = !(dd_div >> s & 1);
            if (bc_direct != is_bar_core_char(p, s))
                t.fail("bar-core characterization differs at s=" + std::to_string(s) + " for " +
                       p.str());
            if (cs_direct != is_csyd_char(p, s))
                t.fail("shifted characterization differs at s=" + std::to_string(s) + " for " +
                       p.str());
            if (dd_direct != is_dd_core_char(p, s))
                t.fail("doubled-distinct characterization differs at s=" + std::to_string(s) +
                       " for " + p.str());
            if (s % 2 == 1 && !(bc_direct == cs_direct && cs_direct == dd_direct))
                t.fail("odd-modulus family coincidence broken at s=" + std::to_string(s) +
                       " for " + p.str());
        }
    };
    auto rec = [&](auto&& self, int max_next) -> void {
        visit(StrictPartition(acc));
        if (static_cast<int>(acc.size()) >= max_len) return;
        for (int v = max_next; v >= 1; --v) {
            acc.push_back(v);
            self(self, v - 1);
            acc.pop_back();
        }
    };
    rec(rec, max_part);
    return t.done();
}

Check size_orderings(int max_s2d) {
    Tally t{"family size orderings per parity case"};
    for (auto [s, d] : coprime_triples(max_s2d)) {
        ++t.instances;
        SizeOrderReport r = size_order_report(s, d);
        t.expect(r.expected_ordering_holds,
                 inst(s, d) + " case " + std::string(1, r.parity_case) + ": got " + r.relation);
        bool degenerate = (s == 1) || ((s == 2 || s == 4) && d == 1);
        t.expect(r.strict_ordering_holds == !degenerate,
                 inst(s, d) + ": degenerate-instance list drifted (relation " + r.relation + ")");
    }
    ++t.instances;
    {
        SizeOrderReport r31 = size_order_report(3, 1);
        t.expect(r31.sc == r31.dd && r31.sc == 2, "(3,1): sc and dd should both be 2");
        SizeOrderReport r41 = size_order_report(4, 1);
        t.expect(r41.sc == r41.bc && r41.sc == 5, "(4,1): sc and bc should both be 5");
        SizeOrderReport r32 = size_order_report(3, 2);
        t.expect(r32.strict_ordering_holds && r32.parity_case == 'a', "(3,2): ordering broken");
    }
    return t.done();
}

Check series_match(int max_s, int max_n) {
    Tally t{"generating functions vs weight enumeration and identities"};
    for (int s = 2; s <= max_s; ++s)
        for (Family f : {Family::SC, Family::BC, Family::CS, Family::DD}) {
            ++t.instances;
            QSeries series = series_family(f, s, max_n);
            QSeries oracle = count_by_weight(f, s, max_n);
            for (int n = 0; n <= max_n; ++n) {
                if (series.coeff(n) != oracle.coeff(n)) {
                    t.fail(std::string(family_name(f)) + " series wrong at s=" +
                           std::to_string(s) + ", n=" + std::to_string(n) + ": " +
                           series.coeff(n).str() + " vs " + oracle.coeff(n).str());
                    break;
                }
                if (series.coeff(n) < 0) {
                    t.fail(std::string(family_name(f)) + " negative coefficient at s=" +
                           std::to_string(s) + ", n=" + std::to_string(n));
                    break;
                }
            }
            if (f == Family::DD)
                for (int n = 1; n <= max_n; n += 2)
                    if (series.coeff(n) != 0) {
                        t.fail("dd series has odd-degree coefficient at s=" + std::to_string(s));
                        break;
                    }
        }

    for (int s = 3; s <= std::min(max_s, 7); s += 2) {
        ++t.instances;
        QSeries dd = series_family(Family::DD, s, 2 * (max_n / 2));
        QSeries bc = series_family(Family::BC, s, 2 * (max_n / 2));
        for (int n = 0; n <= max_n / 2; ++n)
            if (dd.coeff(2 * n) != bc.coeff(n)) {
                t.fail("odd-modulus dd(2n) = bc(n) fails at s=" + std::to_string(s) +
                       ", n=" + std::to_string(n));
                break;
            }
    }

    for (int s = 2; s <= max_s; s += 2) {
        ++t.instances;
        QSeries dd = series_family(Family::DD, s, 2 * max_n);
        QSeries bc = series_family(Family::BC, s, max_n);
        QSeries cs = series_family(Family::CS, s, max_n);
        for (int n = 0; n <= max_n; ++n) {
            BigInt bc_sum = 0;
            for (long long i = 0; 2LL * n - 1LL * i * i * s >= 0; ++i)
                bc_sum += dd.coeff(static_cast<int>(2LL * n - 1LL * i * i * s));
            if (bc.coeff(n) != bc_sum) {
                t.fail("even-modulus bc recurrence fails at s=" + std::to_string(s) +
                       ", n=" + std::to_string(n));
                break;
            }
            BigInt cs_sum = dd.coeff(2 * n);
            if (2 * n - s >= 0) cs_sum += dd.coeff(2 * n - s);
            if (cs.coeff(n) != cs_sum) {
                t.fail("even-modulus cs recurrence fails at s=" + std::to_string(s) +
                       ", n=" + std::to_string(n));
                break;
            }
        }
    }
    return t.done();
}

std::vector<Check> figures_suite() {
    std::vector<Check> out;
    auto add = [&](const std::string& name, auto&& body) {
        Tally t{name};
        body(t);
        out.push_back(t.done());
    };

    add("hook lengths of (7,6,3,2)", [](Tally& t) {
        ++t.instances;
        Partition p({7, 6, 3, 2});
        t.expect(conjugate(p) == Partition({4, 4, 3, 2, 2, 2, 1}), "conjugate drifted");
        t.expect(hook_lengths(p)[0][1] == 9, "hook (1,2) drifted");
        t.expect(!is_s_core(p, 3) && !is_s_core(p, 9), "hook divisibility drifted");
    });

    add("shifted hook table of (7,6,3,2)", [](Tally& t) {
        ++t.instances;
        StrictPartition p({7, 6, 3, 2});
        LengthTable want{{13, 10, 9, 7, 6, 3, 2}, {9, 8, 6, 5, 2, 1}, {5, 3, 2}, {2, 1}};
        t.expect(shifted_hook_lengths(p) == want, "shifted hook table drifted");
        t.expect(shifted_hook_lengths(p)[1][1] == 8, "shifted hook (2,3) drifted");
        t.expect(bar_lengths(p) == want, "bar length table drifted");
    });

    add("doubling of (7,6,3,2) and its hooks", [](Tally& t) {
        ++t.instances;
        StrictPartition p({7, 6, 3, 2});
        Partition dd = doubled_distinct(p);
        t.expect(dd == Partition({8, 8, 6, 6, 4, 2, 2}), "doubling drifted");
        t.expect(dd.weight() == 2 * p.weight(), "doubling weight drifted");
        t.expect(doubled_distinct(StrictPartition({1})) == Partition({2}), "doubling of (1) drifted");
        // Hooks of the doubling in rows i at columns >= i: bar lengths of row i
        // together with 2*lambda_i.
        LengthTable hooks = hook_lengths(dd);
        LengthTable bars = bar_lengths(p);
        for (std::size_t i = 0; i < p.length(); ++i) {
            std::multiset<int> region(hooks[i].begin() + static_cast<long>(i), hooks[i].end());
            std::multiset<int> expected(bars[i].begin(), bars[i].end());
            expected.insert(2 * p.part(i));
            t.expect(region == expected,
                     "doubling hook row " + std::to_string(i + 1) + " drifted");
        }
    });

    add("bar-core moduli of (7,6,3,2)", [](Tally& t) {
        StrictPartition p({7, 6, 3, 2});
        std::set<int> bars{1, 2, 3, 5, 6, 7, 8, 9, 10, 13};
        for (int s = 1; s <= 30; ++s) {
            ++t.instances;
            t.expect(is_bar_core(p, s) == !bars.count(s),
                     "bar-core status drifted at s=" + std::to_string(s));
        }
        ++t.instances;
        t.expect(is_bar_core(p, 4) && !is_bar_core(p, 8),
                 "multiple-of-modulus caveat drifted");
    });

    add("diagram entries", [](Tally& t) {
        ++t.instances;
        YinYangDiagram a = YinYangDiagram::build(DiagramKind::A, 9, 13);
        t.expect(a.entry(1, 1) == -43 && a.entry(4, 6) == 41, "A(9,13) corners drifted");
        t.expect(a.positive_entries() ==
                     std::vector<long long>({2, 6, 15, 1, 10, 19, 28, 5, 14, 23, 32, 41}),
                 "A(9,13) positive entries drifted");
        YinYangDiagram b = YinYangDiagram::build(DiagramKind::B, 8, 13);
        t.expect(b.entry(1, 1) == -44, "B(8,13) corner drifted");
        YinYangDiagram b45 = YinYangDiagram::build(DiagramKind::B, 4, 5);
        t.expect(b45.entry(1, 1) == -6 && b45.entry(1, 2) == -2 && b45.entry(2, 1) == -1 &&
                     b45.entry(2, 2) == 3,
                 "B(4,5) entries drifted");
    });

    add("path images in A(9,13) and B(8,13)", [](Tally& t) {
        ++t.instances;
        YinYangDiagram a = YinYangDiagram::build(DiagramKind::A, 9, 13);
        t.expect(path_region_sets(a, "NEENNEEEEN") == std::set<long long>({12, 4, 3, 2}),
                 "A(9,13) M(NEENNEEEEN) drifted");
        t.expect(to_path(a, StrictPartition({12, 4, 3, 2})) == "NEENNEEEEN",
                 "A(9,13) path of (12,4,3,2) drifted");
        t.expect(path_region_sets(a, "NNNNEEEEEE") ==
                     std::set<long long>({3, 4, 7, 8, 12, 16, 17, 21, 25, 30, 34, 43}),
                 "A(9,13) all-N-first region drifted");
        t.expect(path_region_sets(a, "EEEEEENNNN") ==
                     std::set<long long>({1, 2, 5, 6, 10, 14, 15, 19, 23, 28, 32, 41}),
                 "A(9,13) all-E-first region drifted");
        t.expect(path_region_sets(a, "ENENEENENE").empty(), "A(9,13) empty-region path drifted");
        YinYangDiagram b = YinYangDiagram::build(DiagramKind::B, 8, 13);
        t.expect(path_region_sets(b, "NEENNEEEEN") == std::set<long long>({15, 7, 5, 2}),
                 "B(8,13) M(NEENNEEEEN) drifted");
    });

    add("subfamily path classes in B(4,5)", [](Tally& t) {
        ++t.instances;
        YinYangDiagram b = YinYangDiagram::build(DiagramKind::B, 4, 5);
        std::map<std::string, std::string> want{
            {"-", "ENEN"}, {"1", "NEEN"}, {"3", "EENN"}, {"2", "ENNE"}, {"2,1", "NENE"}};
        for (const auto& [parts, path] : want)
            t.expect(to_path(b, StrictPartition::parse(parts)) == path,
                     "B(4,5) path of (" + parts + ") drifted");
        t.expect(to_path(b, StrictPartition({6, 2, 1})) == "NNEE",
                 "B(4,5) path of (6,2,1) drifted");
        t.expect(dd_paths(4, 5).size() == 5 - 2 && csyd_paths(4, 5).size() == 5,
                 "B(4,5) subfamily path counts drifted");
        t.expect(dd_paths(2, 3).size() == 1, "B(2,3) path count drifted");
        t.expect(dd_paths(8, 13).size() == 84, "B(8,13) path count drifted");
    });

    add("abacus labels and positions", [](Tally& t) {
        ++t.instances;
        AbacusDiagram a74(7, 4);
        t.expect(a74.label(0, 0) == 0 && a74.label(-1, 1) == -7, "(7,4) labels drifted");
        t.expect(a74.position_of(8) == AbacusPosition{0, 2}, "(7,4) position of 8 drifted");
        AbacusDiagram a73(7, 3);
        t.expect(a73.label(-2, 4) == -8, "(7,3) label drifted");
        t.expect(a73.position_of(1) == AbacusPosition{-1, 3}, "(7,3) position of 1 drifted");
    });

    add("abacus functions and paths", [](Tally& t) {
        ++t.instances;
        t.expect(abacus_function(7, 4, StrictPartition({8, 4, 2, 1})).extended() ==
                     std::vector<long long>({0, 0, 0, -1, -2, -3, -2}),
                 "(7,4) abacus function drifted");
        t.expect(abacus_function(7, 3, StrictPartition({8, 3, 1})).values ==
                     std::vector<long long>({0, 0, -1, -2, -3, -2}),
                 "(7,3) abacus function drifted");
        t.expect(abacus_function(7, 4, StrictPartition{}).values ==
                     std::vector<long long>({0, -1, -1, -2, -2, -2}),
                 "(7,4) empty abacus function drifted");
        t.expect(to_motzkin(7, 4, StrictPartition({8, 4, 2, 1}), Family::BC) == "FFDDDU",
                 "(7,4) path drifted");
        t.expect(to_motzkin(7, 3, StrictPartition({8, 3, 1}), Family::BC) == "FDDDUF",
                 "(7,3) path of (8,3,1) drifted");
        t.expect(to_motzkin(7, 3, StrictPartition({5, 3, 1}), Family::BC) == "FDDFUD",
                 "(7,3) path of (5,3,1) drifted");
        t.expect(to_motzkin(8, 3, StrictPartition({7, 6, 3}), Family::BC) == "FFDDDU",
                 "(8,3) path of (7,6,3) drifted");
        t.expect(from_motzkin(7, 3, "FDDFUD", Family::BC) == StrictPartition({5, 3, 1}),
                 "(7,3) member of FDDFUD drifted");
        t.expect(from_motzkin(7, 4, "FFDDDU", Family::BC) == StrictPartition({8, 4, 2, 1}),
                 "(7,4) member of FFDDDU drifted");
    });

    return out;
}

std::vector<Check> pair_suite(int max_t) {
    return {pair_counts_bc(max_t), pair_counts_dd_cs(max_t), ne_bijections(max_t)};
}

std::vector<Check> triple_suite(int max_s2d) {
    return {triple_counts(max_s2d), motzkin_bijections(max_s2d), motzkin_closed_forms(8),
            abacus_structure(max_s2d), size_orderings(max_s2d)};
}

std::vector<Check> series_suite(int max_s, int max_n) { return {series_match(max_s, max_n)}; }

} // namespace simcore::verify
