#pragma once

#include <string>
#include <vector>

namespace simcore::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail; // instance counts on success, first mismatch on failure
};

/// Pair sweeps run over all coprime 2 <= s < t <= max_t.
Check pair_counts_bc(int max_t = 13);      // enumerated |BC| vs binomial closed form
Check pair_counts_dd_cs(int max_t = 13);   // enumerated |DD|, |CS| vs closed forms,
                                           // CS at t = s+1 vs the consecutive-pair form
Check ne_bijections(int max_t = 13);       // path round trips, M(P) laws, subfamily
                                           // path classes, pinned path fixtures

/// Triple sweeps run over all coprime s, d >= 1 with s + 2d <= max_s2d.
Check triple_counts(int max_s2d = 21);     // enumerated = closed form = path count
Check motzkin_bijections(int max_s2d = 21);// abacus path round trips + pinned fixtures
Check motzkin_closed_forms(int max_ab = 8);// three closed forms vs path enumeration
Check abacus_structure(int max_s2d = 21);  // label uniqueness, increment bounds,
                                           // bead contiguity, boundary values
Check size_orderings(int max_s2d = 21);    // count comparisons per parity case

/// Bar/hook structure over strict partitions with parts <= max_part and at
/// most max_len parts: bar rows = shifted hook rows, characterization =
/// direct membership for all three families, moduli 1..40.
Check partition_structure(int max_part = 20, int max_len = 8);

/// Generating functions vs weight-by-weight enumeration, n <= max_n, moduli
/// 2..max_s, plus the cross-family coefficient identities.
Check series_match(int max_s = 8, int max_n = 30);

/// Pinned numeric fixtures: hook/bar tables, diagram entries, path images,
/// abacus functions and paths.
std::vector<Check> figures_suite();

std::vector<Check> pair_suite(int max_t = 13);
std::vector<Check> triple_suite(int max_s2d = 21);
std::vector<Check> series_suite(int max_s = 8, int max_n = 30);

} // namespace simcore::verify
