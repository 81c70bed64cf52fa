#pragma once

#include <vector>

#include "simcore/family.hpp"
#include "simcore/partition.hpp"
#include "simcore/qseries.hpp"

namespace simcore {

struct EnumerationSpec {
    Family family = Family::BC;
    std::vector<int> moduli;  // one or more, each >= 1
    int part_bound = 0;       // parts range over 1..part_bound
};

/// Largest part that needs considering: ceil(s*t/2) over the coprime pair of
/// moduli with the smallest product, clamped below at max(moduli).
/// Throws HypothesisError when no coprime pair exists.
int default_part_bound(const std::vector<int>& moduli);

/// All members with parts <= spec.part_bound, sorted lexicographically
/// (parts compared largest-first).  Throws std::invalid_argument when
/// part_bound < max(moduli) or the family is SC.
std::vector<StrictPartition> enumerate_family(const EnumerationSpec& spec);

/// Convenience: enumerate with the default part bound.
std::vector<StrictPartition> enumerate_family(Family family, const std::vector<int>& moduli);

/// Coefficient n counts members of weight n (weight of the doubling for DD;
/// SC counts self-conjugate s-core partitions of n).  Single modulus.
QSeries count_by_weight(Family family, int s, int max_n);

/// All strict partitions of n, parts strictly decreasing.
std::vector<StrictPartition> strict_partitions_of(int n);

/// All partitions of n.
std::vector<Partition> partitions_of(int n);

} // namespace simcore
