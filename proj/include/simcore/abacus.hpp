#pragma once

#include <string>
#include <vector>

#include "simcore/family.hpp"
#include "simcore/partition.hpp"

namespace simcore {

long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

struct AbacusPosition {
    long long row;
    int col;
    bool operator==(const AbacusPosition&) const = default;
};

/// The (s+d, d)-abacus for coprime s, d >= 1: columns j = 0..floor((s+d)/2),
/// unbounded rows, position (i, j) labelled (s+d)*i + d*j.
class AbacusDiagram {
  public:
    AbacusDiagram(int s, int d); // HypothesisError unless s, d >= 1 coprime

    int s() const { return s_; }
    int d() const { return d_; }
    int period() const { return s_ + d_; }
    int max_col() const { return (s_ + d_) / 2; }

    long long label(long long i, int j) const; // column out of range throws

    /// Position whose label is h or -h, for h >= 1.  When both signs occur
    /// (h a multiple of s+d, or of residue (s+d)/2 for even s+d) the position
    /// with the positive label wins.
    AbacusPosition position_of(long long h) const;

    /// Least row whose label in column j is positive.
    long long r(int j) const;

  private:
    int s_, d_;
};

/// f(j) for j = 0..max_col: the row of the highest bead with positive label
/// in column j when one exists, else the highest spacer among the
/// non-positive-labelled positions of the column.
struct AbacusFunction {
    int s = 0, d = 0;
    std::vector<long long> values; // f(0..max_col)

    /// values followed by the conventional endpoint -floor((d+1)/2) at
    /// column max_col + 1.
    std::vector<long long> extended() const;
};

AbacusFunction abacus_function(int s, int d, const StrictPartition& p);

/// Free Motzkin paths: strings over U/F/D = steps (1,1)/(1,0)/(1,-1),
/// starting at height 0.
struct MotzkinPathSpec {
    int length = 0;      // number of steps
    long long end = 0;   // final height
    std::vector<std::string> forbidden_prefixes;
    std::vector<std::string> forbidden_suffixes;
    bool appended_final_step = false; // last step is a conventional endpoint,
                                      // not an abacus column increment
    bool operator==(const MotzkinPathSpec&) const = default;
};

/// The free-Motzkin-path set in bijection with the family of simultaneous
/// cores for moduli (s, s+d, s+2d).
MotzkinPathSpec family_path_set(int s, int d, Family family);

/// Path of the member p; DomainViolation (naming the violated clause) when p
/// is not a member for the moduli (s, s+d, s+2d).
std::string to_motzkin(int s, int d, const StrictPartition& p, Family family);

/// Member with the given path; DomainViolation when the path violates the
/// family path set (length, endpoint, forbidden prefix/suffix).
StrictPartition from_motzkin(int s, int d, const std::string& path, Family family);

std::vector<std::string> enumerate_motzkin(int length, long long end,
                                           const std::vector<std::string>& forbidden_prefixes,
                                           const std::vector<std::string>& forbidden_suffixes);
std::vector<std::string> enumerate_motzkin(const MotzkinPathSpec& spec);

} // namespace simcore
