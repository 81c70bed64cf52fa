#pragma once

#include <set>
#include <string>
#include <vector>

#include "simcore/partition.hpp"

namespace simcore {

enum class DiagramKind { A, B };

/// Rectangular array of distinct integers attached to a coprime pair.
/// Kind A (s, t odd, 1 < s < t): (s-1)/2 rows, (t-1)/2 columns,
///   entry(i,j) = -((s+1)/2)*t + j*s + i*t            (1-based i, j).
/// Kind B (s even, t odd, coprime): s/2 rows, same columns and formula with
///   -((s+2)/2)*t in place of -((s+1)/2)*t.
class YinYangDiagram {
  public:
    static YinYangDiagram build(DiagramKind kind, int s, int t);

    /// Diagram for an arbitrary coprime pair: kind A when both odd (smaller
    /// modulus first), otherwise kind B with the even modulus in the s slot.
    static YinYangDiagram for_pair(int s, int t);

    DiagramKind kind() const { return kind_; }
    int s() const { return s_; }
    int t() const { return t_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long entry(int i, int j) const; // 1-based row/column

    std::vector<long long> positive_entries() const; // row-major order

  private:
    YinYangDiagram(DiagramKind kind, int s, int t, int rows, int cols)
        : kind_(kind), s_(s), t_(t), rows_(rows), cols_(cols) {}
    DiagramKind kind_;
    int s_, t_;
    int rows_, cols_;
};

/// Paths are strings over {N, E}, read from the lower-left corner of the
/// diagram; a full path has cols() E-steps and rows() N-steps.

/// Column heights: H(c) = number of N-steps before the c-th E-step (1-based).
std::vector<int> column_heights(const YinYangDiagram& d, const std::string& path);

/// M(P): positive entries strictly above the path together with the absolute
/// values of negative entries strictly below it.  The cell in column c at
/// height r (counted from the bottom row = 1) lies below iff H(c) >= r.
std::set<long long> path_region_sets(const YinYangDiagram& d, const std::string& path);

/// The member of the family with parts M(P).
StrictPartition from_path(const YinYangDiagram& d, const std::string& path);

/// Inverse map: marks each cell as below iff its entry e satisfies
/// (e < 0 and |e| is a part) or (e > 0 and e is not a part), reads off the
/// column heights, and validates by round trip.  Throws DomainViolation when
/// the input is not a simultaneous bar-core for the diagram's moduli or the
/// marking is not monotone.
std::string to_path(const YinYangDiagram& d, const StrictPartition& p);

/// All NE paths with the given number of E- and N-steps, lexicographic order.
std::vector<std::string> all_ne_paths(int e_steps, int n_steps);

bool ends_with_n(const std::string& path);
bool ends_with_ne(const std::string& path);

/// Path images of the doubled-distinct and shifted subfamilies inside the
/// kind-B diagram for (s even, t odd): paths ending in N, resp. ending in N
/// or in NE.  Throws HypothesisError on bad parity or non-coprime moduli.
std::vector<std::string> dd_paths(int s, int t);
std::vector<std::string> csyd_paths(int s, int t);

} // namespace simcore
