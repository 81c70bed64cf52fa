#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simcore/errors.hpp"

namespace simcore {

/// Integer partition: weakly decreasing positive parts.  Immutable value type;
/// the empty partition is a first-class value.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_.at(i); }           // 0-based
    std::size_t length() const { return parts_.size(); }
    long long weight() const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// Parse "7,6,3,2"; "-" and "" denote the empty partition.
    static Partition parse(const std::string& text);
    std::string str() const; // "7,6,3,2", "-" when empty

  private:
    std::vector<int> parts_;
};

/// Partition with strictly decreasing parts.
class StrictPartition {
  public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return parts_.at(i); }           // 0-based
    std::size_t length() const { return parts_.size(); }
    long long weight() const;
    bool empty() const { return parts_.empty(); }
    bool contains(int value) const;

    Partition as_partition() const { return Partition(parts_); }

    bool operator==(const StrictPartition&) const = default;
    auto operator<=>(const StrictPartition&) const = default;

    static StrictPartition parse(const std::string& text);
    std::string str() const;

  private:
    std::vector<int> parts_;
};

/// Hook/bar tables are ragged: row i of a hook table has lambda_i entries;
/// row i of a shifted table occupies columns i..i+lambda_i-1 of S(lambda)
/// but is stored dense, left-justified.
using LengthTable = std::vector<std::vector<int>>;

Partition conjugate(const Partition& p);

/// hooks[i][j] = arm + leg + 1 of box (i,j) of the Young diagram, 0-based.
LengthTable hook_lengths(const Partition& p);

/// No hook length of p is divisible by s.
bool is_s_core(const Partition& p, int s);

bool is_self_conjugate(const Partition& p);

/// Shifted hook lengths of the shifted Young diagram S(lambda).
/// Row i (0-based) lists h*_{i,j} for diagram columns j = i..i+lambda_i-1.
LengthTable shifted_hook_lengths(const StrictPartition& p);

/// Bar lengths of lambda, row i = bars through row i (lambda_i entries,
/// decreasing).  Computed independently of shifted_hook_lengths; the two
/// agree row by row, and the tests check that rather than assume it.
LengthTable bar_lengths(const StrictPartition& p);

/// s appears among no bar lengths.  (Membership, not divisibility: a bar
/// length that is a proper multiple of s does not disqualify.)
bool is_bar_core(const StrictPartition& p, int s);

/// Characterization-based bar-core test:
///   (a) s is not a part;
///   (b) every part > s has its descent part - s present;
///   (c) no two distinct parts sum to a multiple of s, except that when s is
///       even both parts may be congruent to s/2 (mod s).
bool is_bar_core_char(const StrictPartition& p, int s);

/// Doubled distinct partition D(lambda): Frobenius symbol
/// (lambda_1 ... lambda_r | lambda_1 - 1 ... lambda_r - 1).
Partition doubled_distinct(const StrictPartition& p);

/// No hook length of D(lambda) is divisible by s.
bool is_dd_core(const StrictPartition& p, int s);

/// Characterization: bar-core, and when s is even s/2 is not a part.
bool is_dd_core_char(const StrictPartition& p, int s);

/// No shifted hook length of S(lambda) is divisible by s.
bool is_csyd(const StrictPartition& p, int s);

/// Characterization: bar-core, and when s is even 3s/2 is not a part.
bool is_csyd_char(const StrictPartition& p, int s);

/// Diagnostics: nullopt if the partition belongs to the family for modulus s,
/// otherwise a message naming the violated characterization clause.
std::optional<std::string> bar_core_violation(const StrictPartition& p, int s);
std::optional<std::string> dd_core_violation(const StrictPartition& p, int s);
std::optional<std::string> csyd_violation(const StrictPartition& p, int s);

} // namespace simcore
