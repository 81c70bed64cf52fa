#pragma once

#include <string>

#include "simcore/family.hpp"
#include "simcore/qseries.hpp"

namespace simcore {

/// C(n, k); any negative index or k > n gives 0.
BigInt binomial(long long n, long long k);

/// n! / (a! b! c!) for a, b, c >= 0 with a + b + c = n; otherwise 0.
BigInt multinomial(long long n, long long a, long long b, long long c);

/// Number of members for the coprime pair (s, t); HypothesisError otherwise.
BigInt count_pair(Family family, int s, int t);

/// Number of members for the moduli (s, s+d, s+2d), gcd(s, d) = 1.
BigInt count_triple(Family family, int s, int d);

/// Shifted-core count for the consecutive pair (s, s+1), s >= 2.
BigInt consecutive_csyd_count(int s);

/// Closed forms for the free-Motzkin-path counts |F(a+b, -b; {U}, X)|,
/// a, b >= 1, with X = {} (A), {D} (B), {U} (C).
enum class MotzkinCountVariant { A, B, C };
BigInt motzkin_count(int a, int b, MotzkinCountVariant variant);

struct SizeOrderReport {
    int s = 0, d = 0;
    char parity_case = '?'; // 'a': d even; 'b': s, d odd; 'c': s even
    BigInt sc, bc, cs, dd;
    bool strict_ordering_holds = false;   // the printed chain for the parity case
    bool expected_ordering_holds = false; // printed chain, or the degenerate
                                          // relation at s = 1 / (2,1) / (4,1)
    std::string relation;                 // e.g. "sc=dd<bc=cs"
};

/// Compare the four family counts for moduli (s, s+d, s+2d).  Printed chains:
/// (a) sc < bc = cs = dd; (b) sc = dd < bc = cs; (c) dd < cs < sc = bc.
/// Degenerate instances where a strict inequality collapses: s = 1 (all four
/// equal) and (s,d) = (2,1), (4,1) (cs = sc in case (c)).
SizeOrderReport size_order_report(int s, int d);

} // namespace simcore
