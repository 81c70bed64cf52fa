#include "simcore/counting.hpp"

#include <algorithm>
#include <numeric>

#include "simcore/errors.hpp"

namespace simcore {

BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt multinomial(long long n, long long a, long long b, long long c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != n) return 0;
    return binomial(n, a) * binomial(n - a, b);
}

namespace {

void require_coprime(int s, int t, const char* what) {
    if (s < 1 || t < 1) throw HypothesisError(std::string(what) + " must be >= 1");
    if (std::gcd(s, t) != 1)
        throw HypothesisError(std::string(what) + " must be coprime, got (" +
                              std::to_string(s) + ", " + std::to_string(t) + ")");
}

long long half_down(long long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

} // namespace

BigInt count_pair(Family family, int s, int t) {
    require_coprime(s, t, "pair moduli");
    const long long sh = s / 2, th = t / 2;
    const long long sm = (s - 1) / 2, tm = (t - 1) / 2;
    switch (family) {
        case Family::BC:
        case Family::SC: return binomial(sh + th, sh);
        case Family::DD: return binomial(sm + tm, sm);
        case Family::CS: return binomial(sm + th - 1, sm) + binomial(sh + tm - 1, tm);
    }
    throw std::invalid_argument("bad family");
}

BigInt consecutive_csyd_count(int s) {
    if (s < 2) throw std::invalid_argument("consecutive-pair count needs s >= 2");
    return binomial(s - 1, (s - 1) / 2) + binomial(s - 2, (s - 1) / 2);
}

namespace {

// Shared by bc/cs/dd for s odd, d even.
BigInt triple_odd_even(int s, int d) {
    BigInt sum = 0;
    for (long long i = 0; i <= (s - 1) / 2; ++i)
        sum += binomial((s + d - 3) / 2, i / 2) *
               binomial((s + d - 1) / 2 - i / 2, (s - 1) / 2 - i);
    return sum;
}

// Shared by bc/cs for s, d both odd.
BigInt triple_odd_odd_bc(int s, int d) {
    BigInt sum = 0;
    for (long long i = 0; i <= (s - 1) / 2; ++i)
        sum += binomial((d - 1) / 2 + i, i / 2) *
               (binomial((s + d - 2) / 2, (d - 1) / 2 + i) +
                binomial((s + d - 4) / 2, (d - 1) / 2 + i));
    return sum;
}

// bc for s even, d odd; also sc for every odd d (identical expression).
BigInt triple_motzkin_sum(int s, int d) {
    BigInt sum = 0;
    for (long long i = 0; i <= s / 2; ++i)
        sum += multinomial((s + d - 1) / 2, i / 2, (d + i) / 2, s / 2 - i);
    return sum;
}

// dd for odd d (both parities of s).
BigInt triple_dd_odd_d(int s, int d) {
    BigInt sum = 0;
    for (long long i = 0; i <= (s - 1) / 2; ++i)
        sum += multinomial((s + d - 2) / 2, i / 2, (d + i) / 2, (s - 1) / 2 - i);
    return sum;
}

// cs for s even, d odd.
BigInt triple_cs_even_odd(int s, int d) {
    BigInt sum = 0;
    for (long long i = 0; i <= (s - 2) / 2; ++i)
        sum += binomial((s + d - 3) / 2, i / 2) *
               binomial((s + d - 3) / 2 - i / 2, (s - 2) / 2 - i);
    for (long long i = 0; i <= (s - 2) / 2; ++i) {
        // Left factor per the path model |F((s+d-1)/2, -(d+3)/2; {U}, {U})|:
        // its upper index degenerates to -1 only at (s,d) = (2,1), where the
        // factor is 1, not 0.
        long long n = (s + d - 5) / 2;
        BigInt left = (n < 0 && i / 2 == 0) ? BigInt(1) : binomial(n, i / 2);
        sum += left * binomial((s + d - 1) / 2 - i / 2, (s - 2) / 2 - i);
    }
    return sum;
}

BigInt triple_sc(int s, int d) {
    if (d % 2 == 0) {
        BigInt sum = 0;
        for (long long i = 0; i <= s / 4; ++i)
            sum += multinomial((s + d - 1) / 2, i, d / 2 + i, (s - 1) / 2 - 2 * i);
        return sum;
    }
    BigInt sum = 0;
    for (long long i = 0; i <= s / 2; ++i)
        sum += multinomial((s + d - 1) / 2, i / 2, (d + i) / 2, s / 2 - i);
    return sum;
}

} // namespace

BigInt count_triple(Family family, int s, int d) {
    require_coprime(s, d, "triple parameters");
    if (s % 2 == 1 && d % 2 == 0) { // case (a)
        if (family == Family::SC) return triple_sc(s, d);
        return triple_odd_even(s, d);
    }
    if (s % 2 == 1 && d % 2 == 1) { // case (b)
        switch (family) {
            case Family::BC:
            case Family::CS: return triple_odd_odd_bc(s, d);
            case Family::DD: return triple_dd_odd_d(s, d);
            case Family::SC: return triple_sc(s, d);
        }
    }
    switch (family) { // case (c): s even, d odd
        case Family::BC: return triple_motzkin_sum(s, d);
        case Family::CS: return triple_cs_even_odd(s, d);
        case Family::DD: return triple_dd_odd_d(s, d);
        case Family::SC: return triple_sc(s, d);
    }
    throw std::invalid_argument("bad family");
}

BigInt motzkin_count(int a, int b, MotzkinCountVariant variant) {
    if (a < 1 || b < 1) throw std::invalid_argument("motzkin_count needs a, b >= 1");
    BigInt sum = 0;
    for (long long i = 0; i <= a; ++i) {
        switch (variant) {
            case MotzkinCountVariant::A:
                sum += multinomial(a + b - 1, i / 2, b + half_down(i - 1), a - i);
                break;
            case MotzkinCountVariant::B:
                sum += binomial(a + b - 2, i / 2) * binomial(a + b - 1 - i / 2, a - i - 1);
                break;
            case MotzkinCountVariant::C:
                sum += binomial(a + b - 2, i / 2) * binomial(a + b - 1 - i / 2, a - i);
                break;
        }
    }
    return sum;
}

SizeOrderReport size_order_report(int s, int d) {
    SizeOrderReport r;
    r.s = s;
    r.d = d;
    r.sc = count_triple(Family::SC, s, d);
    r.bc = count_triple(Family::BC, s, d);
    r.cs = count_triple(Family::CS, s, d);
    r.dd = count_triple(Family::DD, s, d);

    if (d % 2 == 0) {
        r.parity_case = 'a';
        r.strict_ordering_holds = r.sc < r.bc && r.bc == r.cs && r.cs == r.dd;
    } else if (s % 2 == 1) {
        r.parity_case = 'b';
        r.strict_ordering_holds = r.sc == r.dd && r.dd < r.bc && r.bc == r.cs;
    } else {
        r.parity_case = 'c';
        r.strict_ordering_holds = r.dd < r.cs && r.cs < r.sc && r.sc == r.bc;
    }

    bool degenerate_equal = (s == 1);
    bool degenerate_cs_sc = (s == 2 || s == 4) && d == 1;
    if (degenerate_equal)
        r.expected_ordering_holds = r.sc == r.bc && r.bc == r.cs && r.cs == r.dd;
    else if (degenerate_cs_sc)
        r.expected_ordering_holds = r.dd < r.cs && r.cs == r.sc && r.sc == r.bc;
    else
        r.expected_ordering_holds = r.strict_ordering_holds;

    struct Entry {
        const char* name;
        const BigInt* value;
    };
    std::vector<Entry> order{{"sc", &r.sc}, {"bc", &r.bc}, {"cs", &r.cs}, {"dd", &r.dd}};
    std::stable_sort(order.begin(), order.end(),
                     [](const Entry& x, const Entry& y) { return *x.value < *y.value; });
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) r.relation += (*order[i - 1].value == *order[i].value) ? "=" : "<";
        r.relation += order[i].name;
    }
    return r;
}

} // namespace simcore
