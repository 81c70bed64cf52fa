#include "simcore/qseries.hpp"

#include <stdexcept>

namespace simcore {

QSeries::QSeries(int trunc, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != trunc + 1)
        throw std::invalid_argument("coefficient count must be trunc + 1");
}

QSeries QSeries::one(int trunc) {
    QSeries s(trunc);
    s.set_coeff(0, 1);
    return s;
}

namespace {
void require_same_trunc(const QSeries& a, const QSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("truncation mismatch: " + std::to_string(a.trunc()) +
                                    " vs " + std::to_string(b.trunc()));
}
} // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
    require_same_trunc(a, b);
    QSeries out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
    return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    require_same_trunc(a, b);
    QSeries out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n) out.set_coeff(n, a.coeff(n) - b.coeff(n));
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    require_same_trunc(a, b);
    QSeries out(a.trunc());
    for (int i = 0; i <= a.trunc(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= a.trunc(); ++j) {
            if (b.coeff(j) == 0) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

QSeries scale(const QSeries& a, const BigInt& c) {
    QSeries out(a.trunc());
    for (int n = 0; n <= a.trunc(); ++n) out.set_coeff(n, a.coeff(n) * c);
    return out;
}

QSeries pow(const QSeries& a, int exponent) {
    if (exponent < 0) throw std::invalid_argument("exponent must be >= 0");
    QSeries out = QSeries::one(a.trunc());
    for (int k = 0; k < exponent; ++k) out = out * a;
    return out;
}

QSeries reciprocal(const QSeries& a) {
    const BigInt& c0 = a.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("reciprocal needs leading coefficient +-1");
    QSeries out(a.trunc());
    out.set_coeff(0, c0); // 1/c0 = c0 for +-1
    for (int n = 1; n <= a.trunc(); ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) acc += a.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, -acc * c0);
    }
    return out;
}

QSeries pochhammer(int sign, int a, int b, int trunc) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    if (a < 1 || b < 1) throw std::invalid_argument("pochhammer needs a >= 1, b >= 1");
    QSeries out = QSeries::one(trunc);
    for (long long e = a; e <= trunc; e += b)
        for (int n = trunc; n >= e; --n)
            out.set_coeff(n, out.coeff(n) + sign * out.coeff(n - static_cast<int>(e)));
    return out;
}

QSeries theta_factor(int s, int trunc) {
    if (s < 2 || s % 2 != 0) throw std::invalid_argument("theta factor needs even s >= 2");
    QSeries out(trunc);
    for (long long n = 0; s / 2 * n * n <= trunc; ++n)
        out.set_coeff(static_cast<int>(s / 2 * n * n), out.coeff(static_cast<int>(s / 2 * n * n)) + 1);
    return out;
}

QSeries series_family(Family family, int s, int trunc) {
    if (s < 1) throw std::invalid_argument("modulus must be >= 1");
    if (trunc < 0) throw std::invalid_argument("truncation must be >= 0");
    const bool even = s % 2 == 0;
    switch (family) {
        case Family::BC:
            if (even)
                return pochhammer(1, 1, 1, trunc) * pow(pochhammer(-1, s, s, trunc), (s - 2) / 2) *
                       reciprocal(pochhammer(1, s / 2, s / 2, trunc)) * theta_factor(s, trunc);
            return pochhammer(1, 1, 1, trunc) * pow(pochhammer(-1, s, s, trunc), (s - 1) / 2) *
                   reciprocal(pochhammer(1, s, s, trunc));
        case Family::CS:
            if (even)
                return pochhammer(1, 1, 1, trunc) * pow(pochhammer(-1, s, s, trunc), (s - 2) / 2) *
                       reciprocal(pochhammer(1, s, s / 2, trunc));
            return series_family(Family::BC, s, trunc);
        case Family::DD:
            if (even)
                return pochhammer(1, 2, 2, trunc) *
                       pow(pochhammer(-1, 2 * s, 2 * s, trunc), (s - 2) / 2) *
                       reciprocal(pochhammer(1, s, s, trunc));
            return pochhammer(1, 2, 2, trunc) *
                   pow(pochhammer(-1, 2 * s, 2 * s, trunc), (s - 1) / 2) *
                   reciprocal(pochhammer(1, 2 * s, 2 * s, trunc));
        case Family::SC:
            if (even)
                return pochhammer(1, 1, 2, trunc) *
                       pow(pochhammer(-1, 2 * s, 2 * s, trunc), s / 2);
            return pochhammer(1, 1, 2, trunc) *
                   pow(pochhammer(-1, 2 * s, 2 * s, trunc), (s - 1) / 2) *
                   reciprocal(pochhammer(1, s, 2 * s, trunc));
    }
    throw std::invalid_argument("bad family");
}

} // namespace simcore
