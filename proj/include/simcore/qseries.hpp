#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "simcore/family.hpp"

namespace simcore {

using BigInt = boost::multiprecision::cpp_int;

/// Formal power series in q truncated at degree N, exact integer coefficients.
class QSeries {
  public:
    explicit QSeries(int trunc) : coeffs_(trunc + 1) {}
    QSeries(int trunc, std::vector<BigInt> coeffs);

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int n) const { return coeffs_.at(n); }
    void set_coeff(int n, BigInt value) { coeffs_.at(n) = std::move(value); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool operator==(const QSeries&) const = default;

    static QSeries one(int trunc);

  private:
    std::vector<BigInt> coeffs_;
};

/// Arithmetic requires equal truncation; mismatches throw std::invalid_argument.
QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const BigInt& c);
QSeries pow(const QSeries& a, int exponent); // exponent >= 0

/// Multiplicative inverse by forward substitution; requires coeff(0) = +-1.
QSeries reciprocal(const QSeries& a);

/// Truncation of prod_{k>=0, a+kb <= N} (1 + sign * q^{a+kb}).
/// sign is the sign inside each factor: +1 gives (-q^a; q^b)-type products,
/// -1 gives (q^a; q^b)-type products.  Requires a >= 1, b >= 1, sign = +-1.
QSeries pochhammer(int sign, int a, int b, int trunc);

/// sum_{n>=0} q^{(s/2) n^2} truncated; requires even s >= 2.
QSeries theta_factor(int s, int trunc);

/// Generating function of the family for a single modulus s >= 1, truncated.
/// Coefficient n counts members of weight n (weight of the doubling for DD).
QSeries series_family(Family family, int s, int trunc);

inline constexpr int kDefaultSeriesTrunc = 50;

} // namespace simcore
