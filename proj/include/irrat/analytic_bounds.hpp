#ifndef IRRAT_ANALYTIC_BOUNDS_HPP
#define IRRAT_ANALYTIC_BOUNDS_HPP

#include <string>
#include <vector>

#include "irrat/exact_arith.hpp"
#include "irrat/niven_poly.hpp"

namespace irrat {

// Fixed-point decimal with a certified error bound: the true value lies in
// [value - error, value + error] where value = mantissa * 10^-scale and
// error = error_ulps * 10^-scale. All arithmetic is exact integer work on
// mantissas; rounding steps add at most one ulp to the error and account
// for it explicitly.
class HighPrecision {
public:
    HighPrecision() = default;

    // Round-to-nearest conversion; error is 0 when exact, else 1 ulp.
    static HighPrecision from_rational(const Rational& v, long scale);

    long scale() const { return scale_; }
    const Integer& mantissa() const { return mantissa_; }
    const Integer& error_ulps() const { return err_; }

    Rational value() const;
    Rational error_bound() const;
    bool exact() const { return err_ == 0; }

    // Operands must share a scale.
    HighPrecision operator+(const HighPrecision& other) const;
    HighPrecision operator-(const HighPrecision& other) const;
    HighPrecision operator*(const HighPrecision& other) const;
    HighPrecision operator-() const;

    void add_error_ulps(const Integer& ulps);

    // Decimal rendering with `digits` places after the point (truncated),
    // error shown separately.
    std::string to_string(long digits) const;

private:
    Integer mantissa_ = 0;
    Integer err_ = 0;
    long scale_ = 0;
};

// |a.value - b.value| <= a.error + b.error.
bool intervals_overlap(const HighPrecision& a, const HighPrecision& b);

// Smallest n with r (b r^2)^n / n! < 1, plus the exact term there.
struct ThresholdResult {
    Rational r;
    unsigned long n_star = 0;
    Rational term_at_n_star;
};

// Exact r (b r^2)^n / n!.
Rational bound_term(const Rational& r, unsigned long n);

// Exact (b r^2)^n / n!, the pointwise envelope of f_n on (0, r).
Rational envelope_bound(const Rational& r, unsigned long n);

// Found by iterating t_{n+1} = t_n (b r^2)/(n+1) exactly from t_0 = r.
// Throws InvalidInput for r <= 0.
ThresholdResult threshold(const Rational& r);

// Exact check that 0 < f(x0) < (b r^2)^n / n! at every sample (samples must
// lie strictly inside (0, r); throws SampleOutOfRange) and that the true
// maximum f(r/2) = b^n r^{2n} / (4^n n!) also satisfies the strict bound.
bool envelope_check(const NivenPair& pair, const std::vector<Rational>& samples);

// sum (-1)^k x^{2k+1}/(2k+1)!, summed exactly until the next term drops
// below 10^-(digits+10) inside the monotone regime; the certified error is
// that first omitted term plus the final rounding ulp. Requires |x| <= 16
// (no argument reduction) and 1 <= digits <= 200.
HighPrecision sin_series(const Rational& x, long digits);

// Companion cosine series, same contract.
HighPrecision cos_series(const Rational& x, long digits);

struct QuadratureComparison {
    HighPrecision lhs;  // integral of f_n(x) sin x over [0, r], term-wise
    HighPrecision rhs;  // F'(r) sin r - F(r) cos r + F(0)
    bool agree;
};

// Two independent evaluations of the same quantity: the left side integrates
// the polynomial against the sine power series term by term (each inner
// integral is an exact rational, the tail is an alternating-series bound);
// the right side evaluates the antiderivative bracket via the certified
// series. agree requires overlapping intervals and a gap below 10^-(digits-5).
QuadratureComparison quadrature_vs_bracket(const Rational& r, unsigned long n,
                                           long digits);

}  // namespace irrat

#endif
