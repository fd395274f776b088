#ifndef IRRAT_NIVEN_POLY_HPP
#define IRRAT_NIVEN_POLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "irrat/exact_arith.hpp"

namespace irrat {

// Dense univariate polynomial with canonical rational coefficients,
// index = degree, trailing coefficient nonzero (zero polynomial is empty).
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of x^m; zero beyond the degree.
    const Rational& coeff(std::size_t m) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Rational evaluate(const Rational& x) const;  // Horner
    RatPolynomial derivative(unsigned long k = 1) const;

    // p(c0 + c1*x), expanded.
    RatPolynomial substitute_linear(const Rational& c0, const Rational& c1) const;

    RatPolynomial operator+(const RatPolynomial& other) const;
    RatPolynomial operator-(const RatPolynomial& other) const;
    RatPolynomial operator*(const RatPolynomial& other) const;
    bool operator==(const RatPolynomial& other) const = default;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;

    void prune();
};

RatPolynomial derivative(const RatPolynomial& p, unsigned long k);

// f = (b^n/n!) x^n (r-x)^n and F = sum_{j=0}^{n} (-1)^j f^(2j), with the
// exact endpoint values cached. Invariants checked on construction:
// deg f = deg F = 2n, F(0) = F(r), F(0) integral, F + F'' = f.
struct NivenPair {
    unsigned long n = 0;
    Rational r;
    RatPolynomial f;
    RatPolynomial F;
    Rational F_at_0;
    Rational F_at_r;
};

// Expanded (b^n/n!) x^n (r-x)^n; degree exactly 2n, leading (-1)^n b^n/n!.
// Requires r > 0 canonical, n >= 1; throws InvalidInput.
RatPolynomial build_f(const Rational& r, unsigned long n);

// Constructs F by alternating even derivatives of f and verifies the pair
// invariants; throws PropertyViolation if any fails (signals a bug).
NivenPair build_F(const Rational& r, unsigned long n);

// Exact F(0) = sum_j (-1)^j (2j)! [x^{2j}] f, without materializing F.
// Same value as build_F(r, n).F_at_0 at a cost linear in n; this is the
// route used at certificate scale (n in the thousands).
Rational F_at_zero(const Rational& r, unsigned long n);

struct EndpointDerivative {
    unsigned long j;
    Rational at_zero;  // f^(j)(0)
    Rational at_r;     // f^(j)(r)
};

// All f^(j) at both endpoints, 0 <= j <= 2n. Every value has denominator 1;
// that integrality is what makes F(0) and F(r) integers.
std::vector<EndpointDerivative> derivatives_at_endpoints(const NivenPair& pair);

}  // namespace irrat

#endif
