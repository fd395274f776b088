#ifndef IRRAT_EXACT_ARITH_HPP
#define IRRAT_EXACT_ARITH_HPP

#include <gmpxx.h>

#include "irrat/errors.hpp"

namespace irrat {

// Arbitrary-precision signed integer.
using Integer = mpz_class;

// Canonical rational: den > 0, gcd(|num|, den) = 1. GMP keeps arithmetic
// results canonical as long as operands are; construct through canonicalize()
// rather than mpq_class(num, den).
using Rational = mpq_class;

// value = (2^p_exp * k_odd) / (2^q_exp * l_odd) with k_odd, l_odd odd,
// l_odd > 0 and min(p_exp, q_exp) = 0.
struct TwoAdicForm {
    unsigned long p_exp = 0;
    unsigned long q_exp = 0;
    Integer k_odd;
    Integer l_odd;

    Rational value() const;
};

// Reduced fraction with positive denominator; sign carried by the numerator.
// Throws ZeroDenominator.
Rational canonicalize(const Integer& num, const Integer& den);

// Exact 2-adic decomposition of a nonzero rational. Throws ZeroInput.
TwoAdicForm two_adic_form(const Rational& r);

// Largest e with p^e | x, for x != 0 and p a prime >= 2.
// Throws ZeroInput / NonPrimeModulus.
unsigned long p_adic_valuation(const Integer& x, const Integer& p);

// Deterministic primality: Miller-Rabin over a fixed base ladder, exact for
// all x below 3317044064679887385961981; plain trial division above that.
// Never probabilistic. x < 2 (including negatives) returns false.
bool is_prime(const Integer& x);

// Smallest odd prime >= lo.
Integer smallest_odd_prime_at_least(const Integer& lo);

Integer factorial(unsigned long n);

Integer binomial(unsigned long n, unsigned long k);

// lo * (lo+1) * ... * hi; empty product (lo == hi+1) is 1.
// Throws InvalidInput when lo > hi + 1.
Integer rising_product(const Integer& lo, const Integer& hi);

}  // namespace irrat

#endif
