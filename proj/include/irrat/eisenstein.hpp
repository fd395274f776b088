#ifndef IRRAT_EISENSTEIN_HPP
#define IRRAT_EISENSTEIN_HPP

#include <vector>

#include "irrat/exact_arith.hpp"
#include "irrat/niven_poly.hpp"

namespace irrat {

// Integer coefficients a_{n,i} of F_n(0)/b^n as a polynomial in r, for even n:
//   a_{n,i} = 0 for odd i,
//   a_{n,i} = (-1)^{i/2} C(n, n-i) (2n-i)!/n!  for even i,
// so a_{n,0} = (2n)!/n! and |a_{n,n}| = 1 (monic up to sign).
struct CoefficientTable {
    unsigned long n = 0;
    std::vector<Integer> entries;  // entries[i] = a_{n,i}, i = 0..n
};

struct ValuationEvidence {
    unsigned long i;
    unsigned long valuation;  // v_p(a_{n,i})
};

// Eisenstein facts for the table at n = p-1: p divides every non-leading
// coefficient, p^2 does not divide the constant term, p does not divide the
// leading term.
struct EisensteinCertificate {
    unsigned long p = 0;
    unsigned long n = 0;  // p - 1
    std::vector<ValuationEvidence> divisibility_evidence;  // even i <= n-2
    unsigned long constant_term_valuation = 0;             // exactly 1
    Integer leading_term;                                  // |a_{n,n}| = 1
};

// For a given N: the smallest odd prime p > N, n = p-1 >= N, the Eisenstein
// certificate at p, and a direct exact nonzero check of F_n(0) at r.
struct Property3Witness {
    unsigned long N = 0;
    unsigned long p = 0;
    unsigned long n = 0;
    EisensteinCertificate certificate;
    Rational r;
    Integer F0;  // exact F_n(0), nonzero
};

// Requires n even, n >= 2; throws OddN for odd n, InvalidInput for n < 2.
CoefficientTable closed_form_coeffs(unsigned long n);

// b^n * sum_i a_{n,i} r^i as an exact integer (r = a/b canonical).
Integer closed_form_F0(const Rational& r, unsigned long n);

// true iff the closed form agrees with the symbolic-differentiation value of
// F_n(0). Propagates OddN.
bool cross_check_closed_form(const Rational& r, unsigned long n);

// Builds the certificate for n = p-1 and checks every fact exactly; throws
// NotOddPrime for bad p, CheckFailed if a fact fails (mathematically
// unreachable, signals a bug).
EisensteinCertificate eisenstein_check(unsigned long p);

// Throws InvalidInput for N < 1 or r <= 0.
Property3Witness find_witness(unsigned long N, const Rational& r);

}  // namespace irrat

#endif
