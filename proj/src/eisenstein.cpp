#include "irrat/eisenstein.hpp"

namespace irrat {

CoefficientTable closed_form_coeffs(unsigned long n) {
    if (n % 2 != 0) {
        throw OddN("closed_form_coeffs: n must be even");
    }
    if (n < 2) {
        throw InvalidInput("closed_form_coeffs: n must be >= 2");
    }
    CoefficientTable table;
    table.n = n;
    table.entries.assign(n + 1, Integer(0));

    // Walk i = n, n-2, ..., 0 keeping rp = (n+1)(n+2)...(2n-i) = (2n-i)!/n!.
    Integer rp = 1;
    for (unsigned long i = n;; i -= 2) {
        Integer value = binomial(n, n - i) * rp;
        if ((i / 2) % 2 == 1) {
            value = -value;
        }
        table.entries[i] = value;
        if (i == 0) {
            break;
        }
        rp *= Integer(2 * n - i + 1) * Integer(2 * n - i + 2);
    }
    return table;
}

namespace {

Integer closed_form_F0_from_table(const CoefficientTable& table,
                                  const Rational& r) {
    const unsigned long n = table.n;
    const Integer& a = r.get_num();
    const Integer& b = r.get_den();
    const unsigned long half = n / 2;

    // b^n sum_i a_{n,i} r^i = sum_m a_{n,2m} a^{2m} b^{n-2m}, all in Z.
    std::vector<Integer> apows(half + 1), bpows(half + 1);
    apows[0] = 1;
    bpows[0] = 1;
    const Integer a2 = a * a;
    const Integer b2 = b * b;
    for (unsigned long m = 1; m <= half; ++m) {
        apows[m] = apows[m - 1] * a2;
        bpows[m] = bpows[m - 1] * b2;
    }
    Integer sum = 0;
    for (unsigned long m = 0; m <= half; ++m) {
        sum += table.entries[2 * m] * apows[m] * bpows[half - m];
    }
    return sum;
}

}  // namespace

Integer closed_form_F0(const Rational& r, unsigned long n) {
    if (r <= 0) {
        throw InvalidInput("closed_form_F0: r must be positive");
    }
    return closed_form_F0_from_table(closed_form_coeffs(n), r);
}

bool cross_check_closed_form(const Rational& r, unsigned long n) {
    const Integer closed = closed_form_F0(r, n);
    const Rational symbolic = F_at_zero(r, n);
    return symbolic.get_den() == 1 && symbolic.get_num() == closed;
}

EisensteinCertificate eisenstein_check(unsigned long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(Integer(p))) {
        throw NotOddPrime("eisenstein_check: " + std::to_string(p) +
                          " is not an odd prime");
    }
    EisensteinCertificate cert;
    cert.p = p;
    cert.n = p - 1;

    const CoefficientTable table = closed_form_coeffs(cert.n);
    const Integer prime(p);
    cert.divisibility_evidence.reserve(cert.n / 2);
    for (unsigned long i = 0; i + 2 <= cert.n; i += 2) {
        const unsigned long v = p_adic_valuation(table.entries[i], prime);
        if (v < 1) {
            throw CheckFailed("eisenstein_check: p does not divide a_{n," +
                              std::to_string(i) + "}");
        }
        cert.divisibility_evidence.push_back({i, v});
    }
    cert.constant_term_valuation = cert.divisibility_evidence.front().valuation;
    if (cert.constant_term_valuation != 1) {
        throw CheckFailed("eisenstein_check: v_p(a_{n,0}) != 1");
    }
    cert.leading_term = table.entries[cert.n];
    if (abs(cert.leading_term) != 1 ||
        mpz_divisible_p(cert.leading_term.get_mpz_t(), prime.get_mpz_t())) {
        throw CheckFailed("eisenstein_check: leading coefficient check failed");
    }
    return cert;
}

Property3Witness find_witness(unsigned long N, const Rational& r) {
    if (N < 1) {
        throw InvalidInput("find_witness: N must be >= 1");
    }
    if (r <= 0) {
        throw InvalidInput("find_witness: r must be positive");
    }
    Property3Witness witness;
    witness.N = N;
    witness.r = r;

    const Integer p = smallest_odd_prime_at_least(Integer(N) + 1);
    witness.p = p.get_ui();
    witness.n = witness.p - 1;
    witness.certificate = eisenstein_check(witness.p);
    witness.F0 = closed_form_F0(r, witness.n);
    if (witness.F0 == 0) {
        // Unreachable: the Eisenstein certificate makes the degree-n
        // polynomial irreducible, so it has no rational roots for n >= 2.
        throw CheckFailed("find_witness: F_n(0) = 0");
    }
    return witness;
}

}  // namespace irrat
