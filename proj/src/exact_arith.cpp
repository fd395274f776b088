#include "irrat/exact_arith.hpp"

#include <array>

namespace irrat {

Rational TwoAdicForm::value() const {
    Integer num = k_odd << p_exp;
    Integer den = l_odd << q_exp;
    return canonicalize(num, den);
}

Rational canonicalize(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ZeroDenominator();
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

TwoAdicForm two_adic_form(const Rational& r) {
    if (r == 0) {
        throw ZeroInput();
    }
    TwoAdicForm form;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    Integer abs_num = abs(num);
    form.p_exp = mpz_scan1(abs_num.get_mpz_t(), 0);
    form.q_exp = mpz_scan1(den.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(form.k_odd.get_mpz_t(), num.get_mpz_t(), form.p_exp);
    mpz_tdiv_q_2exp(form.l_odd.get_mpz_t(), den.get_mpz_t(), form.q_exp);
    // num and den are coprime, so they are never both even.
    if (form.p_exp != 0 && form.q_exp != 0) {
        throw CheckFailed("two_adic_form: input rational was not canonical");
    }
    return form;
}

unsigned long p_adic_valuation(const Integer& x, const Integer& p) {
    if (x == 0) {
        throw ZeroInput();
    }
    if (p < 2 || !is_prime(p)) {
        throw NonPrimeModulus("p_adic_valuation: modulus " + p.get_str() +
                              " is not prime");
    }
    unsigned long e = 0;
    Integer v = abs(x);
    while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

namespace {

// Strong-pseudoprime test to base a for odd x > 2 with x - 1 = d * 2^s.
bool strong_probable_prime(const Integer& x, unsigned long a, const Integer& d,
                           unsigned long s) {
    Integer base(a);
    if (mpz_divisible_p(x.get_mpz_t(), base.get_mpz_t())) {
        return x == base;
    }
    Integer y;
    mpz_powm(y.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
    Integer x_minus_1 = x - 1;
    if (y == 1 || y == x_minus_1) {
        return true;
    }
    for (unsigned long i = 1; i < s; ++i) {
        y = (y * y) % x;
        if (y == x_minus_1) {
            return true;
        }
        if (y == 1) {
            return false;
        }
    }
    return false;
}

bool trial_division(const Integer& x) {
    Integer d = 3;
    while (d * d <= x) {
        if (mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
            return false;
        }
        d += 2;
    }
    return true;
}

}  // namespace

bool is_prime(const Integer& x) {
    if (x < 2) {
        return false;
    }
    if (x == 2) {
        return true;
    }
    if (mpz_even_p(x.get_mpz_t())) {
        return false;
    }

    // Base ladders with proven deterministic ranges (Pomerance et al. /
    // Sinclair--Sorenson style tables). Each bound is exclusive.
    struct Ladder {
        const char* bound;
        std::array<unsigned long, 13> bases;
        unsigned long count;
    };
    static const Ladder ladders[] = {
        {"2047", {2}, 1},
        {"1373653", {2, 3}, 2},
        {"25326001", {2, 3, 5}, 3},
        {"3215031751", {2, 3, 5, 7}, 4},
        {"3474749660383", {2, 3, 5, 7, 11}, 5},
        {"341550071728321", {2, 3, 5, 7, 11, 13}, 6},
        {"3825123056546413051", {2, 3, 5, 7, 11, 13, 17, 19, 23}, 9},
        {"318665857834031151167461", {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, 12},
        {"3317044064679887385961981",
         {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}, 13},
    };

    const Ladder* ladder = nullptr;
    for (const Ladder& l : ladders) {
        if (x < Integer(l.bound)) {
            ladder = &l;
            break;
        }
    }
    if (ladder == nullptr) {
        // Out of the proven Miller-Rabin range; stay deterministic.
        return trial_division(x);
    }

    Integer d = x - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long i = 0; i < ladder->count; ++i) {
        if (!strong_probable_prime(x, ladder->bases[i], d, s)) {
            return false;
        }
    }
    return true;
}

Integer smallest_odd_prime_at_least(const Integer& lo) {
    Integer p = lo < 3 ? Integer(3) : lo;
    if (mpz_even_p(p.get_mpz_t())) {
        p += 1;
    }
    while (!is_prime(p)) {
        p += 2;
    }
    return p;
}

Integer factorial(unsigned long n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Integer rising_product(const Integer& lo, const Integer& hi) {
    if (lo > hi + 1) {
        throw InvalidInput("rising_product: lo exceeds hi + 1");
    }
    Integer result = 1;
    for (Integer v = lo; v <= hi; ++v) {
        result *= v;
    }
    return result;
}

}  // namespace irrat
