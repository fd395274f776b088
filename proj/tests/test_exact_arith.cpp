#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "irrat/exact_arith.hpp"
#include "test_util.hpp"

using irrat::Integer;
using irrat::Rational;

TEST_CASE("canonicalize reduces and normalizes sign") {
    CHECK(irrat::canonicalize(4, 8) == irrat::canonicalize(1, 2));
    CHECK(irrat::canonicalize(-3, -6) == irrat::canonicalize(1, 2));
    Rational q = irrat::canonicalize(22, 7);
    CHECK(q.get_num() == 22);
    CHECK(q.get_den() == 7);
    Rational neg = irrat::canonicalize(3, -6);
    CHECK(neg.get_num() == -1);
    CHECK(neg.get_den() == 2);
    CHECK_THROWS_AS(irrat::canonicalize(1, 0), irrat::ZeroDenominator);
}

TEST_CASE("two_adic_form on the worked examples") {
    auto form = irrat::two_adic_form(irrat::canonicalize(12, 5));
    CHECK(form.p_exp == 2);
    CHECK(form.q_exp == 0);
    CHECK(form.k_odd == 3);
    CHECK(form.l_odd == 5);

    form = irrat::two_adic_form(irrat::canonicalize(3, 8));
    CHECK(form.p_exp == 0);
    CHECK(form.q_exp == 3);
    CHECK(form.k_odd == 3);
    CHECK(form.l_odd == 1);

    form = irrat::two_adic_form(irrat::canonicalize(1, 1));
    CHECK(form.p_exp == 0);
    CHECK(form.q_exp == 0);
    CHECK(form.k_odd == 1);
    CHECK(form.l_odd == 1);

    CHECK_THROWS_AS(irrat::two_adic_form(Rational(0)), irrat::ZeroInput);
}

TEST_CASE("two_adic_form round trips") {
    auto rng = irrat_test::make_rng();
    std::uniform_int_distribution<long> num(-500, 500);
    std::uniform_int_distribution<long> den(1, 500);
    for (int it = 0; it < 500; ++it) {
        long a = num(rng);
        if (a == 0) {
            continue;
        }
        Rational r = irrat::canonicalize(a, den(rng));
        auto form = irrat::two_adic_form(r);
        CHECK(mpz_odd_p(form.k_odd.get_mpz_t()));
        CHECK(mpz_odd_p(form.l_odd.get_mpz_t()));
        CHECK((form.p_exp == 0 || form.q_exp == 0));
        CHECK(form.value() == r);
    }
}

TEST_CASE("p_adic_valuation basics and errors") {
    CHECK(irrat::p_adic_valuation(12, 3) == 1);
    CHECK(irrat::p_adic_valuation(12, 2) == 2);
    CHECK(irrat::p_adic_valuation(1680, 5) == 1);
    CHECK(irrat::p_adic_valuation(-8, 2) == 3);
    CHECK(irrat::p_adic_valuation(7, 5) == 0);
    CHECK_THROWS_AS(irrat::p_adic_valuation(0, 3), irrat::ZeroInput);
    CHECK_THROWS_AS(irrat::p_adic_valuation(10, 4), irrat::NonPrimeModulus);
    CHECK_THROWS_AS(irrat::p_adic_valuation(10, 1), irrat::NonPrimeModulus);
}

TEST_CASE("p_adic_valuation is additive over products") {
    auto rng = irrat_test::make_rng();
    std::uniform_int_distribution<long> dist(-5000, 5000);
    const std::vector<Integer> primes = {2, 3, 5, 7, 13};
    for (int it = 0; it < 300; ++it) {
        Integer x = dist(rng);
        Integer y = dist(rng);
        if (x == 0 || y == 0) {
            continue;
        }
        for (const Integer& p : primes) {
            CHECK(irrat::p_adic_valuation(x * y, p) ==
                  irrat::p_adic_valuation(x, p) + irrat::p_adic_valuation(y, p));
        }
    }
}

namespace {

bool trial_division_is_prime(unsigned long x) {
    if (x < 2) {
        return false;
    }
    for (unsigned long d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("is_prime examples") {
    CHECK(irrat::is_prime(7));
    CHECK_FALSE(irrat::is_prime(1));
    CHECK(irrat::is_prime(101));
    CHECK_FALSE(irrat::is_prime(0));
    CHECK_FALSE(irrat::is_prime(-7));
    CHECK(irrat::is_prime(2));
    CHECK(irrat::is_prime(Integer("1000003")));
    // Strong pseudoprimes to base 2 must be rejected.
    CHECK_FALSE(irrat::is_prime(2047));
    CHECK_FALSE(irrat::is_prime(Integer("3215031751")));
}

TEST_CASE("is_prime agrees with trial division for all x <= 10^6") {
    unsigned long mismatches = 0;
    for (unsigned long x = 0; x <= 1000000; ++x) {
        if (irrat::is_prime(x) != trial_division_is_prime(x)) {
            ++mismatches;
            CAPTURE(x);
            CHECK(mismatches == 0);
            break;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("smallest_odd_prime_at_least") {
    CHECK(irrat::smallest_odd_prime_at_least(1) == 3);
    CHECK(irrat::smallest_odd_prime_at_least(2) == 3);
    CHECK(irrat::smallest_odd_prime_at_least(3) == 3);
    CHECK(irrat::smallest_odd_prime_at_least(4) == 5);
    CHECK(irrat::smallest_odd_prime_at_least(90) == 97);
    CHECK(irrat::smallest_odd_prime_at_least(3029) == 3037);
}

TEST_CASE("factorial, binomial, rising_product") {
    CHECK(irrat::factorial(4) == 24);
    CHECK(irrat::factorial(0) == 1);
    CHECK(irrat::rising_product(3, 4) == 12);
    CHECK(irrat::rising_product(3, 4) == irrat::factorial(4) / irrat::factorial(2));
    CHECK(irrat::rising_product(5, 4) == 1);
    CHECK(irrat::binomial(6, 2) == 15);
    CHECK(irrat::binomial(6, 0) == 1);
    CHECK_THROWS_AS(irrat::rising_product(7, 4), irrat::InvalidInput);
}

TEST_CASE("rising_product complements factorial up to 300") {
    for (unsigned long n = 1; n <= 300; ++n) {
        CHECK(irrat::rising_product(Integer(n + 1), Integer(2 * n)) *
                  irrat::factorial(n) ==
              irrat::factorial(2 * n));
    }
}
