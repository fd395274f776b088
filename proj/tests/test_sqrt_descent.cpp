#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "irrat/sqrt_descent.hpp"
#include "test_util.hpp"

using irrat::Integer;
using irrat::Rational;

namespace {

// Independent oracle: integer square root by bisection.
unsigned long isqrt_bisect(unsigned long n) {
    unsigned long lo = 0, hi = n < 2 ? n : n / 2 + 1;
    while (lo < hi) {
        unsigned long mid = lo + (hi - lo + 1) / 2;
        if (mid <= n / mid && mid * mid <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace

TEST_CASE("sqrt(2) and sqrt(3) are irrational") {
    CHECK_FALSE(irrat::classify_sqrt(2).is_rational());
    CHECK_FALSE(irrat::classify_sqrt(3).is_rational());
}

TEST_CASE("worked classifications with traces") {
    auto nine = irrat::classify_sqrt(9);
    REQUIRE(nine.is_rational());
    CHECK(*nine.root == 3);
    REQUIRE(nine.trace.size() == 1);
    CHECK(std::holds_alternative<irrat::OddSquareHit>(nine.trace[0]));

    auto twelve = irrat::classify_sqrt(12);
    CHECK_FALSE(twelve.is_rational());
    REQUIRE(twelve.trace.size() == 2);
    const auto& div = std::get<irrat::DividedBy4>(twelve.trace[0]);
    CHECK(div.from == 12);
    CHECK(div.to == 3);
    const auto& fail = std::get<irrat::CriterionFailed>(twelve.trace[1]);
    CHECK(fail.stuck_at == 3);

    auto thirty_six = irrat::classify_sqrt(36);
    REQUIRE(thirty_six.is_rational());
    CHECK(*thirty_six.root == 6);
    REQUIRE(thirty_six.trace.size() == 2);
    const auto& div36 = std::get<irrat::DividedBy4>(thirty_six.trace[0]);
    CHECK(div36.from == 36);
    CHECK(div36.to == 9);
    const auto& hit = std::get<irrat::OddSquareHit>(thirty_six.trace[1]);
    CHECK(hit.root == 3);

    auto one = irrat::classify_sqrt(1);
    REQUIRE(one.is_rational());
    CHECK(*one.root == 1);

    CHECK_THROWS_AS(irrat::classify_sqrt(0), irrat::InvalidInput);
    CHECK_THROWS_AS(irrat::classify_sqrt(-4), irrat::InvalidInput);
}

TEST_CASE("verdicts match the bisection oracle") {
    // Dense sweep; the acceptance suite extends this to 10^6.
    for (unsigned long n = 1; n <= 20000; ++n) {
        auto c = irrat::classify_sqrt(n);
        unsigned long root = isqrt_bisect(n);
        if (root * root == n) {
            REQUIRE(c.is_rational());
            CHECK(*c.root == root);
        } else {
            CHECK_FALSE(c.is_rational());
        }
    }
}

TEST_CASE("trace replay reproduces the verdict") {
    for (unsigned long n = 1; n <= 5000; ++n) {
        auto c = irrat::classify_sqrt(n);
        CHECK(irrat::replay_trace(c));
    }
    // A corrupted verdict must be caught by the replay.
    auto c = irrat::classify_sqrt(36);
    c.root = 5;
    CHECK_FALSE(irrat::replay_trace(c));
    auto d = irrat::classify_sqrt(12);
    d.root = 2;
    CHECK_FALSE(irrat::replay_trace(d));
}

TEST_CASE("big inputs stay exact") {
    Integer big("123456789123456789");
    auto c = irrat::classify_sqrt(big * big);
    REQUIRE(c.is_rational());
    CHECK(*c.root == big);
    auto c2 = irrat::classify_sqrt(big * big + 1);
    CHECK_FALSE(c2.is_rational());
}

TEST_CASE("two_adic_square_expression worked examples") {
    auto e = irrat::two_adic_square_expression(irrat::canonicalize(6, 5));
    CHECK(e.exponent == 1);
    CHECK(e.base == irrat::canonicalize(3, 5));

    e = irrat::two_adic_square_expression(irrat::canonicalize(1, 2));
    CHECK(e.exponent == -1);
    CHECK(e.base == 1);

    e = irrat::two_adic_square_expression(irrat::canonicalize(3, 1));
    CHECK(e.exponent == 0);
    CHECK(e.base == 3);

    CHECK_THROWS_AS(irrat::two_adic_square_expression(Rational(0)),
                    irrat::ZeroInput);
}

TEST_CASE("square expression identity r^2 l^2 4^-e = k^2") {
    auto rng = irrat_test::make_rng();
    std::uniform_int_distribution<long> num(-400, 400);
    std::uniform_int_distribution<long> den(1, 400);
    for (int it = 0; it < 500; ++it) {
        long a = num(rng);
        if (a == 0) {
            continue;
        }
        Rational r = irrat::canonicalize(a, den(rng));
        auto e = irrat::two_adic_square_expression(r);
        // r^2 = 4^e (k/l)^2 rearranged to stay in integers for negative e.
        Rational lhs = r * r * Rational(e.base.get_den() * e.base.get_den());
        Rational rhs(e.base.get_num() * e.base.get_num());
        if (e.exponent >= 0) {
            Integer four_e;
            mpz_ui_pow_ui(four_e.get_mpz_t(), 4,
                          static_cast<unsigned long>(e.exponent));
            rhs *= Rational(four_e);
        } else {
            Integer four_e;
            mpz_ui_pow_ui(four_e.get_mpz_t(), 4,
                          static_cast<unsigned long>(-e.exponent));
            lhs *= Rational(four_e);
        }
        CHECK(lhs == rhs);
    }
}
