#ifndef IRRAT_SQRT_DESCENT_HPP
#define IRRAT_SQRT_DESCENT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irrat/exact_arith.hpp"

namespace irrat {

// One step of the descent on n. The loop divides out factors of 4 until it
// hits an odd square (rational root) or a value that is neither an odd square
// nor divisible by 4 (no rational root exists).
struct DividedBy4 {
    Integer from;
    Integer to;
};

struct OddSquareHit {
    Integer root;  // odd, root^2 equals the current value
};

struct CriterionFailed {
    Integer stuck_at;  // neither an odd square nor divisible by 4
};

using DescentStep = std::variant<DividedBy4, OddSquareHit, CriterionFailed>;

struct SqrtClassification {
    Integer n;
    std::optional<Integer> root;  // engaged iff sqrt(n) is rational; root^2 = n
    std::vector<DescentStep> trace;

    bool is_rational() const { return root.has_value(); }
};

// Decides whether sqrt(n) is rational, n >= 1. Throws InvalidInput.
SqrtClassification classify_sqrt(const Integer& n);

// Re-runs the recorded trace against c.n and checks that it reproduces the
// verdict (including the root value). Pure re-check, no classification logic.
bool replay_trace(const SqrtClassification& c);

std::string describe(const DescentStep& step);

// r^2 = 4^exponent * base^2 with base = k/l, k and l odd.
struct TwoAdicSquareExpression {
    long exponent;
    Rational base;
};

// Throws ZeroInput.
TwoAdicSquareExpression two_adic_square_expression(const Rational& r);

}  // namespace irrat

#endif
