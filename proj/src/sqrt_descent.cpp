#include "irrat/sqrt_descent.hpp"

namespace irrat {

namespace {

// Exact integer square root; engaged result only when m is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& m) {
    Integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    if (rem == 0) {
        return root;
    }
    return std::nullopt;
}

}  // namespace

SqrtClassification classify_sqrt(const Integer& n) {
    if (n < 1) {
        throw InvalidInput("classify_sqrt: n must be >= 1");
    }
    SqrtClassification result;
    result.n = n;

    Integer current = n;
    unsigned long halvings = 0;  // each division by 4 contributes a factor 2
    for (;;) {
        if (mpz_odd_p(current.get_mpz_t())) {
            if (auto root = exact_sqrt(current)) {
                result.trace.push_back(OddSquareHit{*root});
                result.root = *root << halvings;
                break;
            }
            result.trace.push_back(CriterionFailed{current});
            break;
        }
        if (mpz_divisible_ui_p(current.get_mpz_t(), 4)) {
            Integer next = current / 4;
            result.trace.push_back(DividedBy4{current, next});
            current = next;
            ++halvings;
            continue;
        }
        // Even but not divisible by 4: cannot be a square.
        result.trace.push_back(CriterionFailed{current});
        break;
    }

    if (result.root && (*result.root) * (*result.root) != n) {
        throw CheckFailed("classify_sqrt: root recheck failed");
    }
    return result;
}

bool replay_trace(const SqrtClassification& c) {
    if (c.trace.empty()) {
        return false;
    }
    Integer current = c.n;
    unsigned long halvings = 0;
    for (std::size_t idx = 0; idx < c.trace.size(); ++idx) {
        const DescentStep& step = c.trace[idx];
        const bool last = idx + 1 == c.trace.size();
        if (const auto* div = std::get_if<DividedBy4>(&step)) {
            if (last || div->from != current ||
                !mpz_divisible_ui_p(current.get_mpz_t(), 4) ||
                div->to * 4 != current) {
                return false;
            }
            current = div->to;
            ++halvings;
        } else if (const auto* hit = std::get_if<OddSquareHit>(&step)) {
            if (!last || mpz_even_p(hit->root.get_mpz_t()) ||
                hit->root * hit->root != current) {
                return false;
            }
            if (!c.root || *c.root != hit->root << halvings) {
                return false;
            }
        } else if (const auto* fail = std::get_if<CriterionFailed>(&step)) {
            // Terminal: neither an odd square nor divisible by 4.
            if (!last || fail->stuck_at != current || c.root) {
                return false;
            }
            if (mpz_divisible_ui_p(current.get_mpz_t(), 4)) {
                return false;
            }
            if (mpz_odd_p(current.get_mpz_t()) && exact_sqrt(current)) {
                return false;
            }
        }
    }
    return true;
}

std::string describe(const DescentStep& step) {
    if (const auto* div = std::get_if<DividedBy4>(&step)) {
        return div->from.get_str() + " divided by 4 -> " + div->to.get_str();
    }
    if (const auto* hit = std::get_if<OddSquareHit>(&step)) {
        const Integer square = hit->root * hit->root;
        return "odd square hit: " + square.get_str() + " = " +
               hit->root.get_str() + "^2";
    }
    const auto& fail = std::get<CriterionFailed>(step);
    return fail.stuck_at.get_str() +
           " is neither an odd square nor divisible by 4";
}

TwoAdicSquareExpression two_adic_square_expression(const Rational& r) {
    TwoAdicForm form = two_adic_form(r);  // throws ZeroInput
    TwoAdicSquareExpression expr;
    expr.exponent = static_cast<long>(form.p_exp) - static_cast<long>(form.q_exp);
    expr.base = canonicalize(form.k_odd, form.l_odd);
    return expr;
}

}  // namespace irrat
