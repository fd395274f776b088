#include "irrat/niven_poly.hpp"

#include <utility>

namespace irrat {

namespace {
const Rational kZero(0);
}

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    for (Rational& c : coeffs_) {
        c.canonicalize();
    }
    prune();
}

void RatPolynomial::prune() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

const Rational& RatPolynomial::coeff(std::size_t m) const {
    return m < coeffs_.size() ? coeffs_[m] : kZero;
}

const Rational& RatPolynomial::leading() const {
    if (coeffs_.empty()) {
        return kZero;
    }
    return coeffs_.back();
}

Rational RatPolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RatPolynomial RatPolynomial::derivative(unsigned long k) const {
    std::vector<Rational> cur = coeffs_;
    for (unsigned long round = 0; round < k; ++round) {
        if (cur.empty()) {
            break;
        }
        std::vector<Rational> next;
        next.reserve(cur.size() - 1);
        for (std::size_t m = 1; m < cur.size(); ++m) {
            next.push_back(cur[m] * Rational(static_cast<unsigned long>(m)));
        }
        cur = std::move(next);
    }
    return RatPolynomial(std::move(cur));
}

RatPolynomial RatPolynomial::substitute_linear(const Rational& c0,
                                               const Rational& c1) const {
    // Horner over polynomials: result = (...(a_d (c0 + c1 x) + a_{d-1})...).
    RatPolynomial linear(std::vector<Rational>{c0, c1});
    RatPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * linear + RatPolynomial(std::vector<Rational>{*it});
    }
    return acc;
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()),
                              kZero);
    for (std::size_t m = 0; m < out.size(); ++m) {
        out[m] = coeff(m) + other.coeff(m);
    }
    return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()),
                              kZero);
    for (std::size_t m = 0; m < out.size(); ++m) {
        out[m] = coeff(m) - other.coeff(m);
    }
    return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& other) const {
    if (is_zero() || other.is_zero()) {
        return RatPolynomial();
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return RatPolynomial(std::move(out));
}

std::string RatPolynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const Rational& c = coeffs_[idx];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (!unit || idx == 0) {
            out += mag.get_str();
        }
        if (idx >= 1) {
            if (!unit) {
                out += "*";
            }
            out += "x";
            if (idx > 1) {
                out += "^" + std::to_string(idx);
            }
        }
    }
    return out;
}

RatPolynomial derivative(const RatPolynomial& p, unsigned long k) {
    return p.derivative(k);
}

RatPolynomial build_f(const Rational& r, unsigned long n) {
    if (r <= 0) {
        throw InvalidInput("build_f: r must be positive");
    }
    if (n < 1) {
        throw InvalidInput("build_f: n must be >= 1");
    }
    const Integer& a = r.get_num();
    const Integer& b = r.get_den();
    const Integer n_fact = factorial(n);

    // (b^n/n!) x^n (r-x)^n = sum_t (-1)^t C(n,t) a^{n-t} b^t / n! * x^{n+t}
    std::vector<Rational> coeffs(2 * n + 1, Rational(0));
    Integer binom = 1;       // C(n, t)
    Integer apow;            // a^{n-t}
    Integer bpow = 1;        // b^t
    mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), n);
    for (unsigned long t = 0; t <= n; ++t) {
        Integer num = binom * apow * bpow;
        if (t % 2 == 1) {
            num = -num;
        }
        coeffs[n + t] = canonicalize(num, n_fact);
        if (t < n) {
            binom = binom * (n - t) / (t + 1);
            mpz_divexact(apow.get_mpz_t(), apow.get_mpz_t(), a.get_mpz_t());
            bpow *= b;
        }
    }
    RatPolynomial f(std::move(coeffs));
    if (f.degree() != static_cast<int>(2 * n)) {
        throw PropertyViolation("build_f: degree is not 2n");
    }
    return f;
}

NivenPair build_F(const Rational& r, unsigned long n) {
    NivenPair pair;
    pair.n = n;
    pair.r = r;
    pair.f = build_f(r, n);

    RatPolynomial F;
    RatPolynomial d = pair.f;
    for (unsigned long j = 0; j <= n; ++j) {
        F = (j % 2 == 0) ? F + d : F - d;
        if (j < n) {
            d = d.derivative(2);
        }
    }
    pair.F = std::move(F);
    pair.F_at_0 = pair.F.coeff(0);
    pair.F_at_r = pair.F.evaluate(r);

    if (pair.F.degree() != static_cast<int>(2 * n)) {
        throw PropertyViolation("build_F: degree of F is not 2n");
    }
    if (pair.F_at_0 != pair.F_at_r) {
        throw PropertyViolation("build_F: F(0) != F(r)");
    }
    if (pair.F_at_0.get_den() != 1) {
        throw PropertyViolation("build_F: F(0) is not an integer");
    }
    if (pair.F + pair.F.derivative(2) != pair.f) {
        throw PropertyViolation("build_F: F + F'' != f");
    }
    return pair;
}

Rational F_at_zero(const Rational& r, unsigned long n) {
    RatPolynomial f = build_f(r, n);
    Rational acc(0);
    Integer fact = 1;  // (2j)!
    for (unsigned long j = 0; j <= n; ++j) {
        if (j > 0) {
            fact *= Integer(2 * j - 1) * Integer(2 * j);
        }
        if (2 * j < n) {
            continue;  // [x^{2j}] f = 0 below degree n
        }
        const Rational term = Rational(fact) * f.coeff(2 * j);
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

std::vector<EndpointDerivative> derivatives_at_endpoints(const NivenPair& pair) {
    std::vector<EndpointDerivative> out;
    out.reserve(2 * pair.n + 1);
    RatPolynomial d = pair.f;
    for (unsigned long j = 0; j <= 2 * pair.n; ++j) {
        out.push_back({j, d.coeff(0), d.evaluate(pair.r)});
        d = d.derivative(1);
    }
    return out;
}

}  // namespace irrat
