#include "irrat/analytic_bounds.hpp"

#include <algorithm>

namespace irrat {

namespace {

Integer pow10(long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

// ceil(|q| * 10^scale), the number of ulps dominating |q|.
Integer ceil_ulps(const Rational& q, long scale) {
    Integer num = abs(q.get_num()) * pow10(scale);
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

constexpr long kMaxSeriesDigits = 200;
constexpr long kMaxWorkingDigits = 250;
constexpr long kGuardDigits = 10;

}  // namespace

HighPrecision HighPrecision::from_rational(const Rational& v, long scale) {
    HighPrecision out;
    out.scale_ = scale;
    Integer scaled = v.get_num() * pow10(scale);
    Integer rem;
    mpz_fdiv_qr(out.mantissa_.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
                v.get_den().get_mpz_t());
    if (rem == 0) {
        out.err_ = 0;
    } else {
        if (2 * rem >= v.get_den()) {
            out.mantissa_ += 1;
        }
        out.err_ = 1;
    }
    return out;
}

Rational HighPrecision::value() const {
    return canonicalize(mantissa_, pow10(scale_));
}

Rational HighPrecision::error_bound() const {
    return canonicalize(err_, pow10(scale_));
}

HighPrecision HighPrecision::operator+(const HighPrecision& other) const {
    if (scale_ != other.scale_) {
        throw CheckFailed("HighPrecision: mixed scales in +");
    }
    HighPrecision out;
    out.scale_ = scale_;
    out.mantissa_ = mantissa_ + other.mantissa_;
    out.err_ = err_ + other.err_;
    return out;
}

HighPrecision HighPrecision::operator-(const HighPrecision& other) const {
    return *this + (-other);
}

HighPrecision HighPrecision::operator-() const {
    HighPrecision out = *this;
    out.mantissa_ = -out.mantissa_;
    return out;
}

HighPrecision HighPrecision::operator*(const HighPrecision& other) const {
    if (scale_ != other.scale_) {
        throw CheckFailed("HighPrecision: mixed scales in *");
    }
    const Integer unit = pow10(scale_);
    HighPrecision out;
    out.scale_ = scale_;

    Integer product = mantissa_ * other.mantissa_;
    Integer rem;
    mpz_fdiv_qr(out.mantissa_.get_mpz_t(), rem.get_mpz_t(),
                product.get_mpz_t(), unit.get_mpz_t());
    bool exact_division = rem == 0;
    if (!exact_division && 2 * rem >= unit) {
        out.mantissa_ += 1;
    }

    // |a b - round(a b)| <= (|a| eb + |b| ea + ea eb) + rounding ulp.
    Integer err_num =
        abs(mantissa_) * other.err_ + abs(other.mantissa_) * err_ + err_ * other.err_;
    mpz_cdiv_q(out.err_.get_mpz_t(), err_num.get_mpz_t(), unit.get_mpz_t());
    if (!exact_division) {
        out.err_ += 1;
    }
    return out;
}

void HighPrecision::add_error_ulps(const Integer& ulps) {
    err_ += ulps;
}

std::string HighPrecision::to_string(long digits) const {
    if (digits < 0 || digits > scale_) {
        digits = scale_;
    }
    Integer shown;
    // Truncate toward zero to the display precision.
    mpz_tdiv_q(shown.get_mpz_t(), mantissa_.get_mpz_t(),
               pow10(scale_ - digits).get_mpz_t());
    const bool negative = shown < 0;
    Integer mag = abs(shown);
    const Integer unit = pow10(digits);
    Integer whole = mag / unit;
    Integer frac = mag % unit;
    std::string frac_str = frac.get_str();
    frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
    std::string out = (negative ? "-" : "") + whole.get_str() + "." + frac_str;
    if (err_ == 0) {
        out += " (exact)";
    } else {
        out += " +/- " + err_.get_str() + "e-" + std::to_string(scale_);
    }
    return out;
}

bool intervals_overlap(const HighPrecision& a, const HighPrecision& b) {
    if (a.scale() != b.scale()) {
        throw CheckFailed("intervals_overlap: mixed scales");
    }
    return abs(a.mantissa() - b.mantissa()) <= a.error_ulps() + b.error_ulps();
}

Rational bound_term(const Rational& r, unsigned long n) {
    // r (b r^2)^n / n! = a^{2n+1} / (b^{n+1} n!)
    const Integer& a = r.get_num();
    const Integer& b = r.get_den();
    Integer num, bpow;
    mpz_pow_ui(num.get_mpz_t(), a.get_mpz_t(), 2 * n + 1);
    mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), n + 1);
    return canonicalize(num, bpow * factorial(n));
}

Rational envelope_bound(const Rational& r, unsigned long n) {
    // (b r^2)^n / n! = a^{2n} / (b^n n!)
    const Integer& a = r.get_num();
    const Integer& b = r.get_den();
    Integer num, bpow;
    mpz_pow_ui(num.get_mpz_t(), a.get_mpz_t(), 2 * n);
    mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), n);
    return canonicalize(num, bpow * factorial(n));
}

ThresholdResult threshold(const Rational& r) {
    if (r <= 0) {
        throw InvalidInput("threshold: r must be positive");
    }
    const Rational br2 = canonicalize(r.get_num() * r.get_num(), r.get_den());
    ThresholdResult result;
    result.r = r;
    Rational t = r;
    unsigned long n = 0;
    do {
        ++n;
        t *= br2;
        t /= Rational(n);
    } while (t >= 1);
    result.n_star = n;
    result.term_at_n_star = t;
    return result;
}

bool envelope_check(const NivenPair& pair,
                    const std::vector<Rational>& samples) {
    const Rational bound = envelope_bound(pair.r, pair.n);
    for (const Rational& x : samples) {
        if (x <= 0 || x >= pair.r) {
            throw SampleOutOfRange("envelope_check: sample " + x.get_str() +
                                   " outside (0, r)");
        }
        const Rational fx = pair.f.evaluate(x);
        if (fx <= 0 || fx >= bound) {
            return false;
        }
    }
    // True maximum at the midpoint: f(r/2) = b^n r^{2n} / (4^n n!).
    const Rational half = pair.r / 2;
    const Rational fmax = pair.f.evaluate(half);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), pair.r.get_num().get_mpz_t(), 2 * pair.n);
    mpz_pow_ui(den.get_mpz_t(), pair.r.get_den().get_mpz_t(), pair.n);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * pair.n);  // * 4^n
    const Rational closed = canonicalize(num, den * factorial(pair.n));
    if (fmax != closed) {
        throw CheckFailed("envelope_check: midpoint closed form mismatch");
    }
    return fmax > 0 && fmax < bound;
}

namespace {

// Shared alternating-series evaluator. start_term is the k = 0 term, and
// step(k) gives the positive factor d with t_{k+1} = -t_k * x^2 / d. The sum
// stops at the first term that is both inside the monotone-decay regime
// (x^2 < d) and below 10^-scale; that omitted term dominates the tail.
template <typename StepDenominator>
HighPrecision alternating_sum(const Rational& x2, Rational term, long scale,
                              StepDenominator step) {
    const Rational ulp = canonicalize(1, pow10(scale));
    Rational sum(0);
    unsigned long k = 0;
    for (;;) {
        const Rational d = step(k);
        if (x2 < d && abs(term) < ulp) {
            break;
        }
        sum += term;
        term *= x2;
        term /= d;
        term = -term;
        ++k;
    }
    HighPrecision out = HighPrecision::from_rational(sum, scale);
    out.add_error_ulps(ceil_ulps(term, scale));
    return out;
}

HighPrecision sin_at_scale(const Rational& x, long scale) {
    if (x == 0) {
        return HighPrecision::from_rational(Rational(0), scale);
    }
    return alternating_sum(x * x, x, scale, [](unsigned long k) {
        return Rational(Integer(2 * k + 2) * Integer(2 * k + 3));
    });
}

HighPrecision cos_at_scale(const Rational& x, long scale) {
    return alternating_sum(x * x, Rational(1), scale, [](unsigned long k) {
        return Rational(Integer(2 * k + 1) * Integer(2 * k + 2));
    });
}

void check_series_args(const Rational& x, long digits) {
    if (digits < 1 || digits > kMaxSeriesDigits) {
        throw PrecisionUnachievable("series: digits must be in [1, " +
                                    std::to_string(kMaxSeriesDigits) + "]");
    }
    if (abs(x) > 16) {
        throw InvalidInput("series: |x| must be <= 16 (no argument reduction)");
    }
}

}  // namespace

HighPrecision sin_series(const Rational& x, long digits) {
    check_series_args(x, digits);
    return sin_at_scale(x, digits + kGuardDigits);
}

HighPrecision cos_series(const Rational& x, long digits) {
    check_series_args(x, digits);
    return cos_at_scale(x, digits + kGuardDigits);
}

namespace {

// Decimal digits of |v| rounded up; 0 for |v| < 1.
long magnitude_digits(const Rational& v) {
    Integer whole = abs(v.get_num()) / v.get_den();
    if (whole == 0) {
        return 0;
    }
    return static_cast<long>(mpz_sizeinbase(whole.get_mpz_t(), 10));
}

}  // namespace

QuadratureComparison quadrature_vs_bracket(const Rational& r, unsigned long n,
                                           long digits) {
    if (n < 1) {
        throw InvalidInput("quadrature_vs_bracket: n must be >= 1");
    }
    if (digits < 1 || digits > kMaxSeriesDigits) {
        throw PrecisionUnachievable("quadrature_vs_bracket: digits out of range");
    }
    if (r <= 0 || r > 16) {
        throw InvalidInput("quadrature_vs_bracket: r must lie in (0, 16]");
    }

    const NivenPair pair = build_F(r, n);
    const Rational F_prime_at_r = pair.F.derivative(1).evaluate(r);

    // The bracket multiplies sin/cos by coefficients as large as F(0), so
    // the guard digits must also cover that magnitude or the product error
    // would swamp the requested precision.
    const long mag = std::max({magnitude_digits(pair.F_at_0),
                               magnitude_digits(pair.F_at_r),
                               magnitude_digits(F_prime_at_r)});
    const long scale = digits + kGuardDigits + mag;
    if (scale > kMaxWorkingDigits) {
        throw PrecisionUnachievable(
            "quadrature_vs_bracket: coefficients too large for the precision budget");
    }

    // Left side: integral of f(x) sin x over [0, r] as
    // sum_j (-1)^j I_j/(2j+1)!, where I_j = int_0^r f(x) x^{2j+1} dx is an
    // exact rational. Terms alternate (I_j > 0) and decay once
    // (2j+2)(2j+3) > r^2, so the first omitted term bounds the tail.
    const Rational r2 = r * r;
    const Rational ulp = canonicalize(1, pow10(scale));
    const int deg = pair.f.degree();
    std::vector<Rational> rpow(static_cast<std::size_t>(deg) + 1);
    for (int m = 0; m <= deg; ++m) {
        if (pair.f.coeff(m) == 0) {
            continue;
        }
        Integer num, den;
        mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(),
                   static_cast<unsigned long>(m) + 2);
        mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(),
                   static_cast<unsigned long>(m) + 2);
        rpow[m] = canonicalize(num, den);  // r^{m+2}, advanced by r^2 per j
    }
    Rational sum(0);
    Integer fact = 1;  // (2j+1)!
    for (unsigned long j = 0;; ++j) {
        Rational inner(0);
        for (int m = 0; m <= deg; ++m) {
            const Rational& c = pair.f.coeff(m);
            if (c == 0) {
                continue;
            }
            inner += c * rpow[m] /
                     Rational(static_cast<unsigned long>(m) + 2 * j + 2);
        }
        Rational term = inner / Rational(fact);
        if (j % 2 == 1) {
            term = -term;
        }
        const Rational decay(Integer(2 * j + 2) * Integer(2 * j + 3));
        if (r2 < decay && abs(term) < ulp) {
            HighPrecision lhs = HighPrecision::from_rational(sum, scale);
            lhs.add_error_ulps(ceil_ulps(term, scale));

            const HighPrecision sin_r = sin_at_scale(r, scale);
            const HighPrecision cos_r = cos_at_scale(r, scale);
            const HighPrecision rhs =
                HighPrecision::from_rational(F_prime_at_r, scale) * sin_r -
                HighPrecision::from_rational(pair.F_at_r, scale) * cos_r +
                HighPrecision::from_rational(pair.F_at_0, scale);

            QuadratureComparison out{lhs, rhs, false};
            const Integer gap_limit = pow10(scale - (digits - 5));
            out.agree = intervals_overlap(lhs, rhs) &&
                        abs(lhs.mantissa() - rhs.mantissa()) <= gap_limit;
            return out;
        }
        sum += term;
        for (int m = 0; m <= deg; ++m) {
            if (!(pair.f.coeff(m) == 0)) {
                rpow[m] *= r2;
            }
        }
        fact *= Integer(2 * j + 2) * Integer(2 * j + 3);
    }
}

}  // namespace irrat
