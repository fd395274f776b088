#ifndef IRRAT_CERTIFICATE_HPP
#define IRRAT_CERTIFICATE_HPP

#include <string>
#include <variant>

#include "irrat/analytic_bounds.hpp"
#include "irrat/eisenstein.hpp"
#include "irrat/exact_arith.hpp"

namespace irrat {

// A claimed rational value r of pi together with the claimed value of cos r.
// sin^2 + cos^2 = 1 forces k into {-1, +1}; anything else is InvalidClaim.
struct PiClaim {
    Rational r;
    int k = -1;
};

// Conditional refutation of the claim (r, k=-1): IF sin r = 0 and cos r = k
// held, then (1-k) F_n(0) would be an integer strictly between -1 and 1,
// hence 0; since F_n(0) != 0 (Eisenstein certificate), k would have to be 1.
// Every field is re-derivable from the raw integers by verify().
struct RefutationCertificate {
    unsigned long schema_version = 1;
    PiClaim claim;
    ThresholdResult threshold;
    unsigned long prime = 0;
    unsigned long n = 0;  // prime - 1
    EisensteinCertificate eisenstein;
    Integer F0;           // exact F_n(0) for the claimed r
    Rational bound_term;  // exact r (b r^2)^n / n!, strictly below 1
    std::string conclusion;  // "FORCES_K_EQUALS_1"
};

// Outcome for k = +1 claims: the argument concludes k = 1, so such a claim
// is consistent with it and nothing is refuted.
struct NotRefutable {
    PiClaim claim;
    std::string reason;
};

using CertifyResult = std::variant<RefutationCertificate, NotRefutable>;

// Deterministic, pure function of the claim. Throws InvalidClaim.
CertifyResult certify(const PiClaim& claim);

// Canonical JSON: fixed field order, every integer a decimal string;
// byte-identical across runs for the same certificate.
std::string serialize(const RefutationCertificate& cert);

// Strict parse: unknown fields, missing fields, and non-integer digit
// strings are rejected with MalformedCertificate. Values are not checked
// here; verify() does the mathematics.
RefutationCertificate parse_certificate(const std::string& json_text);

struct VerificationResult {
    bool ok = false;
    std::string failing_field;  // first failing check, empty when ok

    explicit operator bool() const { return ok; }
};

// Recomputes everything from the certificate's raw integers alone: primality
// of p, the threshold recurrence, the bound inequality, the whole coefficient
// table with its p-adic valuations, and F_n(0) by both independent routes.
VerificationResult verify(const RefutationCertificate& cert);

// parse + verify.
VerificationResult verify_text(const std::string& json_text);

}  // namespace irrat

#endif
