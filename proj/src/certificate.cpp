#include "irrat/certificate.hpp"

#include <algorithm>
#include <limits>

#include "json.hpp"

namespace irrat {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr unsigned long kSchemaVersion = 1;
constexpr const char* kConclusion = "FORCES_K_EQUALS_1";
// Resource guards for parsed certificates; generation stays far below these.
// The coefficient table at n holds ~n/2 integers of ~n log n digits, so the
// cap keeps verification within desk-scale memory.
constexpr unsigned long kMaxCertificateN = 20'000;
constexpr unsigned long kMaxIntegerChars = 1'000'000;
constexpr unsigned long kMaxVerifyWork = 200'000'000;

std::string int_str(const Integer& v) { return v.get_str(); }

ordered_json rational_json(const Rational& q) {
    ordered_json j;
    j["num"] = int_str(q.get_num());
    j["den"] = int_str(q.get_den());
    return j;
}

}  // namespace

CertifyResult certify(const PiClaim& claim) {
    if (claim.k != -1 && claim.k != 1) {
        throw InvalidClaim("certify: cos r forces k into {-1, +1}");
    }
    if (claim.r <= 0) {
        throw InvalidClaim("certify: claimed r must be positive");
    }
    if (claim.k == 1) {
        return NotRefutable{
            claim,
            "the argument concludes cos r = 1, so a claim with k = +1 is "
            "consistent with it and nothing is refuted"};
    }

    RefutationCertificate cert;
    cert.schema_version = kSchemaVersion;
    cert.claim = claim;
    cert.threshold = threshold(claim.r);
    if (cert.threshold.n_star > kMaxCertificateN) {
        throw InvalidClaim("certify: claim needs n beyond the supported size");
    }

    // Smallest odd prime with p - 1 >= n*; the certificate's own bound must
    // hold at n = p - 1, which the threshold minimality does not guarantee
    // for r < 1, so re-check and advance if needed.
    Integer p = smallest_odd_prime_at_least(Integer(cert.threshold.n_star) + 1);
    for (;;) {
        const unsigned long n = p.get_ui() - 1;
        const Rational t = bound_term(claim.r, n);
        if (t < 1) {
            cert.prime = p.get_ui();
            cert.n = n;
            cert.bound_term = t;
            break;
        }
        p = smallest_odd_prime_at_least(p + 2);
    }

    cert.eisenstein = eisenstein_check(cert.prime);

    cert.F0 = closed_form_F0(claim.r, cert.n);
    const Rational symbolic = F_at_zero(claim.r, cert.n);
    if (symbolic.get_den() != 1 || symbolic.get_num() != cert.F0) {
        throw CheckFailed("certify: closed-form and symbolic F_n(0) disagree");
    }
    if (cert.F0 == 0) {
        throw CheckFailed("certify: F_n(0) = 0");
    }

    cert.conclusion = kConclusion;
    return cert;
}

std::string serialize(const RefutationCertificate& cert) {
    ordered_json j;
    j["schema_version"] = std::to_string(cert.schema_version);
    j["claim"] = ordered_json{};
    j["claim"]["r"] = rational_json(cert.claim.r);
    j["claim"]["k"] = std::to_string(cert.claim.k);
    j["threshold"] = ordered_json{};
    j["threshold"]["r"] = rational_json(cert.threshold.r);
    j["threshold"]["n_star"] = std::to_string(cert.threshold.n_star);
    j["threshold"]["term_at_n_star"] = rational_json(cert.threshold.term_at_n_star);
    j["prime"] = std::to_string(cert.prime);
    j["n"] = std::to_string(cert.n);
    ordered_json eis;
    eis["p"] = std::to_string(cert.eisenstein.p);
    eis["n"] = std::to_string(cert.eisenstein.n);
    ordered_json evidence = ordered_json::array();
    for (const ValuationEvidence& e : cert.eisenstein.divisibility_evidence) {
        ordered_json entry;
        entry["i"] = std::to_string(e.i);
        entry["valuation"] = std::to_string(e.valuation);
        evidence.push_back(std::move(entry));
    }
    eis["divisibility_evidence"] = std::move(evidence);
    eis["constant_term_valuation"] =
        std::to_string(cert.eisenstein.constant_term_valuation);
    eis["leading_term"] = int_str(cert.eisenstein.leading_term);
    j["eisenstein"] = std::move(eis);
    j["F0"] = int_str(cert.F0);
    j["bound_check"] = ordered_json{};
    j["bound_check"]["term"] = rational_json(cert.bound_term);
    j["bound_check"]["less_than_one"] = cert.bound_term < 1;
    j["conclusion"] = cert.conclusion;
    return j.dump(2) + "\n";
}

namespace {

void require_keys(const ordered_json& j, const char* where,
                  std::initializer_list<const char*> keys) {
    if (!j.is_object()) {
        throw MalformedCertificate(std::string(where) + ": expected an object");
    }
    for (const char* key : keys) {
        if (!j.contains(key)) {
            throw MalformedCertificate(std::string(where) + ": missing field '" +
                                       key + "'");
        }
    }
    for (const auto& item : j.items()) {
        if (std::find_if(keys.begin(), keys.end(), [&](const char* key) {
                return item.key() == key;
            }) == keys.end()) {
            throw MalformedCertificate(std::string(where) + ": unknown field '" +
                                       item.key() + "'");
        }
    }
}

Integer parse_integer(const ordered_json& j, const std::string& field) {
    if (!j.is_string()) {
        throw MalformedCertificate(field + ": integers must be decimal strings");
    }
    const std::string& text = j.get_ref<const std::string&>();
    if (text.empty()) {
        throw MalformedCertificate(field + ": empty integer");
    }
    if (text.size() > kMaxIntegerChars) {
        throw MalformedCertificate(field + ": beyond supported size");
    }
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) {
        throw MalformedCertificate(field + ": not a decimal integer");
    }
    for (std::size_t idx = start; idx < text.size(); ++idx) {
        if (text[idx] < '0' || text[idx] > '9') {
            throw MalformedCertificate(field + ": not a decimal integer");
        }
    }
    return Integer(text, 10);
}

unsigned long parse_ulong(const ordered_json& j, const std::string& field) {
    Integer v = parse_integer(j, field);
    if (v < 0 || !v.fits_ulong_p()) {
        throw MalformedCertificate(field + ": out of range");
    }
    return v.get_ui();
}

Rational parse_rational(const ordered_json& j, const std::string& field) {
    require_keys(j, field.c_str(), {"num", "den"});
    Integer num = parse_integer(j.at("num"), field + ".num");
    Integer den = parse_integer(j.at("den"), field + ".den");
    if (den <= 0) {
        throw MalformedCertificate(field + ": denominator must be positive");
    }
    if (gcd(num, den) != 1) {
        throw MalformedCertificate(field + ": fraction not in lowest terms");
    }
    Rational q(num, den);
    q.canonicalize();  // already canonical; normalizes internal representation
    return q;
}

}  // namespace

RefutationCertificate parse_certificate(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedCertificate(std::string("invalid JSON: ") + e.what());
    }
    require_keys(j, "certificate",
                 {"schema_version", "claim", "threshold", "prime", "n",
                  "eisenstein", "F0", "bound_check", "conclusion"});

    RefutationCertificate cert;
    cert.schema_version = parse_ulong(j.at("schema_version"), "schema_version");

    const ordered_json& claim = j.at("claim");
    require_keys(claim, "claim", {"r", "k"});
    cert.claim.r = parse_rational(claim.at("r"), "claim.r");
    Integer k = parse_integer(claim.at("k"), "claim.k");
    if (!k.fits_sint_p()) {
        throw MalformedCertificate("claim.k: out of range");
    }
    cert.claim.k = static_cast<int>(k.get_si());

    const ordered_json& th = j.at("threshold");
    require_keys(th, "threshold", {"r", "n_star", "term_at_n_star"});
    cert.threshold.r = parse_rational(th.at("r"), "threshold.r");
    cert.threshold.n_star = parse_ulong(th.at("n_star"), "threshold.n_star");
    cert.threshold.term_at_n_star =
        parse_rational(th.at("term_at_n_star"), "threshold.term_at_n_star");

    cert.prime = parse_ulong(j.at("prime"), "prime");
    cert.n = parse_ulong(j.at("n"), "n");
    if (cert.n > kMaxCertificateN) {
        throw MalformedCertificate("n: beyond supported certificate size");
    }

    const ordered_json& eis = j.at("eisenstein");
    require_keys(eis, "eisenstein",
                 {"p", "n", "divisibility_evidence", "constant_term_valuation",
                  "leading_term"});
    cert.eisenstein.p = parse_ulong(eis.at("p"), "eisenstein.p");
    cert.eisenstein.n = parse_ulong(eis.at("n"), "eisenstein.n");
    const ordered_json& evidence = eis.at("divisibility_evidence");
    if (!evidence.is_array()) {
        throw MalformedCertificate("eisenstein.divisibility_evidence: expected array");
    }
    for (const ordered_json& entry : evidence) {
        require_keys(entry, "divisibility_evidence entry", {"i", "valuation"});
        ValuationEvidence e;
        e.i = parse_ulong(entry.at("i"), "divisibility_evidence.i");
        e.valuation =
            parse_ulong(entry.at("valuation"), "divisibility_evidence.valuation");
        cert.eisenstein.divisibility_evidence.push_back(e);
    }
    cert.eisenstein.constant_term_valuation = parse_ulong(
        eis.at("constant_term_valuation"), "eisenstein.constant_term_valuation");
    cert.eisenstein.leading_term =
        parse_integer(eis.at("leading_term"), "eisenstein.leading_term");

    cert.F0 = parse_integer(j.at("F0"), "F0");

    const ordered_json& bound = j.at("bound_check");
    require_keys(bound, "bound_check", {"term", "less_than_one"});
    cert.bound_term = parse_rational(bound.at("term"), "bound_check.term");
    if (!bound.at("less_than_one").is_boolean() ||
        !bound.at("less_than_one").get<bool>()) {
        throw MalformedCertificate("bound_check.less_than_one: must be true");
    }

    if (!j.at("conclusion").is_string()) {
        throw MalformedCertificate("conclusion: expected a string");
    }
    cert.conclusion = j.at("conclusion").get<std::string>();
    return cert;
}

VerificationResult verify(const RefutationCertificate& cert) {
    const auto fail = [](const char* field) {
        return VerificationResult{false, field};
    };

    if (cert.schema_version != kSchemaVersion) {
        return fail("schema_version");
    }
    if (cert.claim.r <= 0) {
        return fail("claim.r");
    }
    if (cert.claim.k != -1) {
        return fail("claim.k");
    }

    // Resource guard: the recomputation cost scales with the digit count of
    // the claim times the certificate's own indices, so reject combinations
    // no honest certificate reaches before doing any heavy arithmetic.
    const unsigned long r_digits =
        mpz_sizeinbase(cert.claim.r.get_num().get_mpz_t(), 10) +
        mpz_sizeinbase(cert.claim.r.get_den().get_mpz_t(), 10) + 2;
    const unsigned long max_index =
        std::max(cert.threshold.n_star, cert.n) + 1;
    if (cert.threshold.n_star > kMaxCertificateN ||
        max_index > kMaxVerifyWork / r_digits) {
        return fail("threshold.n_star");
    }

    // Threshold recomputed from the claim alone, bounded by the stored n*:
    // every term before n* must be >= 1 and the term at n* below 1.
    if (cert.threshold.r != cert.claim.r) {
        return fail("threshold.r");
    }
    {
        const Rational br2 = canonicalize(
            cert.claim.r.get_num() * cert.claim.r.get_num(),
            cert.claim.r.get_den());
        Rational t = cert.claim.r;
        for (unsigned long n = 1; n <= cert.threshold.n_star; ++n) {
            t *= br2;
            t /= Rational(n);
            if ((t < 1) != (n == cert.threshold.n_star)) {
                return fail("threshold.n_star");
            }
        }
        if (t != cert.threshold.term_at_n_star) {
            return fail("threshold.term_at_n_star");
        }
    }

    if (cert.prime < 3 || cert.prime % 2 == 0 || !is_prime(Integer(cert.prime))) {
        return fail("prime");
    }
    if (cert.n != cert.prime - 1 || cert.n < cert.threshold.n_star ||
        cert.n > kMaxCertificateN) {
        return fail("n");
    }

    const Rational t = bound_term(cert.claim.r, cert.n);
    if (t != cert.bound_term) {
        return fail("bound_check.term");
    }
    if (!(t < 1)) {
        return fail("bound_check.less_than_one");
    }

    if (cert.eisenstein.p != cert.prime) {
        return fail("eisenstein.p");
    }
    if (cert.eisenstein.n != cert.n) {
        return fail("eisenstein.n");
    }
    const CoefficientTable table = closed_form_coeffs(cert.n);
    const Integer prime(cert.prime);
    if (cert.eisenstein.divisibility_evidence.size() != cert.n / 2) {
        return fail("eisenstein.divisibility_evidence");
    }
    for (unsigned long m = 0; m < cert.n / 2; ++m) {
        const ValuationEvidence& e = cert.eisenstein.divisibility_evidence[m];
        if (e.i != 2 * m || e.valuation < 1 ||
            e.valuation != p_adic_valuation(table.entries[e.i], prime)) {
            return fail("eisenstein.divisibility_evidence");
        }
    }
    if (cert.eisenstein.constant_term_valuation != 1 ||
        p_adic_valuation(table.entries[0], prime) != 1) {
        return fail("eisenstein.constant_term_valuation");
    }
    if (cert.eisenstein.leading_term != table.entries[cert.n] ||
        abs(cert.eisenstein.leading_term) != 1 ||
        mpz_divisible_p(cert.eisenstein.leading_term.get_mpz_t(),
                        prime.get_mpz_t())) {
        return fail("eisenstein.leading_term");
    }

    // F_n(0) by both independent routes.
    if (cert.F0 == 0) {
        return fail("F0");
    }
    Integer closed;
    {
        const Rational& r = cert.claim.r;
        const unsigned long half = cert.n / 2;
        const Integer a2 = r.get_num() * r.get_num();
        const Integer b2 = r.get_den() * r.get_den();
        Integer bpow;
        mpz_pow_ui(bpow.get_mpz_t(), b2.get_mpz_t(), half);
        Integer apow = 1;
        closed = 0;
        for (unsigned long m = 0; m <= half; ++m) {
            closed += table.entries[2 * m] * apow * bpow;
            if (m < half) {
                apow *= a2;
                mpz_divexact(bpow.get_mpz_t(), bpow.get_mpz_t(), b2.get_mpz_t());
            }
        }
    }
    if (closed != cert.F0) {
        return fail("F0");
    }
    const Rational symbolic = F_at_zero(cert.claim.r, cert.n);
    if (symbolic.get_den() != 1 || symbolic.get_num() != cert.F0) {
        return fail("F0");
    }

    if (cert.conclusion != kConclusion) {
        return fail("conclusion");
    }
    return VerificationResult{true, ""};
}

VerificationResult verify_text(const std::string& json_text) {
    return verify(parse_certificate(json_text));
}

}  // namespace irrat
