#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "irrat/analytic_bounds.hpp"
#include "irrat/certificate.hpp"
#include "irrat/eisenstein.hpp"
#include "irrat/niven_poly.hpp"
#include "irrat/sqrt_descent.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

irrat::Rational make_r(const std::string& a, const std::string& b) {
    return irrat::canonicalize(irrat::Integer(a, 10), irrat::Integer(b, 10));
}

int run_sqrt_classify(const std::string& n_text) {
    const irrat::Integer n(n_text, 10);
    const irrat::SqrtClassification c = irrat::classify_sqrt(n);
    std::cout << "n = " << c.n.get_str() << "\n";
    for (const irrat::DescentStep& step : c.trace) {
        std::cout << "  " << irrat::describe(step) << "\n";
    }
    if (c.is_rational()) {
        std::cout << "verdict: sqrt(" << c.n.get_str() << ") = "
                  << c.root->get_str() << " (rational)\n";
    } else {
        std::cout << "verdict: sqrt(" << c.n.get_str() << ") is irrational\n";
    }
    std::cout << "trace replay: " << (irrat::replay_trace(c) ? "ok" : "FAILED")
              << "\n";
    return irrat::replay_trace(c) ? kExitOk : kExitVerifyFailed;
}

int run_niven_eval(const std::string& a, const std::string& b,
                   unsigned long n) {
    const irrat::Rational r = make_r(a, b);
    const irrat::NivenPair pair = irrat::build_F(r, n);
    std::cout << "r = " << r.get_str() << ", n = " << n << "\n";
    std::cout << "deg f = " << pair.f.degree() << ", deg F = " << pair.F.degree()
              << "\n";
    if (n <= 6) {
        std::cout << "f = " << pair.f.to_string() << "\n";
        std::cout << "F = " << pair.F.to_string() << "\n";
    }
    std::cout << "F(0) = " << pair.F_at_0.get_str() << "\n";
    std::cout << "F(r) = " << pair.F_at_r.get_str() << "\n";
    std::cout << "F(0) = F(r): ok\n";
    std::cout << "F(0) integral: ok\n";
    std::cout << "F + F'' = f: ok\n";  // all three asserted by construction
    const irrat::Rational fast = irrat::F_at_zero(r, n);
    std::cout << "endpoint-derivative route agrees: "
              << (fast == pair.F_at_0 ? "ok" : "FAILED") << "\n";
    return fast == pair.F_at_0 ? kExitOk : kExitVerifyFailed;
}

int run_coeffs(unsigned long n) {
    const irrat::CoefficientTable table = irrat::closed_form_coeffs(n);
    std::cout << "n = " << table.n << "\n";
    for (unsigned long i = 0; i <= table.n; ++i) {
        std::cout << "a[" << i << "] = " << table.entries[i].get_str() << "\n";
    }
    return kExitOk;
}

int run_eisenstein(unsigned long p) {
    const irrat::EisensteinCertificate cert = irrat::eisenstein_check(p);
    std::cout << "p = " << cert.p << ", n = " << cert.n << "\n";
    for (const irrat::ValuationEvidence& e : cert.divisibility_evidence) {
        std::cout << "  v_" << cert.p << "(a[" << e.i << "]) = " << e.valuation
                  << "\n";
    }
    std::cout << "constant term valuation: " << cert.constant_term_valuation
              << " (exactly 1)\n";
    std::cout << "leading term: " << cert.leading_term.get_str()
              << " (unit, not divisible by " << cert.p << ")\n";
    std::cout << "certificate valid\n";
    return kExitOk;
}

int run_threshold(const std::string& a, const std::string& b) {
    const irrat::Rational r = make_r(a, b);
    const irrat::ThresholdResult th = irrat::threshold(r);
    std::cout << "r = " << r.get_str() << "\n";
    std::cout << "n* = " << th.n_star << "\n";
    std::cout << "term at n* = " << th.term_at_n_star.get_str() << " ~ "
              << th.term_at_n_star.get_d() << "\n";
    if (th.n_star > 1) {
        std::cout << "term at n*-1 = "
                  << irrat::bound_term(r, th.n_star - 1).get_str() << " (>= 1)\n";
    }
    return kExitOk;
}

int run_quadrature(const std::string& a, const std::string& b, unsigned long n,
                   long digits) {
    const irrat::Rational r = make_r(a, b);
    const irrat::QuadratureComparison q =
        irrat::quadrature_vs_bracket(r, n, digits);
    std::cout << "r = " << r.get_str() << ", n = " << n << ", digits = " << digits
              << "\n";
    std::cout << "integral (term-wise series):  " << q.lhs.to_string(digits)
              << "\n";
    std::cout << "bracket  (antiderivative):    " << q.rhs.to_string(digits)
              << "\n";
    const irrat::Integer gap = abs(q.lhs.mantissa() - q.rhs.mantissa());
    std::cout << "gap = " << gap.get_str() << "e-" << q.lhs.scale() << "\n";
    std::cout << "agree: " << (q.agree ? "yes" : "NO") << "\n";
    return q.agree ? kExitOk : kExitVerifyFailed;
}

int run_certify(const std::string& a, const std::string& b, int k,
                const std::string& out_path) {
    const irrat::PiClaim claim{make_r(a, b), k};
    const irrat::CertifyResult result = irrat::certify(claim);
    if (const auto* nr = std::get_if<irrat::NotRefutable>(&result)) {
        std::cout << "not refutable: " << nr->reason << "\n";
        return kExitOk;
    }
    const auto& cert = std::get<irrat::RefutationCertificate>(result);
    const std::string text = irrat::serialize(cert);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return kExitUsage;
        }
        out << text;
        std::cout << "refuted: claim (r = " << cert.claim.r.get_str()
                  << ", k = -1) is inconsistent with sin r = 0\n";
        std::cout << "p = " << cert.prime << ", n = " << cert.n
                  << ", F_n(0) has "
                  << mpz_sizeinbase(cert.F0.get_mpz_t(), 10)
                  << " digits, bound term < 1\n";
        std::cout << "certificate written to " << out_path << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        const irrat::VerificationResult result = irrat::verify_text(buffer.str());
        if (result.ok) {
            std::cout << "VERIFIED\n";
            return kExitOk;
        }
        std::cout << "FAILED: " << result.failing_field << "\n";
        return kExitVerifyFailed;
    } catch (const irrat::MalformedCertificate& e) {
        std::cout << "MALFORMED: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact irrationality engine: sqrt descent certificates and the "
        "Niven-polynomial refutation machinery for rational-pi claims"};
    app.require_subcommand(1);

    std::string n_text, a = "1", b = "1", out_path, cert_path;
    unsigned long n = 1, p = 3;
    long digits = 40;
    int k = -1;

    CLI::App* sqrt_cmd =
        app.add_subcommand("sqrt-classify", "decide whether sqrt(n) is rational");
    sqrt_cmd->add_option("n", n_text, "positive integer")->required();

    CLI::App* niven_cmd = app.add_subcommand("niven", "Niven polynomial tools");
    niven_cmd->require_subcommand(1);
    CLI::App* eval_cmd =
        niven_cmd->add_subcommand("eval", "build f_n, F_n and check properties");
    eval_cmd->add_option("--a", a, "numerator of r")->required();
    eval_cmd->add_option("--b", b, "denominator of r")->required();
    eval_cmd->add_option("--n", n, "polynomial index")->required();

    CLI::App* coeffs_cmd =
        app.add_subcommand("coeffs", "closed-form coefficient table (even n)");
    coeffs_cmd->add_option("--n", n, "even index")->required();

    CLI::App* eis_cmd = app.add_subcommand(
        "eisenstein", "Eisenstein certificate for n = p - 1");
    eis_cmd->add_option("--prime", p, "odd prime")->required();

    CLI::App* th_cmd = app.add_subcommand(
        "threshold", "smallest n with r (b r^2)^n / n! < 1");
    th_cmd->add_option("--a", a, "numerator of r")->required();
    th_cmd->add_option("--b", b, "denominator of r")->required();

    CLI::App* quad_cmd = app.add_subcommand(
        "quadrature", "compare term-wise integral against the bracket");
    quad_cmd->add_option("--a", a, "numerator of r")->required();
    quad_cmd->add_option("--b", b, "denominator of r")->required();
    quad_cmd->add_option("--n", n, "polynomial index")->required();
    quad_cmd->add_option("--digits", digits, "requested decimal digits");

    CLI::App* certify_cmd = app.add_subcommand(
        "certify", "refutation certificate for a rational-pi claim");
    certify_cmd->add_option("--a", a, "numerator of claimed r")->required();
    certify_cmd->add_option("--b", b, "denominator of claimed r")->required();
    certify_cmd->add_option("--k", k, "claimed cos r (-1 or 1)");
    certify_cmd->add_option("--out", out_path, "output JSON path");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "re-check a certificate from raw integers");
    verify_cmd->add_option("certificate", cert_path, "JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sqrt_cmd->parsed()) {
            return run_sqrt_classify(n_text);
        }
        if (niven_cmd->parsed()) {
            return run_niven_eval(a, b, n);
        }
        if (coeffs_cmd->parsed()) {
            return run_coeffs(n);
        }
        if (eis_cmd->parsed()) {
            return run_eisenstein(p);
        }
        if (th_cmd->parsed()) {
            return run_threshold(a, b);
        }
        if (quad_cmd->parsed()) {
            return run_quadrature(a, b, n, digits);
        }
        if (certify_cmd->parsed()) {
            return run_certify(a, b, k, out_path);
        }
        if (verify_cmd->parsed()) {
            return run_verify(cert_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const irrat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
