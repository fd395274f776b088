#ifndef IRRAT_ERRORS_HPP
#define IRRAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irrat {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator is zero") {}
};

struct ZeroInput : Error {
    ZeroInput() : Error("input is zero") {}
};

struct NonPrimeModulus : Error {
    explicit NonPrimeModulus(const std::string& what) : Error(what) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

struct OddN : Error {
    explicit OddN(const std::string& what) : Error(what) {}
};

struct NotOddPrime : Error {
    explicit NotOddPrime(const std::string& what) : Error(what) {}
};

// An internal consistency check failed; signals a bug, not bad input.
struct CheckFailed : Error {
    explicit CheckFailed(const std::string& what) : Error(what) {}
};

struct PropertyViolation : Error {
    explicit PropertyViolation(const std::string& what) : Error(what) {}
};

struct SampleOutOfRange : Error {
    explicit SampleOutOfRange(const std::string& what) : Error(what) {}
};

struct PrecisionUnachievable : Error {
    explicit PrecisionUnachievable(const std::string& what) : Error(what) {}
};

struct InvalidClaim : Error {
    explicit InvalidClaim(const std::string& what) : Error(what) {}
};

struct MalformedCertificate : Error {
    explicit MalformedCertificate(const std::string& what) : Error(what) {}
};

}  // namespace irrat

#endif
