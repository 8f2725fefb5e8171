#ifndef HD_ERRORS_HPP
#define HD_ERRORS_HPP

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hd {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input outside any operation's domain (zero polynomial,
/// negative binomial row, nonpositive leading parameter, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Rejection reasons for coefficient vectors that do not define a
/// valid numerical function.
enum class ValidationFailure {
    NonPositiveConstantTerm,
    NegativeLeading,
    NegativeValue,
};

struct ValidationError : Error {
    ValidationFailure failure;
    mpz_class witness;  // the j with h(j) < 0, for NegativeValue

    ValidationError(ValidationFailure f, const std::string& msg, mpz_class j = 0)
        : Error(msg), failure(f), witness(std::move(j)) {}
};

/// The hdepth scan reached the caller-supplied cap before finding a
/// failing row, and the cap is below c(h).
struct CapExceededError : Error {
    mpz_class cap;
    mpz_class c_bound;

    CapExceededError(mpz_class cap_, mpz_class c_)
        : Error("hdepth scan reached cap " + cap_.get_str() +
                " below c(h) = " + c_.get_str()),
          cap(std::move(cap_)),
          c_bound(std::move(c_)) {}
};

/// A stated hypothesis of the requested operation does not hold.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

}  // namespace hd

#endif
