#ifndef FCC_ERRORS_HPP
#define FCC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fcc {

// Base class for all library errors. Subclasses carry the failure categories
// the CLI maps onto exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* name() const { return "Error"; }
};

// Two vectors of different lengths were combined.
class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t lhs, std::size_t rhs)
        : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
    const char* name() const override { return "LengthMismatch"; }
};

// A parameter is outside its admissible range.
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& what) : Error(what) {}
    const char* name() const override { return "InvalidParameter"; }
};

// A function ball is not an interval under the stored label order. Carries
// the first violating message (as its textual form).
class ContiguityViolation : public Error {
public:
    explicit ContiguityViolation(const std::string& witness)
        : Error("function ball around " + witness + " is not a contiguous label block"),
          witness_(witness) {}
    const char* name() const override { return "ContiguityViolation"; }
    const std::string& witness() const { return witness_; }

private:
    std::string witness_;
};

// The function has more than four values in some radius-2t ball, so the
// four-row parity table does not apply.
class LambdaTooLarge : public Error {
public:
    LambdaTooLarge(std::size_t lambda, std::size_t limit)
        : Error("lambda " + std::to_string(lambda) + " exceeds limit " + std::to_string(limit)) {}
    const char* name() const override { return "LambdaTooLarge"; }
};

// A supplied parity code has too few words or too small a minimum distance.
class InvalidParityCode : public Error {
public:
    explicit InvalidParityCode(const std::string& what) : Error(what) {}
    const char* name() const override { return "InvalidParityCode"; }
};

// The threshold T is outside the window the requested construction covers.
class ThresholdOutOfRange : public Error {
public:
    explicit ThresholdOutOfRange(const std::string& what) : Error(what) {}
    const char* name() const override { return "ThresholdOutOfRange"; }
};

// A matched parity assignment breaks a pairwise distance requirement.
class DistanceRequirementViolation : public Error {
public:
    DistanceRequirementViolation(std::size_t i, std::size_t j, int required, int actual)
        : Error("rows " + std::to_string(i) + "," + std::to_string(j) + " require distance "
                + std::to_string(required) + ", got " + std::to_string(actual)),
          row_i_(i), row_j_(j), required_(required), actual_(actual) {}
    const char* name() const override { return "DistanceRequirementViolation"; }
    std::size_t row_i() const { return row_i_; }
    std::size_t row_j() const { return row_j_; }
    int required() const { return required_; }
    int actual() const { return actual_; }

private:
    std::size_t row_i_, row_j_;
    int required_, actual_;
};

// An exact search or exhaustive scan hit its configured budget. Carries the
// best-known bracket on the answer at the moment the budget ran out.
class SearchBudgetExceeded : public Error {
public:
    SearchBudgetExceeded(const std::string& what, std::uint64_t known_lower, std::uint64_t known_upper)
        : Error(what + " (known interval [" + std::to_string(known_lower) + ", "
                + (known_upper == kUnknown ? std::string("?") : std::to_string(known_upper)) + "])"),
          known_lower_(known_lower), known_upper_(known_upper) {}
    const char* name() const override { return "SearchBudgetExceeded"; }
    static constexpr std::uint64_t kUnknown = ~std::uint64_t{0};
    std::uint64_t known_lower() const { return known_lower_; }
    std::uint64_t known_upper() const { return known_upper_; }

private:
    std::uint64_t known_lower_;
    std::uint64_t known_upper_;
};

// A file or flag set could not be interpreted.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
    const char* name() const override { return "ConfigError"; }
};

} // namespace fcc

#endif
