#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccfngbm {

/// Error categories. Each maps to a distinct process exit code in the CLI.
enum class ErrorCategory {
    Config,              // invalid run configuration or split
    Lookup,              // unknown fixture / model name
    Parse,               // malformed input file
    Validation,          // well-formed input violating a data invariant
    Domain,              // operator called outside its domain
    Estimation,          // design system cannot be built (non-positive background value, a = 0)
    SingularSystem,      // rank-deficient or ill-conditioned normal equations
    EvaluationDomain,    // time response leaves the real domain
    OptimizationFailure, // every candidate infeasible
    Io,
};

inline std::string_view category_name(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::Config: return "config";
        case ErrorCategory::Lookup: return "lookup";
        case ErrorCategory::Parse: return "parse";
        case ErrorCategory::Validation: return "validation";
        case ErrorCategory::Domain: return "domain";
        case ErrorCategory::Estimation: return "estimation";
        case ErrorCategory::SingularSystem: return "singular-system";
        case ErrorCategory::EvaluationDomain: return "evaluation-domain";
        case ErrorCategory::OptimizationFailure: return "optimization-failure";
        case ErrorCategory::Io: return "io";
    }
    return "unknown";
}

inline int exit_code(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::Config: return 2;
        case ErrorCategory::Lookup: return 3;
        case ErrorCategory::Parse: return 4;
        case ErrorCategory::Validation: return 5;
        case ErrorCategory::Domain: return 6;
        case ErrorCategory::Estimation: return 7;
        case ErrorCategory::SingularSystem: return 8;
        case ErrorCategory::EvaluationDomain: return 9;
        case ErrorCategory::OptimizationFailure: return 10;
        case ErrorCategory::Io: return 11;
    }
    return 1;
}

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

    /// True for failures the optimizer maps to an infeasible-candidate penalty.
    bool infeasible_candidate() const noexcept {
        return category_ == ErrorCategory::Estimation ||
               category_ == ErrorCategory::SingularSystem ||
               category_ == ErrorCategory::EvaluationDomain ||
               category_ == ErrorCategory::Domain;
    }

private:
    ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory c, const std::string& message) {
    throw Error(c, message);
}

}  // namespace ccfngbm
