#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace umbral {

/// Domain-level failure with a stable machine-readable code.
///
/// Codes used across the library:
///   LevelMismatch, NotInvertibleSeq, SingularMatrix, NonUnitSeries,
///   NotInvertibleSeries, DegreeExceedsLevel, ConstantTermNonzero,
///   WrongDegree, NonConstantPairing, NotInvertiblePoly,
///   RootCountMismatch, RepeatedRoot, NotARoot, NotApolar,
///   NoConvergence, DivisionByZero, ParseError.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Root finder failed to converge within the iteration budget.
class NoConvergence : public DomainError {
public:
    NoConvergence(int max_iter, std::vector<double> residuals)
        : DomainError("NoConvergence",
                      "root iteration did not converge within " +
                          std::to_string(max_iter) + " iterations"),
          max_iter_(max_iter),
          residuals_(std::move(residuals)) {}

    int max_iter() const noexcept { return max_iter_; }
    const std::vector<double>& residuals() const noexcept { return residuals_; }

private:
    int max_iter_;
    std::vector<double> residuals_;
};

}  // namespace umbral
