#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace fstruct {

enum class ErrorKind {
    Parse,
    InvalidArgument,
    DimensionMismatch,
    DegenerateRowSelection,
    QuotientDegenerate,
    QuotientNotFactorization,
    ChartDegenerate,
    NotFullDimensional,
    NotPointed,
    BetaNotInterior,
    RepeatedParameter,
    DependentBasis,
    NoCommonLattice,
    DenominatorVanishes,
    Internal,
};

[[nodiscard]] const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<long> detail = std::nullopt)
        : std::runtime_error(message), kind_(kind), detail_(detail) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    // DimensionMismatch carries the actual dimension here.
    [[nodiscard]] std::optional<long> detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::optional<long> detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              std::optional<long> detail = std::nullopt) {
    throw Error(kind, message, detail);
}

inline void require(bool condition, const std::string& message) {
    if (!condition) fail(ErrorKind::InvalidArgument, message);
}

}  // namespace fstruct
