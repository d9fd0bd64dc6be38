#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace indexlab {

enum class ErrorKind {
    InvalidDegree,
    InvalidInput,
    InvalidPrime,
    RankDeficient,
    ZeroModP,
    ReduciblePolynomial,
    DegreeOutOfScope,
    RefinementCapExceeded,
    NotAField,
    NotReduced,
    NotApplicable,
    UnknownFamily,
    ParseError,
    FactorizationFailed,
};

std::string_view to_string(ErrorKind kind);

/* Every failure raised by the library carries a kind so callers (and the
 * CLI exit-code mapping) can dispatch without parsing messages. */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace indexlab
