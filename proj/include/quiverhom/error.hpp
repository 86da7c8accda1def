#ifndef QUIVERHOM_ERROR_HPP
#define QUIVERHOM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qh {

enum class ErrorCode {
    InvalidQuiver,
    ComposeMismatch,
    NotAdmissible,
    InfiniteDimensional,
    BadRelation,
    ZeroPath,
    UnsupportedIdeal,
    Indeterminate,
    FieldMismatch,
    NoDecomposition,
    Ambiguous,
    HypothesisViolated,
    ParseError,
    InvalidArgument,
    InvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace qh

#endif
