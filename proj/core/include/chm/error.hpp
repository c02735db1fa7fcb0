#ifndef CHM_ERROR_HPP
#define CHM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chm {

enum class ErrorKind {
    ShapeMismatch,
    RankDeficient,
    ZeroEntry,
    ZeroMatrix,
    NotDephased,
    NotHadamard,
    NotUnitary,
    NotTwoUnitaryPermutation,
    DomainError,
    BadPlacement,
    UnknownName,
    ArityMismatch,
    ParseError,
    RangeError,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception; `kind` identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace chm

#endif
