#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scffd {

/** Error taxonomy shared by the library and the CLI exit-code table.
 *
 *   validation / not_in_ring        -> CLI exit 1
 *   syntax                          -> CLI exit 2
 *   cap_exceeded                    -> CLI exit 3
 *
 * Everything else signals misuse of an operation (zero argument, tag
 * mismatch, ...) and is reported like a validation failure.
 */
enum class ErrorKind {
    zero_argument,
    unit_argument,
    division_by_zero,
    tag_mismatch,
    not_ufd,
    duplicate_node,
    repeated_index,
    stage_mismatch,
    constant_argument,
    argument_is_prime_candidate,
    unsupported_ring,
    not_in_ring,
    validation,
    syntax,
    cap_exceeded,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(ErrorKind::syntax, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::zero_argument: return "ZeroArgument";
        case ErrorKind::unit_argument: return "UnitArgument";
        case ErrorKind::division_by_zero: return "DivisionByZero";
        case ErrorKind::tag_mismatch: return "TagMismatch";
        case ErrorKind::not_ufd: return "NotUFD";
        case ErrorKind::duplicate_node: return "DuplicateNode";
        case ErrorKind::repeated_index: return "RepeatedIndex";
        case ErrorKind::stage_mismatch: return "StageMismatch";
        case ErrorKind::constant_argument: return "ConstantArgument";
        case ErrorKind::argument_is_prime_candidate: return "ArgumentIsPrimeCandidate";
        case ErrorKind::unsupported_ring: return "UnsupportedRing";
        case ErrorKind::not_in_ring: return "NotInRing";
        case ErrorKind::validation: return "ValidationError";
        case ErrorKind::syntax: return "SyntaxError";
        case ErrorKind::cap_exceeded: return "SearchCapExceeded";
    }
    return "Error";
}

}  // namespace scffd
