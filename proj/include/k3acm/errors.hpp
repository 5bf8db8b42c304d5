#pragma once

#include <stdexcept>
#include <string>

namespace k3acm {

// Every failure mode the library can report. Inputs that violate a documented
// precondition map to a specific code; internal_inconsistency is reserved for
// states the model guarantees cannot occur (it firing means a bug, not bad input).
enum class ErrorCode {
    invalid_input,
    not_symmetric,
    odd_diagonal,
    wrong_signature,
    dimension_mismatch,
    zero_class,
    non_positive_polarization,
    out_of_range,
    overflow,
    not_ample,
    not_effective,
    not_nef,
    nonzero_square,
    not_very_ample,
    neither_side_effective,
    out_of_scope,
    empty_window,
    bound_too_small,
    precondition_violated,
    internal_inconsistency,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace k3acm
