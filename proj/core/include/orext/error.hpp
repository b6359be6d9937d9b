#pragma once

#include <stdexcept>
#include <string>

namespace orext {

// Library-wide exception. Every throw site attaches a stable code so the
// CLI can map failures to machine-readable error strings and exit codes.
class Error : public std::runtime_error {
public:
    enum class Code {
        Parse,              // input is not JSON at all
        Schema,             // JSON is well-formed but violates a value schema
        DimensionMismatch,  // operands live over different index sets
        ContextMismatch,    // operands belong to different Ore contexts
        InvalidDerivation,  // matrix fails the twisted-derivation conditions
        FixedPointDiagonal, // nonzero diagonal parameter at a fixed point
        NonzeroDelta,       // operation defined only for the skew (delta = 0) case
        InvalidArgument,    // other precondition violation
        Io,                 // file could not be read
    };

    Error(Code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Code code() const noexcept { return code_; }

    const char* code_string() const noexcept {
        switch (code_) {
            case Code::Parse: return "parse_error";
            case Code::Schema: return "schema_error";
            case Code::DimensionMismatch: return "dimension_mismatch";
            case Code::ContextMismatch: return "context_mismatch";
            case Code::InvalidDerivation: return "invalid_derivation";
            case Code::FixedPointDiagonal: return "fixed_point_diagonal";
            case Code::NonzeroDelta: return "nonzero_delta";
            case Code::InvalidArgument: return "invalid_argument";
            case Code::Io: return "io_error";
        }
        return "internal_error";
    }

private:
    Code code_;
};

[[noreturn]] inline void raise(Error::Code code, const std::string& message) {
    throw Error(code, message);
}

} // namespace orext
