#pragma once

#include <stdexcept>
#include <string>

namespace zadkit {

// Error categories mirror the CLI exit-code contract.
enum class Errc {
    FieldMismatch,
    DimensionMismatch,
    InvalidArgument,
    OverBudget,
    UnsupportedRadicalRegime,
    NotIdempotent,
    NotIrreducible,
    ParseError,
    Discrepancy,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace zadkit
