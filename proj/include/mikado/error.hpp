#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mikado {

enum class Errc {
    TripleNotSetLike,
    TwoLinesThroughPair,
    TooLarge,
    InvalidArgument,
    NotPrimitive,
    NotGood,
    FlagViolation,
    NotCompatible,
    SeedNotInClass,
    NotPrime,
    Reducible,
    NotSteiner,
    NotSteiner3,
    BadWitness,
    UnevenBlocks,
    UnevenLines,
    LineTooLong,
    ParseError,
};

std::string_view errc_name(Errc code);

/// Domain error raised by library operations. `name()` is the stable
/// identifier surfaced by the CLI.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }
    std::string_view name() const { return errc_name(code_); }

private:
    Errc code_;
};

}  // namespace mikado
