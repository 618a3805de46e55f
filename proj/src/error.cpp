#include "mikado/error.hpp"

namespace mikado {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::TripleNotSetLike: return "TripleNotSetLike";
        case Errc::TwoLinesThroughPair: return "TwoLinesThroughPair";
        case Errc::TooLarge: return "TooLarge";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::NotGood: return "NotGood";
        case Errc::FlagViolation: return "FlagViolation";
        case Errc::NotCompatible: return "NotCompatible";
        case Errc::SeedNotInClass: return "SeedNotInClass";
        case Errc::NotPrime: return "NotPrime";
        case Errc::Reducible: return "Reducible";
        case Errc::NotSteiner: return "NotSteiner";
        case Errc::NotSteiner3: return "NotSteiner3";
        case Errc::BadWitness: return "BadWitness";
        case Errc::UnevenBlocks: return "UnevenBlocks";
        case Errc::UnevenLines: return "UnevenLines";
        case Errc::LineTooLong: return "LineTooLong";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace mikado
