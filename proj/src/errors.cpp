#include "zetaforge/errors.hpp"

namespace zetaforge {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NoFieldTooLarge: return "NoFieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroArgument: return "ZeroArgument";
        case Errc::TrivialCharacter: return "TrivialCharacter";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::CharacteristicMismatch: return "CharacteristicMismatch";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::SingularCurve: return "SingularCurve";
        case Errc::BadCharacteristic: return "BadCharacteristic";
        case Errc::NonIntegralOrbit: return "NonIntegralOrbit";
        case Errc::InsufficientCounts: return "InsufficientCounts";
        case Errc::NoRationalFit: return "NoRationalFit";
        case Errc::NonIntegralSolution: return "NonIntegralSolution";
        case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
        case Errc::MissingFactor: return "MissingFactor";
        case Errc::NotMonic: return "NotMonic";
        case Errc::ZeroRoot: return "ZeroRoot";
        case Errc::BadPrime: return "BadPrime";
        case Errc::MissingPrime: return "MissingPrime";
        case Errc::OutOfRegion: return "OutOfRegion";
        case Errc::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

}  // namespace zetaforge
