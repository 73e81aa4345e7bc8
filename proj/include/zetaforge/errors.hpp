#pragma once

#include <stdexcept>
#include <string>

namespace zetaforge {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    NoFieldTooLarge,
    DivisionByZero,
    FieldMismatch,
    ZeroArgument,
    TrivialCharacter,
    BudgetExceeded,
    CharacteristicMismatch,
    NotHomogeneous,
    SingularCurve,
    BadCharacteristic,
    NonIntegralOrbit,
    InsufficientCounts,
    NoRationalFit,
    NonIntegralSolution,
    DegreeOutOfRange,
    MissingFactor,
    NotMonic,
    ZeroRoot,
    BadPrime,
    MissingPrime,
    OutOfRegion,
    SchemaError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace zetaforge
