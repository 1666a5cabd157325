#pragma once

#include <stdexcept>
#include <string>

namespace g2kit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define G2KIT_ERROR(Name)                                                      \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

G2KIT_ERROR(DenominatorVanishes);
G2KIT_ERROR(ModulusMismatch);
G2KIT_ERROR(NotPrime);
G2KIT_ERROR(DivisionByZero);
G2KIT_ERROR(VarMismatch);
G2KIT_ERROR(NonHomogeneousInput);
G2KIT_ERROR(ParseError);
G2KIT_ERROR(ShapeMismatch);
G2KIT_ERROR(NotSkewSymmetric);
G2KIT_ERROR(OddSize);
G2KIT_ERROR(NotSymmetric);
G2KIT_ERROR(DegreeMismatch);
G2KIT_ERROR(RankDeficient);
G2KIT_ERROR(BracketEscapesAlgebra);
G2KIT_ERROR(NotNilpotent);
G2KIT_ERROR(SamplingDegenerate);
G2KIT_ERROR(SamplingExhausted);
G2KIT_ERROR(BudgetExceeded);
G2KIT_ERROR(DegreeOverflow);
G2KIT_ERROR(ScrollCase);
G2KIT_ERROR(TooFewRationalPoints);
G2KIT_ERROR(NoConsistentIdentification);
G2KIT_ERROR(InvalidParameter);
G2KIT_ERROR(InsufficientSamples);
G2KIT_ERROR(SeedNotIsotropic);
G2KIT_ERROR(DimensionMismatch);
G2KIT_ERROR(UnknownCheck);
G2KIT_ERROR(CacheError);

#undef G2KIT_ERROR

}  // namespace g2kit
