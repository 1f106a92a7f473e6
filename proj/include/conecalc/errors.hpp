#pragma once

#include <stdexcept>
#include <string>

namespace conecalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CONECALC_DEFINE_ERROR(NAME)                                       \
  struct NAME : Error {                                                   \
    explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {}    \
  }

CONECALC_DEFINE_ERROR(NonPositiveScale);
CONECALC_DEFINE_ERROR(DegenerateScale);
CONECALC_DEFINE_ERROR(OffCone);
CONECALC_DEFINE_ERROR(NullMomentumInversion);
CONECALC_DEFINE_ERROR(SingularDenominator);
CONECALC_DEFINE_ERROR(NotLorentz);
CONECALC_DEFINE_ERROR(DomainMismatch);
CONECALC_DEFINE_ERROR(NullSquare);
CONECALC_DEFINE_ERROR(EmptyGrid);
CONECALC_DEFINE_ERROR(NonPositiveKPlus);
CONECALC_DEFINE_ERROR(NegativeQ5Squared);
CONECALC_DEFINE_ERROR(LatticeMismatch);
CONECALC_DEFINE_ERROR(ZeroBeta);
CONECALC_DEFINE_ERROR(InconsistentParams);
CONECALC_DEFINE_ERROR(MassBoundViolated);
CONECALC_DEFINE_ERROR(NonPositiveMass);
CONECALC_DEFINE_ERROR(NegativeMass);
CONECALC_DEFINE_ERROR(ZeroAlpha);
CONECALC_DEFINE_ERROR(RealityViolation);
CONECALC_DEFINE_ERROR(MalformedInput);

#undef CONECALC_DEFINE_ERROR

}  // namespace conecalc
