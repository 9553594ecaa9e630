#pragma once

#include <stdexcept>
#include <string>

namespace necc {

// Base class for all domain errors raised by the library. CLI maps these to
// exit code 1; ParseError (malformed input files / bad grammar) maps to 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define NECC_DEFINE_ERROR(Name)                  \
    struct Name : Error {                        \
        using Error::Error;                      \
    }

NECC_DEFINE_ERROR(NotPrime);
NECC_DEFINE_ERROR(UnsupportedSize);
NECC_DEFINE_ERROR(NoPrimitivePoly);
NECC_DEFINE_ERROR(FieldMismatch);
NECC_DEFINE_ERROR(DimensionMismatch);
NECC_DEFINE_ERROR(Singular);
NECC_DEFINE_ERROR(CyclicGraph);
NECC_DEFINE_ERROR(BadOrdering);
NECC_DEFINE_ERROR(RankDeficientSink);
NECC_DEFINE_ERROR(TooManyStates);
NECC_DEFINE_ERROR(ZeroGenerator);
NECC_DEFINE_ERROR(BadRate);
NECC_DEFINE_ERROR(BlockSizeMismatch);
NECC_DEFINE_ERROR(Catastrophic);
NECC_DEFINE_ERROR(DepthCapExceeded);
NECC_DEFINE_ERROR(EnumerationTooLarge);
NECC_DEFINE_ERROR(NoCodeFound);
NECC_DEFINE_ERROR(UnsupportedRank);
NECC_DEFINE_ERROR(InsufficientFreeDistance);
NECC_DEFINE_ERROR(EmptySet);

#undef NECC_DEFINE_ERROR

}  // namespace necc
