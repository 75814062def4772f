#pragma once

#include <stdexcept>
#include <string>

namespace tubelat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TUBELAT_ERROR(Name)                                                    \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

TUBELAT_ERROR(InvalidVertex);
TUBELAT_ERROR(InvalidPermutation);
TUBELAT_ERROR(InvalidArc);
TUBELAT_ERROR(NotATube);
TUBELAT_ERROR(InvalidTubing);
TUBELAT_ERROR(InvalidForest);
TUBELAT_ERROR(TubeNotInTubing);
TUBELAT_ERROR(MaximalTubeNotFlippable);
TUBELAT_ERROR(NotAnIdeal);
TUBELAT_ERROR(ElementNotFound);
TUBELAT_ERROR(NotComparable);
TUBELAT_ERROR(NotALattice);
TUBELAT_ERROR(SizeMismatch);
TUBELAT_ERROR(NotRightFilled);
TUBELAT_ERROR(NotFilled);
TUBELAT_ERROR(NotACover);
TUBELAT_ERROR(NotAdmissibleAtDegree);
TUBELAT_ERROR(NotRestrictionCompatible);
TUBELAT_ERROR(NotASubgraph);
TUBELAT_ERROR(ParseError);

#undef TUBELAT_ERROR

} // namespace tubelat
