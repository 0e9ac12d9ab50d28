#ifndef HULLFORGE_ERROR_HPP
#define HULLFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hullforge {

/// Base of all toolkit errors. `name()` is the stable machine-readable
/// identifier echoed by the CLI; `what()` carries the human explanation.
class Error : public std::runtime_error {
   public:
    Error(std::string name, const std::string& what) : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

   private:
    std::string name_;
};

#define HULLFORGE_DEFINE_ERROR(NAME)                                               \
    class NAME : public Error {                                                    \
       public:                                                                     \
        explicit NAME(const std::string& what = #NAME) : Error(#NAME, what) {}     \
    }

HULLFORGE_DEFINE_ERROR(DivisionByZero);
HULLFORGE_DEFINE_ERROR(FieldMismatch);
HULLFORGE_DEFINE_ERROR(NoHermitianStructure);
HULLFORGE_DEFINE_ERROR(ShapeMismatch);
HULLFORGE_DEFINE_ERROR(EmptyLength);
HULLFORGE_DEFINE_ERROR(TooLargeToEnumerate);
HULLFORGE_DEFINE_ERROR(OddLength);
HULLFORGE_DEFINE_ERROR(NotFullWeight);
HULLFORGE_DEFINE_ERROR(NotCoprime);
HULLFORGE_DEFINE_ERROR(NonDivisor);
HULLFORGE_DEFINE_ERROR(OddCharacteristicRequired);
HULLFORGE_DEFINE_ERROR(EvenCharacteristicRequired);
HULLFORGE_DEFINE_ERROR(NotRootOfUnity);
HULLFORGE_DEFINE_ERROR(PreconditionFailed);
HULLFORGE_DEFINE_ERROR(NoValidLambda);
HULLFORGE_DEFINE_ERROR(TheoremCaseViolation);
HULLFORGE_DEFINE_ERROR(DuplicatePoints);
HULLFORGE_DEFINE_ERROR(NonzeroPointsRequired);
HULLFORGE_DEFINE_ERROR(NotASubgroup);
HULLFORGE_DEFINE_ERROR(NotASubcode);
HULLFORGE_DEFINE_ERROR(SearchSpaceTooLarge);
HULLFORGE_DEFINE_ERROR(IndexOutOfRange);
HULLFORGE_DEFINE_ERROR(ParseError);
HULLFORGE_DEFINE_ERROR(InvalidField);

#undef HULLFORGE_DEFINE_ERROR

}  // namespace hullforge

#endif
