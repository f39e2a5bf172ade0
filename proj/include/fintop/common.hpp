#pragma once

#include <stdexcept>
#include <string>

namespace fintop {

/// Three-valued verdict used by every predicate whose exact answer may be
/// undecidable (word problem, simplification budgets, ...). Unknown always
/// means "could not certify", never "no".
enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

/// Base class for all domain errors. `name()` is the stable machine-readable
/// identifier used in CLI reports and exit-code contracts.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define FINTOP_DEFINE_ERROR(Name)                                        \
    class Name : public DomainError {                                    \
    public:                                                              \
        explicit Name(const std::string& what)                           \
            : DomainError(#Name, what) {}                                \
    };

FINTOP_DEFINE_ERROR(CycleError)
FINTOP_DEFINE_ERROR(UnknownLabel)
FINTOP_DEFINE_ERROR(UnknownGenerator)
FINTOP_DEFINE_ERROR(NotConnected)
FINTOP_DEFINE_ERROR(GroupTooLarge)
FINTOP_DEFINE_ERROR(PossiblyNotSimplyConnected)
FINTOP_DEFINE_ERROR(HypothesisViolation)
FINTOP_DEFINE_ERROR(NotAdmissible)
FINTOP_DEFINE_ERROR(InfiniteGroup)
FINTOP_DEFINE_ERROR(NotFiniteOrUnknownPi1)
FINTOP_DEFINE_ERROR(NotGraded)
FINTOP_DEFINE_ERROR(NotSpherical)
FINTOP_DEFINE_ERROR(NotHeight2)
FINTOP_DEFINE_ERROR(EpsilonNotUnit)
FINTOP_DEFINE_ERROR(TrivialityNotCertified)
FINTOP_DEFINE_ERROR(DimensionTooSmall)
FINTOP_DEFINE_ERROR(FormatError)
FINTOP_DEFINE_ERROR(InvalidArgument)

#undef FINTOP_DEFINE_ERROR

}  // namespace fintop
