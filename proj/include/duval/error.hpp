#pragma once

#include <stdexcept>
#include <string>

namespace duval {

/// Base of every domain error. `name()` is the stable identifier printed by
/// the CLI on the diagnostic stream (e.g. "OutOfRange").
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define DUVAL_DEFINE_ERROR(Type)                                               \
    class Type : public Error {                                                \
    public:                                                                    \
        explicit Type(const std::string& what) : Error(#Type, what) {}         \
    };

// dynkin
DUVAL_DEFINE_ERROR(MalformedLabel)
DUVAL_DEFINE_ERROR(OutOfRange)
DUVAL_DEFINE_ERROR(NotSymmetric)

// cycles
DUVAL_DEFINE_ERROR(NonTermination)
DUVAL_DEFINE_ERROR(VariantMismatch)
DUVAL_DEFINE_ERROR(TooManyPoints)
DUVAL_DEFINE_ERROR(Unrecognized)

// lct
DUVAL_DEFINE_ERROR(ParseError)
DUVAL_DEFINE_ERROR(NotAtOrigin)
DUVAL_DEFINE_ERROR(ZeroGerm)
DUVAL_DEFINE_ERROR(NonSquarefree)
DUVAL_DEFINE_ERROR(DepthExceeded)
DUVAL_DEFINE_ERROR(IrrationalCluster)
DUVAL_DEFINE_ERROR(NotQuasihomogeneous)

// surfaces / rigidity
DUVAL_DEFINE_ERROR(InvalidSurface)
DUVAL_DEFINE_ERROR(AssumptionNotAsserted)
DUVAL_DEFINE_ERROR(UnsupportedClass)
DUVAL_DEFINE_ERROR(SchemaError)

#undef DUVAL_DEFINE_ERROR

}  // namespace duval
