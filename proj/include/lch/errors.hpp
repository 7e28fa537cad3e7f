#pragma once

#include <stdexcept>
#include <string>

namespace lch {

// Every library failure carries a short machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define LCH_ERROR(Name)                                                   \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}      \
    }

LCH_ERROR(SyntaxError);
LCH_ERROR(ShapeError);
LCH_ERROR(MarkError);
LCH_ERROR(InconsistentPotential);
LCH_ERROR(NotPrime);
LCH_ERROR(DegreeZero);
LCH_ERROR(DivByZero);
LCH_ERROR(ParityError);
LCH_ERROR(NegativeExponentError);
LCH_ERROR(GradingError);
LCH_ERROR(ScaleError);
LCH_ERROR(MethodUnavailable);
LCH_ERROR(NotAForm);
LCH_ERROR(NotSRForm);
LCH_ERROR(NotAugmentation);
LCH_ERROR(NotASolution);
LCH_ERROR(LoopEdge);
LCH_ERROR(UsageError);

#undef LCH_ERROR

// A coefficient condition failed while propagating complexes.
class ObstructionAt : public Error {
public:
    ObstructionAt(int gap, int event, const std::string& msg)
        : Error("ObstructionAt", msg), gap_(gap), event_(event) {}
    int gap() const noexcept { return gap_; }
    int event() const noexcept { return event_; }

private:
    int gap_;
    int event_;
};

}  // namespace lch
