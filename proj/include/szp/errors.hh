#pragma once

#include <stdexcept>
#include <string>

namespace szp
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

#define SZP_ERROR(name)                                                                            \
    class name : public Error                                                                      \
    {                                                                                              \
    public:                                                                                        \
        explicit name(const std::string & what) : Error(#name ": " + what) {}                    \
    }

    SZP_ERROR(ParseError);
    SZP_ERROR(MissingEdge);
    SZP_ERROR(PreconditionFailed);
    SZP_ERROR(OutOfRange);
    SZP_ERROR(LoopWeightUndefined);
    SZP_ERROR(InfeasibleContext);
    SZP_ERROR(MonotonicityFailure);
    SZP_ERROR(NotEmptyIntersection);
    SZP_ERROR(DegenerateFamily);
    SZP_ERROR(NonUniformFamily);
    SZP_ERROR(BoundViolation);
    SZP_ERROR(Infeasible);
    SZP_ERROR(VerificationFailure);
    SZP_ERROR(SearchTooLarge);
    SZP_ERROR(CliqueCapExceeded);

#undef SZP_ERROR

    class NoPrivatePair : public Error
    {
    public:
        NoPrivatePair(int member, const std::string & what) :
            Error("NoPrivatePair: member " + std::to_string(member) + ": " + what),
            _member(member)
        {
        }

        auto member() const -> int { return _member; }

    private:
        int _member;
    };
}
