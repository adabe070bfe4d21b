#pragma once

#include <stdexcept>
#include <string>

namespace clm {

// Every library error carries a stable code string that the CLI surfaces
// verbatim. Codes are part of the frozen report schema, messages are not.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define CLM_ERROR_TYPE(Name, Code)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& msg) : Error(Code, msg) {}  \
    }

CLM_ERROR_TYPE(ParseError, "ParseError");
CLM_ERROR_TYPE(CapExceeded, "CapExceeded");
CLM_ERROR_TYPE(NotAGroup, "NotAGroup");
CLM_ERROR_TYPE(NotASubgroup, "NotASubgroup");
CLM_ERROR_TYPE(NotNormal, "NotNormal");
CLM_ERROR_TYPE(UnsupportedComponent, "UnsupportedComponent");
CLM_ERROR_TYPE(NotHomogeneous, "NotHomogeneous");
CLM_ERROR_TYPE(TooLarge, "TooLarge");
CLM_ERROR_TYPE(BadPrime, "BadPrime");
CLM_ERROR_TYPE(NonIntegralPower, "NonIntegralPower");
CLM_ERROR_TYPE(SingularSystem, "SingularSystem");
CLM_ERROR_TYPE(InvariantViolated, "InvariantViolated");
CLM_ERROR_TYPE(NotFound, "NotFound");
CLM_ERROR_TYPE(NotUnique, "NotUnique");
CLM_ERROR_TYPE(FormatError, "FormatError");

#undef CLM_ERROR_TYPE

} // namespace clm
