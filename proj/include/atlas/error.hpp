#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

enum class Errc {
    DivisionByZero,
    SpecInvalid,
    ClosureExceeded,
    NotInGamma,
    DegreeUnstable,
    NotDominant,
    DivisionFailed,
    ParseError,
    Domain,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace atlas
