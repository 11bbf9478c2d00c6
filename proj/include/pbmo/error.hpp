#pragma once

#include <stdexcept>
#include <string>

namespace pbmo {

// Raised for any input that violates a documented precondition: malformed
// bit-strings, invalid problem parameters, enumeration over the cap.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace pbmo
