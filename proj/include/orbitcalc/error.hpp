#pragma once

#include <stdexcept>
#include <string>

namespace orbitcalc {

// Raised for inputs outside an operation's domain (wrong type, wrong size, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbitcalc
