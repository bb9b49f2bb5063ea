#pragma once

#include <stdexcept>
#include <string>

namespace abelcd {

/// Invalid input: violated precondition, malformed spec string, bad modulus.
class domain_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds the built-in exhaustive-computation bounds.
class capacity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A cross-check between two independent computation routes failed.
class internal_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace abelcd
