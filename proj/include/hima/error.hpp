#pragma once

#include <stdexcept>
#include <string>

namespace hima {

/// Base class for all library errors. Game-level feedback (infeasible
/// actions, parse problems) is returned as values, not thrown.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace hima
