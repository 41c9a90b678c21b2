#pragma once

#include <stdexcept>
#include <string>

namespace graphlab {

/// Invalid vertex index, invalid vertex pair, negative degree and similar
/// violations of an operation's preconditions.
class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A request that would exceed a configured resource bound (e.g. qubit count).
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad user configuration (CLI flags, sweep settings, mismatched grids).
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace graphlab
