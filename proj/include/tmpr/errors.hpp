#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tmpr {

/// A precondition or hypothesis of an operation does not hold.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An index or size argument is outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The operation needs a capability the input does not have (for example an
/// ordered alphabet).
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A coloring context is missing a component or has the wrong shape.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A capped search ran out of budget before reaching a verdict.
class IndeterminateError : public std::runtime_error {
 public:
  IndeterminateError(std::string const& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

namespace detail {
inline void require(bool cond, char const* msg) {
  if (!cond) throw ContractError(msg);
}
inline void require(bool cond, std::string const& msg) {
  if (!cond) throw ContractError(msg);
}
}  // namespace detail

}  // namespace tmpr
