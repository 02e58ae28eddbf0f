#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unital {

/// Invalid input or violated precondition. Maps to CLI exit code 2.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive scan would exceed the configured cap. Maps to CLI exit code 3.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Default ceiling on combination scans and grid enumerations.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

} // namespace unital
