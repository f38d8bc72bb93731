#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dks {

// Raised when no connected size-k subgraph can be grown from the instance.
class InstanceInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a brute-force enumeration would exceed the configured cap.
class EnumerationCapExceeded : public std::runtime_error {
public:
    EnumerationCapExceeded(std::uint64_t subsets, std::uint64_t cap, const std::string& what)
        : std::runtime_error(what), subsets_(subsets), cap_(cap) {}

    std::uint64_t subsets() const { return subsets_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t subsets_;
    std::uint64_t cap_;
};

// Raised by file readers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace dks
