#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdseq {

/// Raised when a table would not fit in the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t required_bytes, std::size_t budget_bytes)
        : std::runtime_error(what), required_(required_bytes), budget_(budget_bytes) {}

    std::size_t required_bytes() const { return required_; }
    std::size_t budget_bytes() const { return budget_; }

private:
    std::size_t required_;
    std::size_t budget_;
};

/// Physical memory currently available to this process, in bytes
/// (MemAvailable from /proc/meminfo, falling back to sysconf).
std::size_t available_memory_bytes();

}  // namespace gdseq
