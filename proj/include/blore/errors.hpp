#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace blore {

/// Raised on malformed textual input (word syntax, rationals, ...).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an exact/exhaustive operation would exceed its configured bound.
/// For block-reversal enumeration the attempted partition-mask-space size is
/// attached so callers can report it.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what,
                                  std::optional<std::uint64_t> attempted_mask_space = {})
        : std::runtime_error(what), attempted_mask_space_(attempted_mask_space) {}

    std::optional<std::uint64_t> attempted_mask_space() const { return attempted_mask_space_; }

private:
    std::optional<std::uint64_t> attempted_mask_space_;
};

}  // namespace blore
