#pragma once
#include <cstdint>
#include <string>
#include <string_view>

namespace thkg {

// FNV-1a, 64-bit. Content fingerprinting only, not cryptographic.
std::uint64_t fnv1a64(std::string_view data);
std::string hash_hex(std::uint64_t h);

}  // namespace thkg
