#pragma once

#include <cstdint>
#include <string_view>

namespace factfeel {

// Platform-stable hashing for deterministic shuffles and subset selection.
// std::hash is deliberately avoided: its values are implementation-defined
// and would break the reproducibility contract across toolchains.

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Order key for a document id under a given seed (and optional round),
// a pure function of its arguments.
inline std::uint64_t order_key(std::uint64_t seed, std::string_view id,
                               std::uint64_t round = 0) {
  return splitmix64(seed ^ splitmix64(fnv1a64(id) + 0x51'7c'c1'b7'27'22'0a'95ull * round));
}

}  // namespace factfeel
