#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace ocvar {

/// Stable 64-bit digest (FNV-1a followed by a splitmix64 finalizer). The
/// value depends only on the input bytes, never on platform or run.
class Digest {
 public:
  Digest& bytes(std::string_view data) noexcept {
    for (unsigned char c : data) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  /// Feeds v as 8 little-endian bytes.
  Digest& u64(std::uint64_t v) noexcept {
    for (int i = 0; i < 8; ++i) {
      state_ ^= static_cast<unsigned char>(v >> (8 * i));
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  std::uint64_t finish() const noexcept {
    std::uint64_t z = state_ + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::uint64_t digest_of(std::string_view data) noexcept { return Digest().bytes(data).finish(); }

/// 16 lowercase hex digits.
std::string to_hex(std::uint64_t value);

}  // namespace ocvar
