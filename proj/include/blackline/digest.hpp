#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace blackline {

// FNV-1a 64-bit content digest. Used for image/log/report identity checks,
// not for security.
class Fnv1a64 {
 public:
  void update(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
  }

  void update(std::string_view s) { update(s.data(), s.size()); }

  std::uint64_t value() const { return h_; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = h_;
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = digits[v & 0xf];
      v >>= 4;
    }
    return out;
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

inline std::string digest_hex(const void* data, std::size_t n) {
  Fnv1a64 d;
  d.update(data, n);
  return d.hex();
}

inline std::string digest_hex(std::string_view s) { return digest_hex(s.data(), s.size()); }

}  // namespace blackline
