#pragma once

#include <cstdint>
#include <cstring>
#include <string>

namespace ecvs {

/// FNV-1a, used for cache keys and artifact headers (not cryptographic).
class Fnv1a {
  public:
    Fnv1a& update(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            state_ ^= p[i];
            state_ *= 0x100000001b3ULL;
        }
        return *this;
    }
    Fnv1a& update(const std::string& s) { return update(s.data(), s.size()); }
    Fnv1a& update(double v) { return update(&v, sizeof v); }
    Fnv1a& update(std::uint64_t v) { return update(&v, sizeof v); }
    Fnv1a& update(int v) { return update(&v, sizeof v); }

    std::uint64_t value() const { return state_; }
    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t v = state_;
        for (int i = 15; i >= 0; --i) {
            out[i] = digits[v & 0xf];
            v >>= 4;
        }
        return out;
    }

  private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace ecvs
