#pragma once

// Deterministic stand-in for the random real: bit(i) is a pure function of
// (seed, i) via splitmix64, identical across runs and platforms.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace famex {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class BitStream {
 public:
  // bit(i) = LSB of splitmix64(seed + i*golden), i.e. position i of the
  // standard splitmix64 stream started at `seed`.
  static BitStream generator(std::uint64_t seed) {
    BitStream b;
    b.kind_ = Kind::kGenerator;
    b.seed_ = seed;
    return b;
  }

  static BitStream constant(int bit) {
    BitStream b;
    b.kind_ = Kind::kConstant;
    b.const_bit_ = bit ? 1 : 0;
    return b;
  }

  // Finite explicit bits; reading past the end is an error.
  static BitStream explicit_bits(std::vector<std::uint8_t> bits) {
    BitStream b;
    b.kind_ = Kind::kExplicit;
    b.bits_ = std::move(bits);
    return b;
  }

  int bit(std::uint64_t i) const {
    switch (kind_) {
      case Kind::kGenerator:
        return static_cast<int>(splitmix64(seed_ + i * 0x9E3779B97F4A7C15ull) & 1u);
      case Kind::kConstant:
        return const_bit_;
      case Kind::kExplicit:
        if (i >= bits_.size()) throw std::out_of_range("BitStream: index past explicit bits");
        return bits_[i] ? 1 : 0;
    }
    return 0;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  enum class Kind { kGenerator, kConstant, kExplicit };

  BitStream() = default;

  Kind kind_ = Kind::kGenerator;
  std::uint64_t seed_ = 0;
  int const_bit_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace famex
