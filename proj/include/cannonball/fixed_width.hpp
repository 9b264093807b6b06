#pragma once

// 128-bit integer kernels for hot loops (brute-force search, Pell base scan).
// Callers check that their values fit before taking these paths.

#include <cstdint>
#include <optional>

#include "cannonball/arith.hpp"

namespace cannonball::detail {

using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~u128{0};

/// Residue filters: a square is a quadratic residue mod 64, 63, 65 and 11.
inline bool passes_square_filters(std::uint64_t mod64, std::uint64_t mod63, std::uint64_t mod65,
                                  std::uint64_t mod11) {
  constexpr auto table = [](unsigned m) {
    std::uint64_t bits[2] = {0, 0};
    for (unsigned x = 0; x < m; ++x) {
      unsigned r = (x * x) % m;
      bits[r / 64] |= std::uint64_t{1} << (r % 64);
    }
    return std::pair{bits[0], bits[1]};
  };
  static const auto t64 = table(64);
  static const auto t63 = table(63);
  static const auto t65 = table(65);
  static const auto t11 = table(11);
  auto has = [](const std::pair<std::uint64_t, std::uint64_t>& t, std::uint64_t r) {
    return ((r < 64 ? t.first >> r : t.second >> (r - 64)) & 1U) != 0;
  };
  return has(t64, mod64) && has(t63, mod63) && has(t65, mod65) && has(t11, mod11);
}

inline unsigned bit_length(u128 n) {
  unsigned bits = 0;
  while (n != 0) {
    n >>= 1;
    ++bits;
  }
  return bits;
}

inline u128 isqrt_u128(u128 n) {
  if (n < 2) return n;
  u128 x = u128{1} << ((bit_length(n) + 1) / 2);
  while (true) {
    u128 y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

inline std::optional<u128> square_root_u128(u128 n) {
  auto low = static_cast<std::uint64_t>(n);
  if (!passes_square_filters(low & 63U, static_cast<std::uint64_t>(n % 63),
                             static_cast<std::uint64_t>(n % 65), static_cast<std::uint64_t>(n % 11)))
    return std::nullopt;
  u128 r = isqrt_u128(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline bool fits_u128(const Integer& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 127; }

inline u128 to_u128(const Integer& n) {
  Integer high = n >> 64;
  Integer low = n - (high << 64);
  return (u128{high.get_ui()} << 64) | u128{low.get_ui()};
}

inline Integer from_u128(u128 n) {
  Integer high = static_cast<unsigned long>(static_cast<std::uint64_t>(n >> 64));
  Integer low = static_cast<unsigned long>(static_cast<std::uint64_t>(n));
  return (high << 64) + low;
}

}  // namespace cannonball::detail
