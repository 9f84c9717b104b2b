#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace altpow {

// Degree cap keeps every per-coordinate Lehmer rank inside 32 bits
// (12! = 479001600 < 2^32).
inline constexpr unsigned kMaxDegree = 12;

enum class Parity : uint8_t { even = 0, odd = 1 };

constexpr Parity operator^(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}

uint64_t factorial(unsigned n);

// n!/2 rounded up to 1, the code-space size of the even permutations.
uint64_t half_factorial(unsigned n);

/// A permutation of {1..n} stored as an image array.
///
/// Points are 0-based internally; the 1-based convention of cycle notation
/// lives entirely in parse_cycles/format_cycles. Composition is
/// left-to-right: (p*q)(x) = q(p(x)).
class Perm {
public:
  // Identity of degree 1.
  Perm() { img_[0] = 0; }

  // Identity of the given degree.
  explicit Perm(unsigned degree);

  // From a 0-based image array; validates that it is a bijection.
  Perm(unsigned degree, const std::vector<uint8_t>& images);

  static Perm identity(unsigned degree) { return Perm(degree); }

  // Parses a product of disjoint cycles over {1..degree}, e.g. "(1 2)(3 4)".
  // "" and "()" denote the identity. Throws std::invalid_argument on
  // repeated points, points out of range, or malformed syntax.
  static Perm parse_cycles(std::string_view text, unsigned degree);

  // Product of disjoint cycles, points 1-based, single spaces, cycles ordered
  // by smallest moved point. Identity formats as "()".
  std::string format_cycles() const;

  unsigned degree() const { return deg_; }
  uint8_t operator[](unsigned point) const { return img_[point]; }

  bool is_identity() const;
  Parity parity() const;
  bool is_even() const { return parity() == Parity::even; }

  // Least m >= 1 with p^m = identity (lcm of cycle lengths).
  unsigned order() const;

  Perm inverse() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.deg_ == b.deg_ && a.img_ == b.img_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }

  // Lexicographic tie-breaker, used for canonical class representatives.
  friend bool operator<(const Perm& a, const Perm& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    return a.img_ < b.img_;
  }

private:
  uint8_t deg_ = 1;
  std::array<uint8_t, kMaxDegree> img_{};  // unused tail stays zero so == works
};

// Left-to-right product: (p*q)(x) = q(p(x)). Throws on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

// sigma^-1 * p * sigma, the conjugation action realizing Aut(An) for n != 6.
Perm conjugate(const Perm& p, const Perm& sigma);

// Lexicographic rank of the image array among all degree! permutations.
uint64_t lehmer_rank(const Perm& p);

// Inverse of lehmer_rank. Throws if r >= degree!.
Perm lehmer_unrank(uint64_t r, unsigned degree);

// Dense rank of an even permutation into [0, degree!/2). Swapping the last
// two images toggles both parity and the lowest Lehmer digit, so even
// permutations sit at exactly one of each consecutive rank pair {2m, 2m+1}.
uint64_t alt_rank(const Perm& p);

// Inverse of alt_rank. Throws if r >= degree!/2.
Perm alt_unrank(uint64_t r, unsigned degree);

// All degree!/2 even permutations, ordered by alt_rank. degree <= 10.
std::vector<Perm> alternating_group(unsigned degree);

}  // namespace altpow
