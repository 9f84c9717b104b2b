#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altpow/perm.hpp"

namespace altpow {

/// An element of the direct power (S_n)^k: a k-tuple of degree-n
/// permutations with pointwise arithmetic.
class PowerElement {
public:
  // Identity tuple.
  PowerElement(unsigned degree, unsigned width);

  // From explicit parts; validates uniform degree and width >= 1.
  explicit PowerElement(std::vector<Perm> parts);

  // Identity in every coordinate except coordinate `slot` (1-based) = g.
  static PowerElement slot_embed(const Perm& g, unsigned slot, unsigned width);

  unsigned degree() const { return parts_[0].degree(); }
  unsigned width() const { return static_cast<unsigned>(parts_.size()); }
  const Perm& part(unsigned i) const { return parts_[i]; }  // 0-based
  const std::vector<Perm>& parts() const { return parts_; }

  bool is_identity() const;
  bool all_even() const;

  // lcm of coordinate orders.
  uint64_t order() const;

  // x^m by repeated composition; x^0 is the identity tuple.
  PowerElement power(uint64_t m) const;

  friend bool operator==(const PowerElement& a, const PowerElement& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const PowerElement& a, const PowerElement& b) {
    return !(a == b);
  }

private:
  std::vector<Perm> parts_;
};

// Coordinatewise left-to-right product. Throws on shape mismatch.
PowerElement compose(const PowerElement& x, const PowerElement& y);

inline PowerElement operator*(const PowerElement& x, const PowerElement& y) {
  return compose(x, y);
}

PowerElement inverse(const PowerElement& x);

// Which per-coordinate rank the dense code uses.
enum class Coding : uint8_t {
  alternating,  // radix n!/2, parts must be even
  symmetric,    // radix n!, debug mode
};

struct RankIndex {
  uint64_t value = 0;
  Coding coding = Coding::alternating;
};

/// Mixed-radix codec between PowerElements and dense integers:
/// value = sum_i rank_i * radix^i with coordinate 0 least significant.
/// Construction fails if radix^width would reach 2^63.
class TupleCodec {
public:
  TupleCodec(unsigned degree, unsigned width, Coding coding = Coding::alternating);

  unsigned degree() const { return degree_; }
  unsigned width() const { return width_; }
  Coding coding() const { return coding_; }
  uint64_t radix() const { return radix_; }
  uint64_t space() const { return space_; }  // radix^width

  RankIndex encode(const PowerElement& x) const;
  PowerElement decode(uint64_t value) const;
  PowerElement decode(const RankIndex& r) const;

  // Per-coordinate rank of one part (alt_rank or lehmer_rank by coding).
  uint64_t part_rank(const Perm& p) const;
  Perm part_unrank(uint64_t r) const;

private:
  unsigned degree_;
  unsigned width_;
  Coding coding_;
  uint64_t radix_;
  uint64_t space_;
};

RankIndex encode(const PowerElement& x, Coding coding = Coding::alternating);
PowerElement decode(const RankIndex& r, unsigned degree, unsigned width);

}  // namespace altpow
