#include "altpow/power.hpp"

#include <numeric>
#include <stdexcept>

namespace altpow {

PowerElement::PowerElement(unsigned degree, unsigned width) {
  if (width < 1) throw std::invalid_argument("width must be >= 1");
  parts_.assign(width, Perm(degree));
}

PowerElement::PowerElement(std::vector<Perm> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("width must be >= 1");
  for (const Perm& p : parts_)
    if (p.degree() != parts_[0].degree())
      throw std::invalid_argument("tuple parts must share one degree");
}

PowerElement PowerElement::slot_embed(const Perm& g, unsigned slot, unsigned width) {
  if (slot < 1 || slot > width)
    throw std::invalid_argument("slot_embed: slot out of range");
  PowerElement x(g.degree(), width);
  x.parts_[slot - 1] = g;
  return x;
}

bool PowerElement::is_identity() const {
  for (const Perm& p : parts_)
    if (!p.is_identity()) return false;
  return true;
}

bool PowerElement::all_even() const {
  for (const Perm& p : parts_)
    if (!p.is_even()) return false;
  return true;
}

uint64_t PowerElement::order() const {
  uint64_t result = 1;
  for (const Perm& p : parts_) result = std::lcm(result, uint64_t{p.order()});
  return result;
}

PowerElement PowerElement::power(uint64_t m) const {
  PowerElement acc(degree(), width());
  PowerElement base = *this;
  while (m > 0) {
    if (m & 1) acc = compose(acc, base);
    m >>= 1;
    if (m) base = compose(base, base);
  }
  return acc;
}

PowerElement compose(const PowerElement& x, const PowerElement& y) {
  if (x.degree() != y.degree() || x.width() != y.width())
    throw std::invalid_argument("compose: tuple shape mismatch");
  std::vector<Perm> parts;
  parts.reserve(x.width());
  for (unsigned i = 0; i < x.width(); ++i)
    parts.push_back(compose(x.part(i), y.part(i)));
  return PowerElement(std::move(parts));
}

PowerElement inverse(const PowerElement& x) {
  std::vector<Perm> parts;
  parts.reserve(x.width());
  for (unsigned i = 0; i < x.width(); ++i) parts.push_back(x.part(i).inverse());
  return PowerElement(std::move(parts));
}

TupleCodec::TupleCodec(unsigned degree, unsigned width, Coding coding)
    : degree_(degree), width_(width), coding_(coding) {
  if (width < 1) throw std::invalid_argument("width must be >= 1");
  radix_ = coding == Coding::alternating ? half_factorial(degree) : factorial(degree);
  space_ = 1;
  constexpr uint64_t limit = uint64_t{1} << 63;
  for (unsigned i = 0; i < width; ++i) {
    if (space_ > (limit - 1) / radix_)
      throw std::overflow_error("code space exceeds 2^63 for degree " +
                                std::to_string(degree) + ", width " +
                                std::to_string(width));
    space_ *= radix_;
  }
}

uint64_t TupleCodec::part_rank(const Perm& p) const {
  return coding_ == Coding::alternating ? alt_rank(p) : lehmer_rank(p);
}

Perm TupleCodec::part_unrank(uint64_t r) const {
  return coding_ == Coding::alternating ? alt_unrank(r, degree_)
                                        : lehmer_unrank(r, degree_);
}

RankIndex TupleCodec::encode(const PowerElement& x) const {
  if (x.degree() != degree_ || x.width() != width_)
    throw std::invalid_argument("encode: tuple shape mismatch");
  uint64_t value = 0;
  for (unsigned i = width_; i-- > 0;) value = value * radix_ + part_rank(x.part(i));
  return RankIndex{value, coding_};
}

PowerElement TupleCodec::decode(uint64_t value) const {
  if (value >= space_) throw std::invalid_argument("decode: value out of range");
  std::vector<Perm> parts;
  parts.reserve(width_);
  for (unsigned i = 0; i < width_; ++i) {
    parts.push_back(part_unrank(value % radix_));
    value /= radix_;
  }
  return PowerElement(std::move(parts));
}

PowerElement TupleCodec::decode(const RankIndex& r) const {
  if (r.coding != coding_) throw std::invalid_argument("decode: coding mismatch");
  return decode(r.value);
}

RankIndex encode(const PowerElement& x, Coding coding) {
  return TupleCodec(x.degree(), x.width(), coding).encode(x);
}

PowerElement decode(const RankIndex& r, unsigned degree, unsigned width) {
  return TupleCodec(degree, width, r.coding).decode(r.value);
}

}  // namespace altpow
