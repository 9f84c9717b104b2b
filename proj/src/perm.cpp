#include "altpow/perm.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace altpow {

namespace {

void check_degree(unsigned degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("degree must be in [1, " +
                                std::to_string(kMaxDegree) + "], got " +
                                std::to_string(degree));
}

}  // namespace

uint64_t factorial(unsigned n) {
  uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

uint64_t half_factorial(unsigned n) {
  return n < 2 ? 1 : factorial(n) / 2;
}

Perm::Perm(unsigned degree) {
  check_degree(degree);
  deg_ = static_cast<uint8_t>(degree);
  for (unsigned i = 0; i < degree; ++i) img_[i] = static_cast<uint8_t>(i);
}

Perm::Perm(unsigned degree, const std::vector<uint8_t>& images) {
  check_degree(degree);
  if (images.size() != degree)
    throw std::invalid_argument("image array size does not match degree");
  std::array<bool, kMaxDegree> seen{};
  for (uint8_t v : images) {
    if (v >= degree) throw std::invalid_argument("image out of range");
    if (seen[v]) throw std::invalid_argument("image array is not a bijection");
    seen[v] = true;
  }
  deg_ = static_cast<uint8_t>(degree);
  for (unsigned i = 0; i < degree; ++i) img_[i] = images[i];
}

Perm Perm::parse_cycles(std::string_view text, unsigned degree) {
  check_degree(degree);
  Perm result(degree);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  std::array<bool, kMaxDegree> used{};
  bool any_cycle = false;

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<unsigned> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point in cycle notation: " + std::string(text));
      unsigned v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > kMaxDegree) throw std::invalid_argument("point exceeds degree cap");
        ++pos;
      }
      if (v < 1 || v > degree)
        throw std::invalid_argument("point " + std::to_string(v) + " out of range for degree " +
                                    std::to_string(degree));
      if (used[v - 1])
        throw std::invalid_argument("repeated point " + std::to_string(v) + " in cycle product");
      used[v - 1] = true;
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (pos >= text.size())
      throw std::invalid_argument("unterminated cycle: " + std::string(text));
    ++pos;  // ')'
    any_cycle = true;
    for (size_t i = 0; i + 1 < cycle.size(); ++i)
      result.img_[cycle[i]] = static_cast<uint8_t>(cycle[i + 1]);
    if (cycle.size() >= 2)
      result.img_[cycle.back()] = static_cast<uint8_t>(cycle.front());
    skip_ws();
  }
  (void)any_cycle;
  return result;
}

std::string Perm::format_cycles() const {
  std::string out;
  std::array<bool, kMaxDegree> visited{};
  for (unsigned start = 0; start < deg_; ++start) {
    if (visited[start] || img_[start] == start) continue;
    out += '(';
    unsigned p = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      visited[p] = true;
      p = img_[p];
      first = false;
    } while (p != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < deg_; ++i)
    if (img_[i] != i) return false;
  return true;
}

Parity Perm::parity() const {
  std::array<bool, kMaxDegree> visited{};
  unsigned cycles = 0;
  for (unsigned start = 0; start < deg_; ++start) {
    if (visited[start]) continue;
    ++cycles;
    unsigned p = start;
    while (!visited[p]) {
      visited[p] = true;
      p = img_[p];
    }
  }
  return ((deg_ - cycles) % 2 == 0) ? Parity::even : Parity::odd;
}

unsigned Perm::order() const {
  std::array<bool, kMaxDegree> visited{};
  unsigned result = 1;
  for (unsigned start = 0; start < deg_; ++start) {
    if (visited[start]) continue;
    unsigned len = 0;
    unsigned p = start;
    while (!visited[p]) {
      visited[p] = true;
      p = img_[p];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm Perm::inverse() const {
  Perm r(deg_);
  for (unsigned i = 0; i < deg_; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
  return r;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<uint8_t> img(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
  return Perm(p.degree(), img);
}

Perm conjugate(const Perm& p, const Perm& sigma) {
  return compose(compose(sigma.inverse(), p), sigma);
}

uint64_t lehmer_rank(const Perm& p) {
  const unsigned n = p.degree();
  uint64_t r = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

Perm lehmer_unrank(uint64_t r, unsigned degree) {
  check_degree(degree);
  if (r >= factorial(degree))
    throw std::invalid_argument("lehmer_unrank: rank out of range");
  std::vector<uint8_t> pool(degree);
  for (unsigned i = 0; i < degree; ++i) pool[i] = static_cast<uint8_t>(i);
  std::vector<uint8_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) {
    uint64_t f = factorial(degree - 1 - i);
    unsigned idx = static_cast<unsigned>(r / f);
    r %= f;
    img[i] = pool[idx];
    pool.erase(pool.begin() + idx);
  }
  return Perm(degree, img);
}

uint64_t alt_rank(const Perm& p) {
  if (!p.is_even())
    throw std::invalid_argument("alt_rank: permutation is odd");
  return lehmer_rank(p) / 2;
}

Perm alt_unrank(uint64_t r, unsigned degree) {
  check_degree(degree);
  if (r >= half_factorial(degree))
    throw std::invalid_argument("alt_unrank: rank out of range");
  if (degree < 2) return Perm(degree);
  Perm p = lehmer_unrank(2 * r, degree);
  if (p.is_even()) return p;
  return lehmer_unrank(2 * r + 1, degree);
}

std::vector<Perm> alternating_group(unsigned degree) {
  check_degree(degree);
  if (degree > 10)
    throw std::invalid_argument("alternating_group: degree exceeds enumeration budget");
  uint64_t size = half_factorial(degree);
  std::vector<Perm> elems;
  elems.reserve(size);
  for (uint64_t r = 0; r < size; ++r) elems.push_back(alt_unrank(r, degree));
  return elems;
}

}  // namespace altpow
