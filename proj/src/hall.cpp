#include "altpow/hall.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace altpow {

namespace {

// Applies sigma^-1 * p * sigma = q pointwise without building the product:
// p * sigma = sigma * q  <=>  sigma[p[x]] == q[sigma[x]] for all x.
bool conjugates_onto(const Perm& p, const Perm& q, const std::vector<uint8_t>& sigma) {
  const unsigned n = p.degree();
  for (unsigned x = 0; x < n; ++x)
    if (sigma[p[x]] != q[sigma[x]]) return false;
  return true;
}

}  // namespace

uint64_t closure_order(const std::vector<Perm>& gens, unsigned degree) {
  if (degree > 10)
    throw std::invalid_argument("closure_order: degree exceeds enumeration budget");
  if (gens.empty()) return 1;
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("closure_order: generator degree mismatch");

  const uint64_t space = factorial(degree);
  std::vector<bool> visited(space, false);
  std::vector<Perm> frontier;
  visited[lehmer_rank(Perm(degree))] = true;
  frontier.push_back(Perm(degree));
  uint64_t count = 1;

  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : gens) {
        Perm q = p * g;
        uint64_t r = lehmer_rank(q);
        if (!visited[r]) {
          visited[r] = true;
          ++count;
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return count;
}

std::optional<Perm> aut_equivalent(std::span<const Perm> p, std::span<const Perm> q,
                                   unsigned degree) {
  if (degree < 4)
    throw std::invalid_argument("aut_equivalent: degree must be >= 4");
  if (degree == 6)
    throw std::invalid_argument(
        "aut_equivalent: degree 6 rejected (outer automorphisms of A_6 are "
        "not realized by conjugation)");
  if (degree > 9)
    throw std::invalid_argument("aut_equivalent: degree exceeds search budget");
  if (p.size() != q.size())
    throw std::invalid_argument("aut_equivalent: tuple length mismatch");
  for (const Perm& x : p)
    if (x.degree() != degree) throw std::invalid_argument("degree mismatch");
  for (const Perm& x : q)
    if (x.degree() != degree) throw std::invalid_argument("degree mismatch");

  std::vector<uint8_t> sigma(degree);
  for (unsigned i = 0; i < degree; ++i) sigma[i] = static_cast<uint8_t>(i);
  do {
    bool ok = true;
    for (size_t t = 0; t < p.size() && ok; ++t)
      ok = conjugates_onto(p[t], q[t], sigma);
    if (ok) return Perm(degree, sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

std::optional<Perm> aut_equivalent(const std::pair<Perm, Perm>& p,
                                   const std::pair<Perm, Perm>& q, unsigned degree) {
  const Perm ps[2] = {p.first, p.second};
  const Perm qs[2] = {q.first, q.second};
  return aut_equivalent(std::span<const Perm>(ps, 2), std::span<const Perm>(qs, 2),
                        degree);
}

HallReport hall_check(const GenSet& genset) {
  const unsigned n = genset.degree;
  if (n != 5 && n != 7 && n != 8 && n != 9)
    throw std::invalid_argument(
        "hall_check: degree must be in {5, 7, 8, 9} (simple A_n with "
        "Aut(A_n) = S_n and tractable search)");

  HallReport report;
  const uint64_t target = half_factorial(n);

  // Condition (1): each coordinate column generates A_n.
  for (unsigned col = 0; col < genset.width; ++col) {
    std::vector<Perm> column;
    column.reserve(genset.generators.size());
    for (const PowerElement& g : genset.generators) column.push_back(g.part(col));
    report.per_coordinate.push_back(closure_order(column, n) == target);
  }

  // Condition (2): no automorphism maps one column onto another.
  for (unsigned i = 0; i < genset.width; ++i) {
    std::vector<Perm> col_i;
    for (const PowerElement& g : genset.generators) col_i.push_back(g.part(i));
    for (unsigned j = i + 1; j < genset.width; ++j) {
      std::vector<Perm> col_j;
      for (const PowerElement& g : genset.generators) col_j.push_back(g.part(j));
      if (auto witness = aut_equivalent(col_i, col_j, n))
        report.equivalences.push_back({i + 1, j + 1, *witness});
    }
  }

  report.verdict =
      report.equivalences.empty() &&
      std::all_of(report.per_coordinate.begin(), report.per_coordinate.end(),
                  [](bool b) { return b; });
  return report;
}

std::string HallReport::to_json() const {
  nlohmann::ordered_json j;
  j["perCoordinate"] = per_coordinate;
  nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
  for (const HallEquivalence& e : equivalences) {
    nlohmann::ordered_json item;
    item["i"] = e.i;
    item["j"] = e.j;
    item["witness"] = e.witness.format_cycles();
    eqs.push_back(std::move(item));
  }
  j["equivalences"] = std::move(eqs);
  j["verdict"] = verdict;
  return j.dump(2) + "\n";
}

uint64_t a5_pair_class_key(const Perm& s, const Perm& t) {
  if (s.degree() != 5 || t.degree() != 5)
    throw std::invalid_argument("a5_pair_class_key: degree must be 5");
  uint64_t best = UINT64_MAX;
  std::vector<uint8_t> sigma = {0, 1, 2, 3, 4};
  do {
    Perm sig(5, sigma);
    uint64_t key = lehmer_rank(conjugate(s, sig)) * 120 +
                   lehmer_rank(conjugate(t, sig));
    best = std::min(best, key);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

A5Census census_a5() {
  const std::vector<Perm> a5 = alternating_group(5);
  std::vector<uint64_t> class_keys;
  uint64_t pair_count = 0;
  for (const Perm& s : a5) {
    for (const Perm& t : a5) {
      if (closure_order({s, t}, 5) != 60) continue;
      ++pair_count;
      class_keys.push_back(a5_pair_class_key(s, t));
    }
  }
  std::sort(class_keys.begin(), class_keys.end());
  class_keys.erase(std::unique(class_keys.begin(), class_keys.end()),
                   class_keys.end());
  return A5Census{pair_count, class_keys.size()};
}

}  // namespace altpow
