#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "altpow/genset.hpp"

namespace altpow {

/// Verdict of the two-condition generation test for (A_n)^k:
/// every coordinate column generates A_n, and no two columns are
/// automorphism-equivalent. verdict holds iff both conditions do.
struct HallEquivalence {
  unsigned i = 0;  // 1-based column indices
  unsigned j = 0;
  Perm witness;    // conjugator mapping column i onto column j
};

struct HallReport {
  std::vector<bool> per_coordinate;
  std::vector<HallEquivalence> equivalences;
  bool verdict = false;

  std::string to_json() const;
};

// Order of the subgroup generated inside S_degree, by BFS closure under
// right multiplication. degree <= 10 (enumeration budget).
uint64_t closure_order(const std::vector<Perm>& gens, unsigned degree);

// Searches S_degree for sigma with sigma^-1 * p_t * sigma = q_t for all t.
// Valid for 4 <= degree <= 9, degree != 6 (A_6 has outer automorphisms that
// conjugation misses, so a "no" answer there would be unsound).
std::optional<Perm> aut_equivalent(std::span<const Perm> p, std::span<const Perm> q,
                                   unsigned degree);
std::optional<Perm> aut_equivalent(const std::pair<Perm, Perm>& p,
                                   const std::pair<Perm, Perm>& q, unsigned degree);

// Generation certificate for (A_n)^k without enumerating it. Requires a
// simple alternating degree in {5, 7, 8, 9}.
HallReport hall_check(const GenSet& genset);

struct A5Census {
  uint64_t pair_count = 0;   // ordered pairs (s,t) with <s,t> = A_5
  uint64_t class_count = 0;  // pair_count / |Aut(A_5)| orbits
};

// Brute-force census of generating pairs of A_5 over all 3600 ordered pairs.
A5Census census_a5();

// Orbit key of a generating pair under simultaneous conjugation by S_5:
// the minimum over sigma of lehmer_rank pairs. Two pairs are
// automorphism-equivalent iff their keys agree.
uint64_t a5_pair_class_key(const Perm& s, const Perm& t);

}  // namespace altpow
