#pragma once

#include <string>
#include <utility>
#include <vector>

#include "altpow/power.hpp"

namespace altpow {

/// A named, validated list of Cayley-graph generators in (A_n)^k.
///
/// Invariants enforced by make_genset and the JSON loader: at least one
/// generator, uniform (degree, width), every part even, no duplicates,
/// and the identity tuple is not a generator.
struct GenSet {
  std::string name;
  unsigned degree = 0;
  unsigned width = 0;
  std::vector<PowerElement> generators;
  std::string provenance;
};

GenSet make_genset(std::string name, std::vector<PowerElement> generators,
                   std::string provenance);

// Slot-embedded copies of A in slot-major order:
// (a at slot 1 for each a), (a at slot 2 for each a), ...
GenSet canonical_genset(const std::vector<Perm>& base, unsigned width,
                        const std::string& base_name = "base");

// The staircase of size n over base elements a_1..a_k of pairwise coprime
// orders: generator i carries a_1 at slot i and a_2..a_k cyclically after it.
GenSet coprime_genset(const std::vector<Perm>& base, unsigned n,
                      const std::string& base_name = "base");

// coprime_genset over alpha=(1 2)(3 4), beta=(1 2 3) in A_4; n >= 2.
GenSet a4_genset(unsigned n);

// The swap pair for (A_n)^2, n >= 5:
// n odd:  {(a,b),(b,a)}   with a=(1 2 ... n),   b=(1 2)(3 4)
// n even: {(a',b'),(b',a')} with a'=(1 2 ... n-1), b'=(n-3 n-2)(n-1 n)
GenSet an2_genset(unsigned n);

// The 19 pairwise non-equivalent generating pairs of A_5, in fixed order.
std::vector<std::pair<Perm, Perm>> a5_bases19();

// The two-generator ladder C_k for (A_5)^k, 1 <= k <= 8.
GenSet a5_power_genset(unsigned k);

// The 19 base pairs assembled as one width-19 two-generator set
// (generator 1 = first components, generator 2 = second components).
GenSet a5_bases19_columns();

// JSON schema:
// { "name": str, "degree": int, "width": int,
//   "generators": [[cycle-string, ...], ...], "provenance": str }
std::string genset_to_json(const GenSet& g);
GenSet genset_from_json(const std::string& text);
void save_genset(const GenSet& g, const std::string& path);
GenSet load_genset(const std::string& path);

}  // namespace altpow
