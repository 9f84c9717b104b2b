#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "altpow/genset.hpp"

namespace altpow {

// Directed counts positive words in the generators only; undirected adjoins
// the inverse of every generator.
enum class Convention : uint8_t { directed, undirected };

std::string to_string(Convention c);

struct BfsBudget {
  uint64_t max_memory_bytes = uint64_t{4} << 30;
  double max_seconds = 1800.0;
};

struct BfsOptions {
  BfsBudget budget{};
  Convention convention = Convention::directed;
  unsigned workers = 1;
  Coding coding = Coding::alternating;

  // Frontier representation: explicit rank arrays (double-buffered per
  // level) or full-width level bitmaps swept in rank order. `automatic`
  // switches to bitmaps above 2^26 states, where frontier arrays would
  // dwarf the visited bitset.
  enum class Frontier : uint8_t { automatic, arrays, bitmaps };
  Frontier frontier = Frontier::automatic;

  // Generator products: direct composition on decoded tuples, or
  // precomputed per-coordinate rank-transition tables. Identical results;
  // `automatic` uses tables whenever the radix makes them affordable.
  enum class Multiply : uint8_t { automatic, tables, direct };
  Multiply multiply = Multiply::automatic;
};

/// Result of one level-synchronized BFS from the identity tuple.
/// level_sizes[d] counts elements of word length exactly d; the identity
/// sits alone at level 0. Since left translations are graph automorphisms,
/// the identity's eccentricity equals the diameter.
struct BfsReport {
  std::string genset;
  Convention convention = Convention::directed;
  bool completed = false;
  int diameter = -1;  // -1 when aborted before exhausting the frontier
  std::vector<uint64_t> level_sizes;
  uint64_t reached = 0;
  uint64_t state_space = 0;
  bool generates = false;  // completed && reached == state_space
  uint64_t peak_visited_bytes = 0;
  double elapsed_seconds = 0.0;
  std::string abort_reason;  // empty when completed

  // Deterministic across runs and worker counts; pass include_elapsed =
  // false to get byte-comparable output.
  std::string to_json(bool include_elapsed = true) const;
};

BfsReport diameter_bfs(const GenSet& genset, const BfsOptions& options = {});

inline BfsReport diameter_undirected(const GenSet& genset, BfsOptions options = {}) {
  options.convention = Convention::undirected;
  return diameter_bfs(genset, options);
}

// Shortest positive word expressing x, by bidirectional level-synchronized
// search (forward y -> y*s from the identity, backward y -> y*s^-1 from x).
// Empty when x is not a product of the generators.
std::optional<unsigned> word_length(const PowerElement& x, const GenSet& genset);

// CSV rows "level,count", one per BFS level, no header.
void write_level_profile_csv(const BfsReport& report, std::ostream& out);
void write_level_profile_csv(const BfsReport& report, const std::string& path);

}  // namespace altpow
