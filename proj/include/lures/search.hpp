#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lures/poset.hpp"
#include "lures/poset_io.hpp"

namespace lures {

inline constexpr std::size_t kDefaultEnumerationLimit = 7;
/// Canonical codes are n*n bits packed in one 64-bit word.
inline constexpr std::size_t kMaxEnumerationSize = 8;

/// Row-major order matrix of the canonical relabeling, first entry most
/// significant. Elements are pre-partitioned by (height, |L(x)|, |U(x)|);
/// the code is the minimum over permutations inside each block. Equal codes
/// (for equal sizes) mean isomorphic posets. Requires size() <= 8.
std::uint64_t canonical_code(const Poset& p);

/// The poset rebuilt from its canonical code, elements labeled e0, e1, ...
Poset canonical_form(const Poset& p);
Poset poset_from_code(std::size_t n, std::uint64_t code);

/// Order isomorphism by backtracking over degree-compatible candidates.
bool isomorphic(const Poset& p, const Poset& q);

/// Calls `visit` once per isomorphism class of n-element posets, in
/// ascending canonical-code order. Throws if n exceeds `limit` (capped at
/// kMaxEnumerationSize) or n == 0.
void for_each_poset(std::size_t n, bool require_bounded, const std::function<void(const Poset&)>& visit,
                    std::size_t limit = kDefaultEnumerationLimit);
std::vector<Poset> enumerate_posets(std::size_t n, bool require_bounded,
                                    std::size_t limit = kDefaultEnumerationLimit);

/// Every total map satisfying both complementation laws, in lexicographic
/// order of the image vector. Throws on unbounded input or when more than
/// `max_count` maps exist.
std::vector<ComplementedPoset> enumerate_complementations(const Poset& p, std::size_t max_count = 1'000'000);

struct PropertyRequirement {
  std::string property;
  bool expected = true;
};

struct SearchOptions {
  /// Search complemented posets (every complementation of every poset).
  bool complemented = false;
  /// Restrict to bounded posets.
  bool bounded_only = true;
  unsigned jobs = 1;
  std::size_t limit = kMaxEnumerationSize;
};

/// First structure (smallest size, then canonical order, then complementation
/// order) meeting every requirement, or nothing up to `max_n`.
std::optional<PosetDocument> find_witness(const std::vector<PropertyRequirement>& requirements, std::size_t max_n,
                                          const SearchOptions& options = {});

}  // namespace lures
