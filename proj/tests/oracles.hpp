#pragma once

// Brute-force reference implementations. They only use Poset::leq and
// plain loops so they share no code paths with the library under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lures/poset.hpp"

namespace oracle {

using lures::Element;
using lures::Poset;
using Set = std::vector<bool>;

inline Set members(const Poset& p, std::uint64_t mask) {
  Set s(p.size());
  for (Element i = 0; i < p.size(); ++i) s[i] = (mask >> i) & 1U;
  return s;
}

inline Set lower(const Poset& p, const Set& a) {
  Set out(p.size(), true);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (a[y] && !p.leq(x, y)) out[x] = false;
  return out;
}

inline Set upper(const Poset& p, const Set& a) {
  Set out(p.size(), true);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (a[y] && !p.leq(y, x)) out[x] = false;
  return out;
}

inline Set unite(Set a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
  return a;
}

inline Set single(const Poset& p, Element x) {
  Set s(p.size());
  s[x] = true;
  return s;
}

inline Set pair(const Poset& p, Element x, Element y) { return unite(single(p, x), single(p, y)); }

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline lures::ElementSet to_bits(const Set& s) {
  lures::ElementSet out(s.size());
  for (Element i = 0; i < s.size(); ++i)
    if (s[i]) out.insert(i);
  return out;
}

/// Every subset A with L(U(A)) = A, filtered from all 2^n subsets.
inline std::set<std::vector<Element>> closed_sets(const Poset& p) {
  std::set<std::vector<Element>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
    const Set a = members(p, mask);
    if (lower(p, upper(p, a)) != a) continue;
    std::vector<Element> v;
    for (Element i = 0; i < p.size(); ++i)
      if (a[i]) v.push_back(i);
    out.insert(v);
  }
  return out;
}

/// Strict modularity by direct quantification over all subsets X and Z.
/// Cones are masks built from leq alone.
inline bool strictly_modular(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint32_t> below(n, 0), above(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.leq(x, y)) {
        below[y] |= 1U << x;
        above[x] |= 1U << y;
      }
  const std::uint32_t all = (n == 32) ? ~0U : (1U << n) - 1;
  auto lo = [&](std::uint32_t a) {
    std::uint32_t out = all;
    for (Element e = 0; e < n; ++e)
      if ((a >> e) & 1U) out &= below[e];
    return out;
  };
  auto up = [&](std::uint32_t a) {
    std::uint32_t out = all;
    for (Element e = 0; e < n; ++e)
      if ((a >> e) & 1U) out &= above[e];
    return out;
  };
  for (std::uint32_t set = 0; set <= all; ++set) {
    const std::uint32_t lx = lo(set);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const std::uint32_t bx = 1U << x;
        const std::uint32_t by = 1U << y;
        // x <= Z implies L(U(x,y),Z) = LU(x,L(y,Z))
        if ((set & above[x]) == set && lo(up(bx | by) | set) != lo(up(bx | lo(by | set)))) return false;
        // L(X) <= z implies L(U(L(X),y),z) = LU(L(X),L(y,z))
        const Element z = x;
        if ((lx & below[z]) == lx && lo(up(lx | by) | bx) != lo(up(lx | lo(by | bx)))) return false;
      }
    if (set == all) break;
  }
  return true;
}

/// L(U(x,y),z) = LU(x,L(y,z)) for all x <= z.
inline bool modular(const Poset& p) {
  const std::size_t n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (!p.leq(x, z)) continue;
        const Set lhs = lower(p, unite(upper(p, pair(p, x, y)), single(p, z)));
        const Set rhs = lower(p, upper(p, unite(single(p, x), lower(p, pair(p, y, z)))));
        if (lhs != rhs) return false;
      }
  return true;
}

/// Maps c with U(x,c(x)) = {1} and L(x,c(x)) = {0} for every x, found by
/// scanning all n^n total maps.
inline std::vector<std::vector<Element>> complementation_maps(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<Element>> out;
  if (!p.bounded()) return out;
  const Set top = single(p, *p.top());
  const Set bottom = single(p, *p.bottom());
  std::vector<Element> comp(n, 0);
  for (;;) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = upper(p, pair(p, x, comp[x])) == top && lower(p, pair(p, x, comp[x])) == bottom;
    if (ok) out.push_back(comp);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++comp[i] < n) break;
      comp[i] = 0;
      if (i == 0) return out;
    }
  }
}

/// Number of isomorphism classes of n-element posets: every labeled partial
/// order is generated from its off-diagonal relation bits and reduced to the
/// smallest code in its permutation orbit.
inline std::size_t poset_class_count(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);

  std::set<std::uint64_t> classes;
  std::vector<std::size_t> perm(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells.size()); ++bits) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((bits >> c) & 1U) r[cells[c].first][cells[c].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && r[i][j] && r[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
      }
    if (!ok) continue;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) code = (code << 1) | (r[perm[i]][perm[j]] ? 1U : 0U);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

/// Deterministic random subset of p.
inline lures::ElementSet random_subset(const Poset& p, std::mt19937_64& rng) {
  lures::ElementSet s(p.size());
  std::bernoulli_distribution coin(0.3);
  for (Element i = 0; i < p.size(); ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

}  // namespace oracle
