#include "lures/search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "lures/properties.hpp"

namespace lures {

namespace {

/// Poset on at most 8 elements with bitmask rows; up[i] bit j means i <= j.
struct SmallPoset {
  std::size_t n = 0;
  std::array<std::uint8_t, kMaxEnumerationSize> up{};

  bool leq(std::size_t i, std::size_t j) const { return (up[i] >> j) & 1U; }
};

SmallPoset to_small(const Poset& p) {
  if (p.size() > kMaxEnumerationSize) throw Error("canonical codes need at most 8 elements");
  SmallPoset s;
  s.n = p.size();
  for (Element i = 0; i < s.n; ++i)
    p.up(i).for_each([&](Element j) { s.up[i] |= static_cast<std::uint8_t>(1U << j); });
  return s;
}

std::uint64_t code_under(const SmallPoset& s, const std::array<std::size_t, kMaxEnumerationSize>& perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j) code = (code << 1) | (s.leq(perm[i], perm[j]) ? 1U : 0U);
  return code;
}

std::uint64_t small_code(const SmallPoset& s) {
  const std::size_t n = s.n;
  std::array<int, kMaxEnumerationSize> height{};
  std::array<int, kMaxEnumerationSize> below{};
  std::array<int, kMaxEnumerationSize> above{};
  for (std::size_t i = 0; i < n; ++i) {
    above[i] = std::popcount(s.up[i]);
    for (std::size_t j = 0; j < n; ++j) below[i] += s.leq(j, i) ? 1 : 0;
  }
  // Heights in order of |L(x)|, which is a linear extension.
  std::array<std::size_t, kMaxEnumerationSize> by_below{};
  std::iota(by_below.begin(), by_below.begin() + n, std::size_t{0});
  std::sort(by_below.begin(), by_below.begin() + n, [&](auto a, auto b) { return below[a] < below[b]; });
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t x = by_below[k];
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && s.leq(y, x)) height[x] = std::max(height[x], height[y] + 1);
  }

  auto key = [&](std::size_t i) { return std::array<int, 3>{height[i], below[i], above[i]}; };
  std::array<std::size_t, kMaxEnumerationSize> perm{};
  std::iota(perm.begin(), perm.begin() + n, std::size_t{0});
  std::sort(perm.begin(), perm.begin() + n, [&](auto a, auto b) { return key(a) < key(b); });

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && key(perm[end]) == key(perm[start])) ++end;
    if (end - start > 1) {
      std::sort(perm.begin() + start, perm.begin() + end);
      blocks.emplace_back(start, end);
    }
    start = end;
  }

  std::uint64_t best = code_under(s, perm);
  // Odometer over the permutations of every block.
  for (;;) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [lo, hi] = blocks[b];
      if (std::next_permutation(perm.begin() + lo, perm.begin() + hi)) break;
    }
    if (b == blocks.size()) break;
    best = std::min(best, code_under(s, perm));
  }
  return best;
}

SmallPoset small_from_code(std::size_t n, std::uint64_t code) {
  SmallPoset s;
  s.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((code >> (n * n - 1 - (i * n + j))) & 1U) s.up[i] |= static_cast<std::uint8_t>(1U << j);
  return s;
}

/// Canonical codes of all n-element posets, grown by adding a new maximal
/// element above every order ideal of each (n-1)-element class.
std::set<std::uint64_t> class_codes(std::size_t n) {
  std::set<std::uint64_t> level{1};
  for (std::size_t k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const SmallPoset s = small_from_code(k, code);
      for (std::uint32_t ideal = 0; ideal < (1U << k); ++ideal) {
        bool down_closed = true;
        for (std::size_t x = 0; x < k && down_closed; ++x) {
          if (!((ideal >> x) & 1U)) continue;
          for (std::size_t y = 0; y < k; ++y)
            if (s.leq(y, x) && !((ideal >> y) & 1U)) down_closed = false;
        }
        if (!down_closed) continue;
        SmallPoset grown = s;
        grown.n = k + 1;
        grown.up[k] = static_cast<std::uint8_t>(1U << k);
        for (std::size_t x = 0; x < k; ++x)
          if ((ideal >> x) & 1U) grown.up[x] |= static_cast<std::uint8_t>(1U << k);
        next.insert(small_code(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::uint64_t canonical_code(const Poset& p) { return small_code(to_small(p)); }

Poset poset_from_code(std::size_t n, std::uint64_t code) {
  const SmallPoset s = small_from_code(n, code);
  std::vector<std::string> names;
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (s.leq(i, j)) up[i].insert(j);
  }
  return Poset::from_order(std::move(names), std::move(up));
}

Poset canonical_form(const Poset& p) { return poset_from_code(p.size(), canonical_code(p)); }

bool isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return false;
  auto key = [](const Poset& r, Element x) { return std::pair{r.down(x).count(), r.up(x).count()}; };
  std::vector<std::pair<std::size_t, std::size_t>> kp, kq;
  for (Element x = 0; x < n; ++x) {
    kp.push_back(key(p, x));
    kq.push_back(key(q, x));
  }
  auto sp = kp, sq = kq;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return false;

  std::vector<Element> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(Element)> extend = [&](Element x) -> bool {
    if (x == n) return true;
    for (Element y = 0; y < n; ++y) {
      if (used[y] || kq[y] != kp[x]) continue;
      bool ok = true;
      for (Element a = 0; a < x && ok; ++a)
        ok = p.leq(a, x) == q.leq(image[a], y) && p.leq(x, a) == q.leq(y, image[a]);
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return extend(0);
}

void for_each_poset(std::size_t n, bool require_bounded, const std::function<void(const Poset&)>& visit,
                    std::size_t limit) {
  if (n == 0) throw Error("poset size must be positive");
  if (n > std::min(limit, kMaxEnumerationSize))
    throw Error("enumeration limit exceeded: " + std::to_string(n) + " > " +
                std::to_string(std::min(limit, kMaxEnumerationSize)));
  for (std::uint64_t code : class_codes(n)) {
    Poset p = poset_from_code(n, code);
    if (require_bounded && !p.bounded()) continue;
    visit(p);
  }
}

std::vector<Poset> enumerate_posets(std::size_t n, bool require_bounded, std::size_t limit) {
  std::vector<Poset> out;
  for_each_poset(n, require_bounded, [&](const Poset& p) { out.push_back(p); }, limit);
  return out;
}

std::vector<ComplementedPoset> enumerate_complementations(const Poset& p, std::size_t max_count) {
  if (!p.bounded()) throw Error("complementations need a bounded poset");
  const std::size_t n = p.size();
  const ElementSet top = p.singleton(*p.top());
  const ElementSet bottom = p.singleton(*p.bottom());
  std::vector<std::vector<Element>> candidates(n);
  std::size_t total = 1;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y)
      if ((p.up(x) & p.up(y)) == top && (p.down(x) & p.down(y)) == bottom) candidates[x].push_back(y);
    if (candidates[x].empty()) return {};
    if (total > max_count / candidates[x].size()) throw Error("too many complementations to enumerate");
    total *= candidates[x].size();
  }

  std::vector<ComplementedPoset> out;
  out.reserve(total);
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    std::vector<Element> comp(n);
    for (Element x = 0; x < n; ++x) comp[x] = candidates[x][pick[x]];
    out.push_back(attach_complement(p, std::move(comp)));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::optional<PosetDocument> find_witness(const std::vector<PropertyRequirement>& requirements, std::size_t max_n,
                                          const SearchOptions& options) {
  const std::size_t limit = std::min(options.limit, kMaxEnumerationSize);
  if (max_n > limit)
    throw Error("enumeration limit exceeded: " + std::to_string(max_n) + " > " + std::to_string(limit));
  for (const auto& r : requirements) {
    const auto& catalog = property_catalog();
    auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& i) { return i.name == r.property; });
    if (it == catalog.end()) throw Error("unknown property '" + r.property + "'");
    if (it->needs_complement && !options.complemented)
      throw Error("property '" + r.property + "' needs complemented search");
  }

  auto matches = [&](const Poset& p, const ComplementedPoset* cp) {
    for (const auto& r : requirements)
      if (check_property(r.property, p, cp, options.jobs).holds != r.expected) return false;
    return true;
  };

  for (std::size_t n = 1; n <= max_n; ++n)
    for (const Poset& p : enumerate_posets(n, options.bounded_only, options.limit)) {
      if (!options.complemented) {
        if (matches(p, nullptr)) return PosetDocument{p, std::nullopt};
        continue;
      }
      if (!p.bounded()) continue;
      for (const auto& cp : enumerate_complementations(p))
        if (matches(p, &cp)) return PosetDocument{p, cp};
    }
  return std::nullopt;
}

}  // namespace lures
