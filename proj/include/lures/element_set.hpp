#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace lures {

/// Dense index of an element inside its poset (0..n-1).
using Element = std::size_t;

/// Packed set of element indices over a fixed universe size.
///
/// Binary operations assume both operands share the same universe size.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  static ElementSet single(std::size_t universe, Element e) {
    ElementSet s(universe);
    s.insert(e);
    return s;
  }

  template <class Range>
  static ElementSet of(std::size_t universe, const Range& elements) {
    ElementSet s(universe);
    for (Element e : elements) s.insert(e);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const {
    return (words_[e / kWordBits] >> (e % kWordBits)) & Word{1};
  }
  void insert(Element e) { words_[e / kWordBits] |= Word{1} << (e % kWordBits); }
  void erase(Element e) { words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_full() const { return count() == universe_; }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
  }

  /// Smallest member, or universe() when empty.
  Element first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return universe_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(i * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::size_t word_count(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }

  void trim() {
    const std::size_t tail = universe_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 4> words_;
};

/// Total order used for deterministic listings: by size, then by the sorted
/// member list compared lexicographically.
inline bool size_lex_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace lures
