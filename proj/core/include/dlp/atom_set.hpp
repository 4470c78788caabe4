#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace dlp {

using AtomId = std::uint32_t;

/// Dense set of atom indices over a fixed universe [0, universe()).
/// Used for interpretations, loops, and dependency-graph vertex sets.
class AtomSet {
public:
  AtomSet() = default;
  explicit AtomSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  AtomSet(std::size_t universe, std::initializer_list<AtomId> ids) : AtomSet(universe) {
    for (AtomId id : ids) insert(id);
  }

  static AtomSet full(std::size_t universe) {
    AtomSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<AtomId>(i));
    return s;
  }

  /// Builds the subset of `atoms` selected by the low bits of `mask`.
  static AtomSet from_mask(std::size_t universe, const std::vector<AtomId>& atoms, std::uint64_t mask) {
    AtomSet s(universe);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1U) s.insert(atoms[i]);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(AtomId id) const noexcept {
    return id < universe_ && (words_[id / 64] >> (id % 64) & 1U);
  }
  void insert(AtomId id) { words_[id / 64] |= std::uint64_t{1} << (id % 64); }
  void erase(AtomId id) { words_[id / 64] &= ~(std::uint64_t{1} << (id % 64)); }
  void set(AtomId id, bool value) { value ? insert(id) : erase(id); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const AtomSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.word(i)) return false;
    return true;
  }
  bool proper_subset_of(const AtomSet& other) const noexcept { return subset_of(other) && *this != other; }
  bool intersects(const AtomSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.word(i)) return true;
    return false;
  }

  AtomSet& operator|=(const AtomSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.word(i);
    return *this;
  }
  AtomSet& operator&=(const AtomSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
    return *this;
  }
  AtomSet& operator-=(const AtomSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.word(i);
    return *this;
  }
  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }

  /// Projects this set onto `atoms`: bit i of the result is set iff atoms[i] is a member.
  std::uint64_t mask_of(const std::vector<AtomId>& atoms) const noexcept {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (contains(atoms[i])) m |= std::uint64_t{1} << i;
    return m;
  }

  std::vector<AtomId> elements() const {
    std::vector<AtomId> out;
    for_each([&](AtomId id) { out.push_back(id); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        auto b = static_cast<unsigned>(std::countr_zero(bits));
        f(static_cast<AtomId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const AtomSet& a, const AtomSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Orders sets by their sorted element lists (lexicographic in atom order).
  friend bool operator<(const AtomSet& a, const AtomSet& b) { return a.elements() < b.elements(); }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

private:
  std::uint64_t word(std::size_t i) const noexcept { return i < words_.size() ? words_[i] : 0; }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct AtomSetHash {
  std::size_t operator()(const AtomSet& s) const noexcept { return s.hash(); }
};

}  // namespace dlp
