#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mincut/errors.hpp"

namespace mincut {

// Fixed-universe bitset used for vertex sets and for index sets over the
// irreducible poset. Two sets are comparable only if their universes match.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}

  static VertexSet of(int universe, std::initializer_list<int> ids) {
    VertexSet s(universe);
    for (int id : ids) s.set(id);
    return s;
  }

  int universe() const { return universe_; }

  bool test(int i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    check_index(i);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    check_index(i);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  VertexSet& operator|=(const VertexSet& o) {
    check_universe(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_universe(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // Set difference: removes every element of o.
  VertexSet& operator-=(const VertexSet& o) {
    check_universe(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    check_universe(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_universe(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Total order compatible with subset inclusion: fewer elements first,
  // ties broken by lowest differing vertex id (the set containing it first).
  bool canonical_less(const VertexSet& o) const {
    check_universe(o);
    int ca = count(), cb = o.count();
    if (ca != cb) return ca < cb;
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        uint64_t low = diff & (~diff + 1);
        return words_[i] & low;
      }
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  static size_t word_count(int universe) { return (static_cast<size_t>(universe) + 63) / 64; }

  void check_index(int i) const {
    if (i < 0 || i >= universe_) throw StructuralError("vertex id out of range");
  }
  void check_universe(const VertexSet& o) const {
    if (universe_ != o.universe_) throw StructuralError("mismatched set universes");
  }

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace mincut
