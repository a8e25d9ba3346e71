#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace outerstring {

/// A subset of the curves of one family, stored as a bitset over family indices.
/// Iteration visits members in increasing index, i.e. in basepoint order.
class CurveSet {
 public:
  CurveSet() = default;
  explicit CurveSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  CurveSet(std::size_t universe, std::initializer_list<std::size_t> members) : CurveSet(universe) {
    for (auto m : members) insert(m);
  }

  static CurveSet full(std::size_t universe) {
    CurveSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool contains(std::size_t i) const {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member; universe() if empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return universe_;
  }
  /// Largest member; universe() if empty.
  std::size_t last() const {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k] != 0) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
    return universe_;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  CurveSet& operator|=(const CurveSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  CurveSet& operator&=(const CurveSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  CurveSet& operator-=(const CurveSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend CurveSet operator|(CurveSet a, const CurveSet& b) { return a |= b; }
  friend CurveSet operator&(CurveSet a, const CurveSet& b) { return a &= b; }
  friend CurveSet operator-(CurveSet a, const CurveSet& b) { return a -= b; }

  bool intersects(const CurveSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & o.words_[k]) != 0) return true;
    return false;
  }
  bool subset_of(const CurveSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    return true;
  }

  friend bool operator==(const CurveSet&, const CurveSet&) = default;

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CurveSetHash {
  std::size_t operator()(const CurveSet& s) const { return s.hash(); }
};

}  // namespace outerstring
