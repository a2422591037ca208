#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace arr {

// Set of 1-based hyperplane indices over a fixed universe [1..cap], stored as
// a bitset. Comparison order is lexicographic on the sorted index sequence,
// which is what every "canonical order" in this library means for sets.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int cap) : cap_(cap), w_((cap + 64) / 64, 0) {
    if (cap < 0) throw std::invalid_argument("negative index set capacity");
  }

  static IndexSet of(int cap, std::initializer_list<int> xs) {
    IndexSet s(cap);
    for (int x : xs) s.add(x);
    return s;
  }
  static IndexSet of(int cap, const std::vector<int>& xs) {
    IndexSet s(cap);
    for (int x : xs) s.add(x);
    return s;
  }
  static IndexSet all(int cap) {
    IndexSet s(cap);
    for (int i = 1; i <= cap; ++i) s.add(i);
    return s;
  }

  int cap() const { return cap_; }

  void add(int i) { word(i) |= bit(i); }
  void remove(int i) { word(i) &= ~bit(i); }
  bool test(int i) const {
    if (i < 1 || i > cap_) return false;
    return (w_[(i - 1) >> 6] & bit_unchecked(i)) != 0;
  }

  int count() const {
    int n = 0;
    for (auto x : w_) n += __builtin_popcountll(x);
    return n;
  }
  bool empty() const {
    for (auto x : w_) if (x) return false;
    return true;
  }
  // Smallest element, or 0 if empty.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w_[k]) + 1);
    return 0;
  }

  bool subset_of(const IndexSet& o) const {
    check_cap(o);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  IndexSet operator|(const IndexSet& o) const {
    check_cap(o);
    IndexSet r(cap_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  IndexSet operator&(const IndexSet& o) const {
    check_cap(o);
    IndexSet r(cap_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  IndexSet minus(const IndexSet& o) const {
    check_cap(o);
    IndexSet r(cap_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.cap_ == b.cap_ && a.w_ == b.w_;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

  // Lexicographic on sorted index sequences: {1,3} < {1,4} < {2}.
  // Prefix is smaller: {1} < {1,3}.
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    a.check_cap(b);
    std::vector<int> va = a.to_vector(), vb = b.to_vector();
    return va < vb;
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        v.push_back(static_cast<int>(k * 64 + __builtin_ctzll(x) + 1));
        x &= x - 1;
      }
    }
    return v;
  }

  std::string str() const {
    std::string s = "{";
    bool first_el = true;
    for (int i : to_vector()) {
      if (!first_el) s += ",";
      s += std::to_string(i);
      first_el = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t& word(int i) {
    if (i < 1 || i > cap_) throw std::invalid_argument("index out of range: " + std::to_string(i));
    return w_[(i - 1) >> 6];
  }
  static std::uint64_t bit_unchecked(int i) { return std::uint64_t{1} << ((i - 1) & 63); }
  std::uint64_t bit(int i) const {
    if (i < 1 || i > cap_) throw std::invalid_argument("index out of range: " + std::to_string(i));
    return bit_unchecked(i);
  }
  void check_cap(const IndexSet& o) const {
    if (cap_ != o.cap_) throw std::invalid_argument("index set capacity mismatch");
  }

  int cap_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace arr
