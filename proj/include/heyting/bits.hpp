#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace heyting {

// Fixed-capacity bitset sized at construction. All binary operations assume
// equal capacity.
class Bits {
public:
  Bits() = default;
  explicit Bits(int capacity) : n_(capacity), w_(words(capacity), 0) {}

  static Bits ones(int capacity) {
    Bits b(capacity);
    for (auto& w : b.w_) w = ~uint64_t{0};
    b.trim();
    return b;
  }

  int capacity() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void assign(int i, bool v) { v ? set(i) : reset(i); }

  Bits& operator&=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator^=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  Bits complement() const {
    Bits r(n_);
    for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }

  bool subset_of(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // first set bit, or -1
  int first() const { return next(-1); }
  // first set bit after i, or -1
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t k = static_cast<size_t>(i) >> 6;
    uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (w) return static_cast<int>(k << 6) + __builtin_ctzll(w);
      if (++k >= w_.size()) return -1;
      w = w_[k];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // numeric order on the underlying words; used only for deterministic sorts
  bool value_less(const Bits& o) const {
    for (size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for (int i = first(); i >= 0; i = next(i)) {
      if (sep) s += ',';
      s += std::to_string(i);
      sep = true;
    }
    return s + "}";
  }

private:
  static size_t words(int n) { return static_cast<size_t>((n + 63) / 64); }
  void trim() {
    if (n_ & 63) w_.back() &= (~uint64_t{0}) >> (64 - (n_ & 63));
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsHash {
  size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace heyting
