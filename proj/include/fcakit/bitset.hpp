#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fca {

// Dynamic fixed-width bit vector. Widths up to 64 bits live in one inline
// word so that the derivation loops allocate nothing; wider sets spill to
// heap storage. Unused high bits stay zero.
//
// lectic_less realizes the subset order used throughout: two sets are
// compared at the first (lowest) index where they differ, and the set
// lacking that index is the smaller one.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int nbits) : nbits_(nbits) {
    assert(nbits >= 0);
    if (!small()) heap_.assign(static_cast<size_t>(word_count(nbits)), 0);
  }

  static Bitset zeros(int nbits) { return Bitset(nbits); }

  static Bitset ones(int nbits) {
    Bitset b(nbits);
    uint64_t* w = b.data();
    for (int i = 0; i < b.nwords(); ++i) w[i] = ~uint64_t{0};
    b.trim();
    return b;
  }

  static Bitset of(int nbits, std::initializer_list<int> bits) {
    Bitset b(nbits);
    for (int i : bits) b.set(i);
    return b;
  }

  // Low 64 bits taken from `mask`; anything beyond the width is dropped.
  static Bitset from_u64(int nbits, uint64_t mask) {
    Bitset b(nbits);
    b.data()[0] = mask;
    b.trim();
    return b;
  }

  int size() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (data()[i >> 6] >> (i & 63)) & uint64_t{1};
  }

  void set(int i) {
    assert(i >= 0 && i < nbits_);
    data()[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    data()[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  void clear() {
    uint64_t* w = data();
    for (int i = 0; i < nwords(); ++i) w[i] = 0;
  }

  Bitset with(int i) const {
    Bitset r = *this;
    r.set(i);
    return r;
  }

  Bitset without(int i) const {
    Bitset r = *this;
    r.reset(i);
    return r;
  }

  bool any() const {
    const uint64_t* w = data();
    for (int i = 0; i < nwords(); ++i)
      if (w[i]) return true;
    return false;
  }

  bool none() const { return !any(); }

  int count() const {
    const uint64_t* w = data();
    int c = 0;
    for (int i = 0; i < nwords(); ++i) c += std::popcount(w[i]);
    return c;
  }

  bool operator==(const Bitset& o) const {
    if (nbits_ != o.nbits_) return false;
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < nwords(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < nwords(); ++i) a[i] &= b[i];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < nwords(); ++i) a[i] |= b[i];
    return *this;
  }

  // Set difference: removes every bit of `o`.
  Bitset& subtract(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < nwords(); ++i) a[i] &= ~b[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) {
    a &= b;
    return a;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) {
    a |= b;
    return a;
  }

  friend Bitset difference(Bitset a, const Bitset& b) {
    a.subtract(b);
    return a;
  }

  Bitset complemented() const {
    Bitset r = *this;
    uint64_t* w = r.data();
    for (int i = 0; i < r.nwords(); ++i) w[i] = ~w[i];
    r.trim();
    return r;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < nwords(); ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }

  bool is_proper_subset_of(const Bitset& o) const {
    return is_subset_of(o) && !(*this == o);
  }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < nwords(); ++i)
      if (a[i] & b[i]) return true;
    return false;
  }

  // True when *this precedes `o`: at the lowest differing index, `o` has the
  // bit. Equal sets compare false.
  bool lectic_less(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    for (int i = 0; i < nwords(); ++i) {
      uint64_t d = a[i] ^ b[i];
      if (d) {
        uint64_t low = d & (~d + 1);
        return (b[i] & low) != 0;
      }
    }
    return false;
  }

  // Compares only bits [0, limit).
  bool equal_below(const Bitset& o, int limit) const {
    assert(nbits_ == o.nbits_ && limit >= 0 && limit <= nbits_);
    const uint64_t* a = data();
    const uint64_t* b = o.data();
    int full = limit >> 6;
    for (int i = 0; i < full; ++i)
      if (a[i] != b[i]) return false;
    int rem = limit & 63;
    if (rem) {
      uint64_t mask = (uint64_t{1} << rem) - 1;
      if ((a[full] ^ b[full]) & mask) return false;
    }
    return true;
  }

  int first_set() const {
    const uint64_t* w = data();
    for (int i = 0; i < nwords(); ++i)
      if (w[i]) return (i << 6) + std::countr_zero(w[i]);
    return -1;
  }

  uint64_t low64() const { return data()[0]; }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    const uint64_t* w = data();
    for (int k = 0; k < nwords(); ++k) {
      uint64_t bits = w[k];
      while (bits) {
        fn((k << 6) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int i) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    });
    s += '}';
    return s;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(nbits_);
    const uint64_t* w = data();
    for (int i = 0; i < nwords(); ++i) {
      h ^= w[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

 private:
  static int word_count(int nbits) { return nbits <= 64 ? 1 : (nbits + 63) >> 6; }
  bool small() const { return nbits_ <= 64; }
  int nwords() const { return small() ? 1 : static_cast<int>(heap_.size()); }
  uint64_t* data() { return small() ? &one_ : heap_.data(); }
  const uint64_t* data() const { return small() ? &one_ : heap_.data(); }

  // Clears bits at and beyond the width.
  void trim() {
    if (nbits_ == 0) {
      one_ = 0;
      return;
    }
    int rem = nbits_ & 63;
    if (rem) data()[nwords() - 1] &= (uint64_t{1} << rem) - 1;
  }

  int nbits_ = 0;
  uint64_t one_ = 0;
  std::vector<uint64_t> heap_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace fca
