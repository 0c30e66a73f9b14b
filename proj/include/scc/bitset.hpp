#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace scc {

/// Dynamically sized bit set backed by 64-bit words. Rows of every adjacency
/// matrix in the library are stored this way.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  int size() const { return size_; }
  int word_count() const { return static_cast<int>(words_.size()); }

  bool test(int i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(int i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(int i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(int i, bool value) { value ? set(i) : reset(i); }

  Word word(int w) const { return words_[w]; }
  Word& word(int w) { return words_[w]; }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  int next(int from) const {
    if (from >= size_) return size_;
    int w = from / kWordBits;
    Word cur = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (cur) return w * kWordBits + std::countr_zero(cur);
      if (++w >= word_count()) return size_;
      cur = words_[w];
    }
  }
  int first() const { return next(0); }

  /// Index of the last set bit, or -1 if none.
  int last() const {
    for (int w = word_count() - 1; w >= 0; --w)
      if (words_[w]) return w * kWordBits + (kWordBits - 1 - std::countl_zero(words_[w]));
    return -1;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < word_count(); ++w) {
      Word cur = words_[w];
      while (cur) {
        fn(w * kWordBits + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (int w = 0; w < word_count(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (int w = 0; w < word_count(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (int w = 0; w < word_count(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  /// True iff every bit of this is also set in o.
  bool subset_of(const Bitset& o) const {
    for (int w = 0; w < word_count(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int size_ = 0;
  std::vector<Word> words_;
};

}  // namespace scc
