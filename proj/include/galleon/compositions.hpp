#pragma once

// Integer compositions (ordered tuples of positive parts) and multiplicity
// vectors indexed by part weight.

#include <cstddef>
#include <iterator>
#include <vector>

namespace galleon {

struct Composition {
  std::vector<unsigned> parts;

  unsigned total() const;
  std::size_t size() const { return parts.size(); }
  unsigned operator[](std::size_t i) const { return parts[i]; }
  bool is_palindromic() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

// Multiplicities (k_1, ..., k_m) with k_1 + 2 k_2 + ... + m k_m = weight.
struct WeightedComposition {
  std::vector<unsigned> multiplicities;  // multiplicities[i - 1] = k_i
  unsigned weight = 0;

  // k_1 + ... + k_m
  unsigned count() const;
  unsigned k(unsigned i) const { return i >= 1 && i <= multiplicities.size() ? multiplicities[i - 1] : 0; }

  friend bool operator==(const WeightedComposition&, const WeightedComposition&) = default;
};

// Lazy stream over a family of compositions, in lexicographic order.
class CompositionStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    explicit iterator(CompositionStream* s) : stream_(s) {}
    reference operator*() const { return stream_->current_; }
    pointer operator->() const { return &stream_->current_; }
    iterator& operator++() {
      if (!stream_->advance()) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

   private:
    CompositionStream* stream_ = nullptr;
  };

  // Every composition of n into k positive parts.
  static CompositionStream all(unsigned n, unsigned k);
  // Compositions of n into k parts equal to their own reversal.
  static CompositionStream palindromic(unsigned n, unsigned k);

  iterator begin() { return has_value_ ? iterator(this) : iterator(); }
  iterator end() { return iterator(); }

  std::vector<Composition> collect();

 private:
  CompositionStream(unsigned n, unsigned k, bool palindromic);
  bool advance();
  bool advance_free(std::vector<unsigned>& head, unsigned limit, bool exact);
  void materialize();

  unsigned n_;
  unsigned k_;
  bool palindromic_;
  // Free parts. For a plain stream these are all k parts; for a palindromic
  // stream they are the first floor(k/2) parts, the middle part being
  // determined by the rest.
  std::vector<unsigned> head_;
  Composition current_;
  bool has_value_ = false;
};

inline CompositionStream compositions(unsigned n, unsigned k) { return CompositionStream::all(n, k); }
inline CompositionStream palindromic_compositions(unsigned n, unsigned k) {
  return CompositionStream::palindromic(n, k);
}

// All multiplicity vectors of the given weight (the partitions of weight);
// weight 0 yields one empty vector.
std::vector<WeightedComposition> weighted_compositions(unsigned weight);

}  // namespace galleon
