#include "galleon/compositions.hpp"

#include <numeric>

namespace galleon {

unsigned Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

bool Composition::is_palindromic() const {
  for (std::size_t i = 0, j = parts.size(); i + 1 < j; ++i, --j)
    if (parts[i] != parts[j - 1]) return false;
  return true;
}

unsigned WeightedComposition::count() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0u);
}

CompositionStream CompositionStream::all(unsigned n, unsigned k) { return CompositionStream(n, k, false); }

CompositionStream CompositionStream::palindromic(unsigned n, unsigned k) {
  return CompositionStream(n, k, true);
}

CompositionStream::CompositionStream(unsigned n, unsigned k, bool palindromic)
    : n_(n), k_(k), palindromic_(palindromic) {
  if (k == 0 || k > n) return;
  if (!palindromic) {
    head_.assign(k, 1);
    head_.back() = n - k + 1;
  } else {
    const unsigned a = k / 2;
    if (k % 2 == 0) {
      if (n % 2 != 0) return;
      head_.assign(a, 1);
      head_.back() = n / 2 - a + 1;
    } else {
      head_.assign(a, 1);  // middle part n - 2a >= 1 since k <= n
    }
  }
  has_value_ = true;
  materialize();
}

void CompositionStream::materialize() {
  auto& p = current_.parts;
  if (!palindromic_) {
    p = head_;
    return;
  }
  p = head_;
  if (k_ % 2 == 1) {
    const unsigned half = std::accumulate(head_.begin(), head_.end(), 0u);
    p.push_back(n_ - 2 * half);
  }
  p.insert(p.end(), head_.rbegin(), head_.rend());
}

// Lexicographic successor of head among positive tuples whose sum equals
// limit (exact) or is at most limit.
bool CompositionStream::advance_free(std::vector<unsigned>& head, unsigned limit, bool exact) {
  const std::size_t a = head.size();
  if (a == 0) return false;
  if (exact) {
    unsigned suffix = head[a - 1];
    for (std::size_t i = a - 1; i-- > 0;) {
      const unsigned slots = static_cast<unsigned>(a - 1 - i);
      if (suffix > slots) {
        ++head[i];
        for (std::size_t j = i + 1; j + 1 < a; ++j) head[j] = 1;
        head[a - 1] = suffix - 1 - (slots - 1);
        return true;
      }
      suffix += head[i];
    }
    return false;
  }
  const unsigned sum = std::accumulate(head.begin(), head.end(), 0u);
  if (sum < limit) {
    ++head[a - 1];
    return true;
  }
  unsigned prefix = sum - head[a - 1];
  for (std::size_t i = a - 1; i-- > 0;) {
    // prefix currently includes head[0..i]
    const unsigned slots = static_cast<unsigned>(a - 1 - i);
    if (prefix + 1 + slots <= limit) {
      ++head[i];
      for (std::size_t j = i + 1; j < a; ++j) head[j] = 1;
      return true;
    }
    prefix -= head[i];
  }
  return false;
}

bool CompositionStream::advance() {
  if (!has_value_) return false;
  bool more;
  if (!palindromic_) {
    more = advance_free(head_, n_, true);
  } else if (k_ % 2 == 0) {
    more = advance_free(head_, n_ / 2, true);
  } else {
    more = advance_free(head_, (n_ - 1) / 2, false);
  }
  if (!more) {
    has_value_ = false;
    return false;
  }
  materialize();
  return true;
}

std::vector<Composition> CompositionStream::collect() {
  std::vector<Composition> out;
  for (const auto& c : *this) out.push_back(c);
  return out;
}

namespace {

// Partitions of `remaining` into parts <= max_part, recorded as multiplicities.
void partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& mult,
                std::vector<WeightedComposition>& out, unsigned weight) {
  if (remaining == 0) {
    out.push_back({mult, weight});
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    ++mult[part - 1];
    partitions(remaining - part, part, mult, out, weight);
    --mult[part - 1];
  }
}

}  // namespace

std::vector<WeightedComposition> weighted_compositions(unsigned weight) {
  std::vector<WeightedComposition> out;
  std::vector<unsigned> mult(weight, 0);
  partitions(weight, weight, mult, out, weight);
  return out;
}

}  // namespace galleon
