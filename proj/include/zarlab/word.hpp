// Freely reduced words over the two-family indexed alphabet A u X.
//
// Letters are self-describing (family, index, sign); the alphabet is
// unbounded and there is no global registry. Words are immutable values
// and every operation returns a new word, so callers can retain earlier
// states (reduction traces do exactly that).

#ifndef ZARLAB_WORD_HPP_
#define ZARLAB_WORD_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace zarlab {

enum class LetterFamily : std::uint8_t { A, X };

struct Letter {
  LetterFamily family;
  std::uint32_t index;  // 1-based
  std::int8_t sign;     // +1 or -1

  static constexpr Letter a(std::uint32_t index, int sign = +1) {
    return Letter{LetterFamily::A, index, static_cast<std::int8_t>(sign)};
  }
  static constexpr Letter x(std::uint32_t index, int sign = +1) {
    return Letter{LetterFamily::X, index, static_cast<std::int8_t>(sign)};
  }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
};

constexpr Letter inverse(Letter l) {
  return Letter{l.family, l.index, static_cast<std::int8_t>(-l.sign)};
}

// Total order used wherever determinism matters (sorted member lists,
// witness pairs): A before X, then by index, then positive before negative.
constexpr bool letter_less(const Letter& lhs, const Letter& rhs) {
  return std::tuple(lhs.family, lhs.index, lhs.sign < 0) <
         std::tuple(rhs.family, rhs.index, rhs.sign < 0);
}

class Word;
Word free_reduce(std::vector<Letter> raw);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
Word cyclic_permutation(const Word& w, std::size_t j);
Word word_slice(const Word& w, std::size_t pos, std::size_t len);

/// A freely reduced word; the empty word represents the identity.
/// Instances can only be produced through the reducing operations below,
/// so the no-adjacent-cancellation invariant always holds.
class Word {
 public:
  Word() = default;

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  bool cyclically_reduced() const {
    return letters_.empty() || !(letters_.front() == inverse(letters_.back()));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& lhs, const Word& rhs) {
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(),
                                        rhs.end(), letter_less);
  }

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;

  friend Word free_reduce(std::vector<Letter>);
  friend Word concat(const Word&, const Word&);
  friend Word invert(const Word&);
  friend Word cyclic_permutation(const Word&, std::size_t);
  friend Word word_slice(const Word&, std::size_t, std::size_t);
};

/// Single left-to-right stack pass; linear time, idempotent.
inline Word free_reduce(std::vector<Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

/// Reduced product uv. Both inputs are reduced, so cancellation can only
/// happen at the junction.
inline Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  std::size_t i = 0;
  while (!out.empty() && i < v.size() && out.back() == inverse(v[i])) {
    out.pop_back();
    ++i;
  }
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(i), v.end());
  return Word(std::move(out));
}

/// Reversed sequence with all signs flipped.
inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return Word(std::move(out));
}

/// The j-th cyclic permutation b_{j+1}...b_n b_1...b_j, 0 <= j < |w|.
/// Requires w cyclically reduced so the rotated word is still reduced.
inline Word cyclic_permutation(const Word& w, std::size_t j) {
  if (j >= w.size()) {
    throw std::out_of_range("cyclic_permutation: rotation index out of range");
  }
  if (!w.cyclically_reduced()) {
    throw std::invalid_argument(
        "cyclic_permutation: word is not cyclically reduced");
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  auto mid = w.begin() + static_cast<std::ptrdiff_t>(j);
  out.insert(out.end(), mid, w.end());
  out.insert(out.end(), w.begin(), mid);
  return Word(std::move(out));
}

/// Contiguous slice of a reduced word (itself reduced by construction).
inline Word word_slice(const Word& w, std::size_t pos, std::size_t len) {
  if (pos + len > w.size()) {
    throw std::out_of_range("word_slice: range out of bounds");
  }
  auto first = w.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)));
}

struct Polarity {
  bool positive;  // no occurrence of x_m^{-1}
  bool negative;  // no occurrence of x_m^{+1}
};

/// Sign profile of w with respect to the letter x_m. A word without any
/// occurrence of x_m is both positive and negative in it.
inline Polarity polarity(const Word& w, std::uint32_t x_index) {
  Polarity p{true, true};
  for (const Letter& l : w) {
    if (l.family != LetterFamily::X || l.index != x_index) continue;
    (l.sign < 0 ? p.positive : p.negative) = false;
  }
  return p;
}

inline std::size_t longest_common_prefix(const Word& u, const Word& v) {
  const std::size_t n = std::min(u.size(), v.size());
  std::size_t t = 0;
  while (t < n && u[t] == v[t]) ++t;
  return t;
}

/// Length of the longest common prefix of `pattern` and haystack[pos..].
inline std::size_t match_length_at(const Word& haystack, std::size_t pos,
                                   const Word& pattern) {
  const std::size_t n = std::min(pattern.size(), haystack.size() - pos);
  std::size_t t = 0;
  while (t < n && haystack[pos + t] == pattern[t]) ++t;
  return t;
}

/// All start positions (ascending) where needle occurs letter-by-letter.
inline std::vector<std::size_t> find_occurrences(const Word& needle,
                                                 const Word& haystack) {
  if (needle.empty()) {
    throw std::invalid_argument("find_occurrences: needle is empty");
  }
  std::vector<std::size_t> hits;
  if (needle.size() > haystack.size()) return hits;
  for (std::size_t p = 0; p + needle.size() <= haystack.size(); ++p) {
    if (match_length_at(haystack, p, needle) == needle.size()) {
      hits.push_back(p);
    }
  }
  return hits;
}

}  // namespace zarlab

#endif  // ZARLAB_WORD_HPP_
