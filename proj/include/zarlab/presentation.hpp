// Symmetrized relator families and the C'(lambda) metric condition.
//
// Two kinds of presentation live here. The built-in family over A u X is
// parameterized by an even k >= 8: relator i alternates the letters
// a_1..a_k with x_i^{-1}/x_i and has length exactly 2k. Its symmetrized
// closure is never materialized globally; consumers supply the finite set
// of x-indices relevant to the words at hand. User-supplied presentations
// over single-character alphabets are loaded from a small text format and
// symmetrized the same way.

#ifndef ZARLAB_PRESENTATION_HPP_
#define ZARLAB_PRESENTATION_HPP_

#include <cctype>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zarlab/word.hpp"

namespace zarlab {

struct PresentationParams {
  int k = 8;

  void validate() const {
    if (k < 8 || k % 2 != 0) {
      throw std::invalid_argument("presentation parameter k must be even and >= 8");
    }
  }
  // The A-alphabet is a_1..a_{k+1}; a_{k+1} occurs in no relator.
  std::uint32_t alphabet_bound() const { return static_cast<std::uint32_t>(k) + 1; }
};

/// Relator i: a_1 x_i^{-1} a_2 x_i a_3 x_i^{-1} ... a_{k-1} x_i^{-1} a_k x_i.
/// Odd-subscript a's are followed by x_i^{-1}, even ones by x_i; length 2k.
inline Word relator(PresentationParams params, std::uint32_t index) {
  params.validate();
  if (index == 0) throw std::invalid_argument("relator index must be >= 1");
  std::vector<Letter> letters;
  letters.reserve(2 * static_cast<std::size_t>(params.k));
  for (std::uint32_t j = 1; j <= static_cast<std::uint32_t>(params.k); ++j) {
    letters.push_back(Letter::a(j));
    letters.push_back(Letter::x(index, j % 2 == 1 ? -1 : +1));
  }
  return free_reduce(std::move(letters));
}

/// Identifies one member of a symmetrized closure: the rotation-th cyclic
/// permutation of (base relator index)^sign. Members sort by
/// (index, rotation, sign) with +1 before -1.
struct RelatorId {
  std::uint32_t index;
  std::uint32_t rotation;
  int sign;  // +1 or -1

  friend constexpr bool operator==(const RelatorId&, const RelatorId&) = default;
};

inline std::string to_string(const RelatorId& id) {
  return "(" + std::to_string(id.index) + "," + std::to_string(id.rotation) +
         "," + (id.sign < 0 ? std::string("-1") : std::string("+1")) + ")";
}

struct FamilyMember {
  RelatorId id;
  Word word;
};

namespace detail {

// Closure of one base word under inversion and rotation, appended in id
// order: rotation ascending, +1 before -1 within a rotation.
inline void append_closure(std::vector<FamilyMember>& out, const Word& base,
                           std::uint32_t index) {
  const Word inv = invert(base);
  for (std::uint32_t j = 0; j < base.size(); ++j) {
    out.push_back({RelatorId{index, j, +1}, cyclic_permutation(base, j)});
    out.push_back({RelatorId{index, j, -1}, cyclic_permutation(inv, j)});
  }
}

inline std::vector<Word> sorted_distinct_words(const std::vector<FamilyMember>& members) {
  std::vector<Word> words;
  words.reserve(members.size());
  for (const FamilyMember& m : members) words.push_back(m.word);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace detail

/// Symmetrized closure of the built-in relators over a finite index set.
class RelatorFamily {
 public:
  RelatorFamily(PresentationParams params, std::set<std::uint32_t> indices)
      : params_(params), indices_(std::move(indices)) {
    params_.validate();
    if (indices_.empty()) {
      throw std::invalid_argument("relator family requires a nonempty index set");
    }
    for (std::uint32_t i : indices_) {
      detail::append_closure(members_, relator(params_, i), i);
    }
    distinct_words_ = detail::sorted_distinct_words(members_);
  }

  PresentationParams params() const { return params_; }
  const std::set<std::uint32_t>& indices() const { return indices_; }
  const std::vector<FamilyMember>& members() const { return members_; }
  const std::vector<Word>& distinct_words() const { return distinct_words_; }
  std::size_t member_length() const { return 2 * static_cast<std::size_t>(params_.k); }

 private:
  PresentationParams params_;
  std::set<std::uint32_t> indices_;
  std::vector<FamilyMember> members_;
  std::vector<Word> distinct_words_;
};

inline RelatorFamily symmetrized_family(PresentationParams params,
                                        const std::set<std::uint32_t>& indices) {
  return RelatorFamily(params, indices);
}

/// The x-indices occurring in v. Only relators with these indices can
/// share a subword of length >= 2 with v.
inline std::set<std::uint32_t> relevant_indices(const Word& v) {
  std::set<std::uint32_t> out;
  for (const Letter& l : v) {
    if (l.family == LetterFamily::X) out.insert(l.index);
  }
  return out;
}

struct PieceReport {
  std::size_t length = 0;
  // Lexicographically least pair attaining the maximum (unset when length 0).
  Word first;
  Word second;
};

/// Maximum over all unordered pairs of distinct members of the longest
/// common initial segment, with one witnessing pair. All-pairs scan; the
/// members are sorted, so the first pair attaining the maximum is the
/// lexicographically least one.
inline PieceReport max_piece_length(const std::vector<Word>& sorted_distinct) {
  if (sorted_distinct.size() < 2) {
    throw std::invalid_argument("piece analysis requires at least 2 distinct members");
  }
  PieceReport best;
  for (std::size_t i = 0; i < sorted_distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted_distinct.size(); ++j) {
      const std::size_t t = longest_common_prefix(sorted_distinct[i], sorted_distinct[j]);
      if (t > best.length) {
        best = PieceReport{t, sorted_distinct[i], sorted_distinct[j]};
      }
    }
  }
  return best;
}

inline PieceReport max_piece_length(const RelatorFamily& family) {
  return max_piece_length(family.distinct_words());
}

/// Exact rational in (0, 1), written p/q on the command line.
struct Ratio {
  long long num = 1;
  long long den = 6;

  void validate() const {
    if (num <= 0 || den <= 0 || num >= den) {
      throw std::invalid_argument("lambda must satisfy 0 < lambda < 1");
    }
  }
};

namespace detail {

inline bool metric_condition(const std::vector<Word>& sorted_distinct, Ratio lambda) {
  lambda.validate();
  if (sorted_distinct.size() < 2) return true;  // no pieces at all
  const std::size_t piece = max_piece_length(sorted_distinct).length;
  std::size_t min_len = sorted_distinct.front().size();
  for (const Word& w : sorted_distinct) min_len = std::min(min_len, w.size());
  // Strict inequality |U| < lambda * |W|, checked against the shortest
  // member; members of the built-in family all have equal length.
  return static_cast<long long>(piece) * lambda.den <
         lambda.num * static_cast<long long>(min_len);
}

}  // namespace detail

inline bool check_metric_condition(const RelatorFamily& family, Ratio lambda) {
  return detail::metric_condition(family.distinct_words(), lambda);
}

/// A finite symmetrized presentation over single-character generators,
/// loaded from text. Lowercase letters are generators, uppercase their
/// inverses; relators must be cyclically reduced.
class GenericPresentation {
 public:
  GenericPresentation(std::vector<char> generators, std::vector<Word> base_relators)
      : generators_(std::move(generators)), relators_(std::move(base_relators)) {
    for (std::size_t r = 0; r < relators_.size(); ++r) {
      detail::append_closure(members_, relators_[r], static_cast<std::uint32_t>(r) + 1);
    }
    distinct_words_ = detail::sorted_distinct_words(members_);
    min_member_length_ = 0;
    for (const Word& w : distinct_words_) {
      min_member_length_ = min_member_length_ == 0 ? w.size()
                                                   : std::min(min_member_length_, w.size());
    }
  }

  const std::vector<char>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<FamilyMember>& members() const { return members_; }
  const std::vector<Word>& distinct_words() const { return distinct_words_; }
  std::size_t min_member_length() const { return min_member_length_; }

  std::vector<Letter> raw_letters(std::string_view text) const {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      letters.push_back(letter_from_char(text[i], i));
    }
    return letters;
  }

  /// Parse a word in the single-character alphabet (free reduction applied).
  Word word_from_string(std::string_view text) const {
    return free_reduce(raw_letters(text));
  }

  std::string render(const Word& w) const {
    if (w.empty()) return "e";
    std::string out;
    out.reserve(w.size());
    for (const Letter& l : w) {
      if (l.family != LetterFamily::A || l.index == 0 || l.index > generators_.size()) {
        throw std::invalid_argument("word is not over this presentation's alphabet");
      }
      const char c = generators_[l.index - 1];
      out.push_back(l.sign < 0 ? static_cast<char>(std::toupper(c)) : c);
    }
    return out;
  }

 private:
  Letter letter_from_char(char c, std::size_t offset) const {
    const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char base = upper ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      if (generators_[g] == base) {
        return Letter::a(static_cast<std::uint32_t>(g) + 1, upper ? -1 : +1);
      }
    }
    throw std::invalid_argument("unknown generator '" + std::string(1, c) +
                                "' at position " + std::to_string(offset));
  }

  std::vector<char> generators_;
  std::vector<Word> relators_;
  std::vector<FamilyMember> members_;
  std::vector<Word> distinct_words_;
  std::size_t min_member_length_ = 0;
};

inline PieceReport max_piece_length(const GenericPresentation& pres) {
  return max_piece_length(pres.distinct_words());
}

inline bool check_metric_condition(const GenericPresentation& pres, Ratio lambda) {
  return detail::metric_condition(pres.distinct_words(), lambda);
}

/// Loader for the presentation file format:
///   # comment
///   generators: a b c
///   relator: abAB
/// Rejects unknown generators and relators that are not cyclically reduced.
inline GenericPresentation load_presentation(std::istream& in) {
  std::vector<char> generators;
  std::vector<std::string> relator_strings;
  bool have_generators = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const std::string trimmed = line.substr(first);
    const auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("presentation line " + std::to_string(line_no) + ": " + msg);
    };
    if (trimmed.rfind("generators:", 0) == 0) {
      if (have_generators) fail("duplicate generators line");
      std::istringstream fields(trimmed.substr(11));
      std::string tok;
      while (fields >> tok) {
        if (tok.size() != 1 || !std::islower(static_cast<unsigned char>(tok[0]))) {
          fail("generators must be single lowercase letters");
        }
        if (std::find(generators.begin(), generators.end(), tok[0]) != generators.end()) {
          fail("duplicate generator '" + tok + "'");
        }
        generators.push_back(tok[0]);
      }
      if (generators.empty()) fail("no generators listed");
      have_generators = true;
    } else if (trimmed.rfind("relator:", 0) == 0) {
      if (!have_generators) fail("relator before generators line");
      std::istringstream fields(trimmed.substr(8));
      std::string tok;
      if (!(fields >> tok)) fail("empty relator");
      std::string extra;
      if (fields >> extra) fail("relator must be a single string");
      relator_strings.push_back(tok);
    } else {
      fail("expected 'generators:' or 'relator:'");
    }
  }
  if (!have_generators) {
    throw std::invalid_argument("presentation file has no generators line");
  }

  GenericPresentation alphabet_only(generators, {});
  std::vector<Word> relators;
  for (const std::string& s : relator_strings) {
    const std::vector<Letter> raw = alphabet_only.raw_letters(s);
    const Word reduced = free_reduce(raw);
    if (reduced.size() != raw.size()) {
      throw std::invalid_argument("relator '" + s + "' is not freely reduced");
    }
    if (!reduced.cyclically_reduced()) {
      throw std::invalid_argument("relator '" + s + "' is not cyclically reduced");
    }
    relators.push_back(reduced);
  }
  return GenericPresentation(std::move(generators), std::move(relators));
}

inline GenericPresentation load_presentation_text(std::string_view text) {
  std::istringstream stream{std::string(text)};
  return load_presentation(stream);
}

}  // namespace zarlab

#endif  // ZARLAB_PRESENTATION_HPP_
