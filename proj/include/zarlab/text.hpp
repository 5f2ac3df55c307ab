// Text grammars.
//
// Words: tokens separated by single spaces; a token is "a" or "x"
// followed by digits, with an optional trailing apostrophe for the
// inverse; the empty word is the single token "e".
//   a1 x3' a2 x3
//
// Polynomials: coefficient letters as above, interleaved with the
// variable token "X", optionally "X^<integer>" (negative exponents are a
// group-mode feature only).
//   a1 X^-1 a2 X
//
// Semigroup words: tokens "x<digits>" / "y<digits>", or the single token
// "0"; semigroup polynomials combine them with nonnegative powers of "X".
//
// Rendering is canonical; parse-then-render round-trips byte-identically
// on canonical input.

#ifndef ZARLAB_TEXT_HPP_
#define ZARLAB_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zarlab/word.hpp"
#include "zarlab/word_maps.hpp"
#include "zarlab/zero_monoid.hpp"

namespace zarlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t offset;
};

// Single spaces only; empty tokens (leading, trailing or doubled spaces)
// are syntax errors.
inline std::vector<Token> split_tokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ' ') {
      if (i == start) throw ParseError("empty token", start);
      tokens.push_back(Token{text.substr(start, i - start), start});
      start = i + 1;
    }
  }
  return tokens;
}

inline std::uint32_t parse_index(std::string_view digits, std::size_t offset) {
  if (digits.empty()) throw ParseError("missing generator index", offset);
  std::uint64_t value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("malformed generator index", offset);
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 1000000000ull) throw ParseError("generator index too large", offset);
  }
  if (value == 0) throw ParseError("generator index must be >= 1", offset);
  return static_cast<std::uint32_t>(value);
}

inline Letter parse_letter_token(const Token& tok) {
  std::string_view t = tok.text;
  if (t.empty() || (t[0] != 'a' && t[0] != 'x')) {
    throw ParseError("expected a letter token", tok.offset);
  }
  const LetterFamily family = t[0] == 'a' ? LetterFamily::A : LetterFamily::X;
  int sign = +1;
  if (t.back() == '\'') {
    sign = -1;
    t.remove_suffix(1);
  }
  return Letter{family, parse_index(t.substr(1), tok.offset), static_cast<std::int8_t>(sign)};
}

inline long long parse_exponent(std::string_view t, std::size_t offset) {
  // t is everything after "X^".
  if (t.empty()) throw ParseError("missing exponent", offset);
  bool negative = false;
  std::size_t i = 0;
  if (t[0] == '-' || t[0] == '+') {
    negative = t[0] == '-';
    i = 1;
  }
  if (i == t.size()) throw ParseError("missing exponent digits", offset);
  long long value = 0;
  for (; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') throw ParseError("malformed exponent", offset);
    value = value * 10 + (t[i] - '0');
    if (value > 1000000) throw ParseError("exponent too large", offset);
  }
  return negative ? -value : value;
}

inline SGenerator parse_sgenerator_token(const Token& tok) {
  std::string_view t = tok.text;
  if (t.empty() || (t[0] != 'x' && t[0] != 'y')) {
    throw ParseError("expected a semigroup generator token", tok.offset);
  }
  const SFamily family = t[0] == 'x' ? SFamily::x : SFamily::y;
  return SGenerator{family, parse_index(t.substr(1), tok.offset)};
}

}  // namespace detail

// ---------------------------------------------------------------- words

inline Word parse_word(std::string_view text) {
  const auto tokens = detail::split_tokens(text);
  if (tokens.size() == 1 && tokens[0].text == "e") return Word{};
  std::vector<Letter> raw;
  raw.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (tok.text == "e") {
      throw ParseError("'e' denotes the empty word and must stand alone", tok.offset);
    }
    raw.push_back(detail::parse_letter_token(tok));
  }
  return free_reduce(std::move(raw));
}

inline std::string render(const Letter& l) {
  std::string out(1, l.family == LetterFamily::A ? 'a' : 'x');
  out += std::to_string(l.index);
  if (l.sign < 0) out += '\'';
  return out;
}

inline std::string render(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += render(w[i]);
  }
  return out;
}

// ---------------------------------------------------------- polynomials

namespace detail {

struct RawPolynomial {
  std::vector<Word> coefficients;
  std::vector<long long> exponents;
};

inline RawPolynomial parse_polynomial_tokens(std::string_view text, bool allow_negative) {
  RawPolynomial out;
  std::vector<Letter> current;
  for (const Token& tok : split_tokens(text)) {
    if (tok.text[0] == 'X') {
      long long e = 1;
      if (tok.text.size() > 1) {
        if (tok.text[1] != '^') throw ParseError("malformed variable token", tok.offset);
        e = parse_exponent(tok.text.substr(2), tok.offset);
      }
      if (e < 0 && !allow_negative) {
        throw ParseError("negative exponent not allowed in semigroup mode", tok.offset);
      }
      out.coefficients.push_back(free_reduce(std::move(current)));
      current.clear();
      out.exponents.push_back(e);
    } else if (tok.text == "e") {
      // explicit empty coefficient; contributes nothing
    } else {
      current.push_back(parse_letter_token(tok));
    }
  }
  out.coefficients.push_back(free_reduce(std::move(current)));
  return out;
}

}  // namespace detail

inline GroupPolynomial parse_group_polynomial(std::string_view text) {
  const auto raw = detail::parse_polynomial_tokens(text, /*allow_negative=*/true);
  return GroupPolynomial::make(raw.coefficients, raw.exponents);
}

inline SemigroupPolynomial parse_semigroup_polynomial(std::string_view text) {
  const auto raw = detail::parse_polynomial_tokens(text, /*allow_negative=*/false);
  return SemigroupPolynomial::make(raw.coefficients, raw.exponents);
}

inline std::string render(const GroupPolynomial& p) {
  if (p.is_constant()) return render(p.coefficients()[0]);
  std::string out;
  const auto append = [&out](const std::string& token) {
    if (!out.empty()) out += ' ';
    out += token;
  };
  for (std::size_t i = 0; i <= p.exponents().size(); ++i) {
    const Word& g = p.coefficients()[i];
    for (std::size_t t = 0; t < g.size(); ++t) append(render(g[t]));
    if (i < p.exponents().size()) {
      const long long e = p.exponents()[i];
      append(e == 1 ? "X" : "X^" + std::to_string(e));
    }
  }
  return out;
}

inline std::string render(const SemigroupPolynomial& p) { return render(p.polynomial()); }

// ------------------------------------------------------ semigroup words

inline SWord parse_sword(std::string_view text) {
  const auto tokens = detail::split_tokens(text);
  if (tokens.size() == 1 && tokens[0].text == "0") return SWord::zero();
  std::vector<SGenerator> raw;
  raw.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (tok.text == "0") {
      throw ParseError("'0' denotes zero and must stand alone", tok.offset);
    }
    raw.push_back(detail::parse_sgenerator_token(tok));
  }
  return SWord::normalize(std::move(raw));
}

inline std::string render(const SGenerator& g) {
  return std::string(1, g.family == SFamily::x ? 'x' : 'y') + std::to_string(g.index);
}

inline std::string render(const SWord& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += render(w.generators()[i]);
  }
  return out;
}

inline SPolynomial parse_spolynomial(std::string_view text) {
  std::vector<SPolyItem> items;
  std::vector<SGenerator> current;
  const auto flush = [&]() {
    if (!current.empty()) {
      items.emplace_back(SWord::normalize(std::move(current)));
      current.clear();
    }
  };
  for (const detail::Token& tok : detail::split_tokens(text)) {
    if (tok.text[0] == 'X') {
      long long e = 1;
      if (tok.text.size() > 1) {
        if (tok.text[1] != '^') throw ParseError("malformed variable token", tok.offset);
        e = detail::parse_exponent(tok.text.substr(2), tok.offset);
        if (e < 0) {
          throw ParseError("negative exponent not allowed in semigroup mode", tok.offset);
        }
      }
      flush();
      items.emplace_back(e);
    } else if (tok.text == "0") {
      flush();
      items.emplace_back(SWord::zero());
    } else {
      current.push_back(detail::parse_sgenerator_token(tok));
    }
  }
  flush();
  return SPolynomial::make(items);
}

inline std::string render(const SPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto append = [&out](const std::string& token) {
    if (!out.empty()) out += ' ';
    out += token;
  };
  for (const SPolyItem& item : p.items()) {
    if (std::holds_alternative<SWord>(item)) {
      const SWord& w = std::get<SWord>(item);
      for (const SGenerator& g : w.generators()) append(render(g));
    } else {
      const long long e = std::get<long long>(item);
      append(e == 1 ? "X" : "X^" + std::to_string(e));
    }
  }
  return out;
}

}  // namespace zarlab

#endif  // ZARLAB_TEXT_HPP_
