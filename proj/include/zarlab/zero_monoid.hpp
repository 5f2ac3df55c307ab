// The monomial semigroup with zero generated by x_1, x_2, ... and
// y_1, y_2, ... subject to x_i y_i = 0. The only rewrite collapses a word
// to zero, so nonzero elements are plain generator strings and equality
// is syntactic. There is no identity element.

#ifndef ZARLAB_ZERO_MONOID_HPP_
#define ZARLAB_ZERO_MONOID_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace zarlab {

enum class SFamily : std::uint8_t { x, y };

struct SGenerator {
  SFamily family;
  std::uint32_t index;  // 1-based

  static constexpr SGenerator x(std::uint32_t i) { return {SFamily::x, i}; }
  static constexpr SGenerator y(std::uint32_t i) { return {SFamily::y, i}; }

  friend constexpr bool operator==(const SGenerator&, const SGenerator&) = default;
};

/// Either zero or a nonempty generator string containing no factor
/// x_i y_i (normal form).
class SWord {
 public:
  static SWord zero() { return SWord(true, {}); }

  /// Zero iff some factor x_i y_i occurs; otherwise the sequence as given.
  static SWord normalize(std::vector<SGenerator> raw) {
    if (raw.empty()) {
      throw std::invalid_argument("the semigroup has no identity: empty word rejected");
    }
    for (std::size_t t = 0; t + 1 < raw.size(); ++t) {
      if (raw[t].family == SFamily::x && raw[t + 1].family == SFamily::y &&
          raw[t].index == raw[t + 1].index) {
        return zero();
      }
    }
    return SWord(false, std::move(raw));
  }

  bool is_zero() const { return zero_; }
  const std::vector<SGenerator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  friend bool operator==(const SWord&, const SWord&) = default;

 private:
  SWord(bool z, std::vector<SGenerator> g) : zero_(z), gens_(std::move(g)) {}
  bool zero_ = false;
  std::vector<SGenerator> gens_;
};

/// Concatenation with the zero rewrite; zero is absorbing on both sides.
inline SWord s_mul(const SWord& u, const SWord& v) {
  if (u.is_zero() || v.is_zero()) return SWord::zero();
  std::vector<SGenerator> raw = u.generators();
  raw.insert(raw.end(), v.generators().begin(), v.generators().end());
  return SWord::normalize(std::move(raw));
}

/// Normal forms are canonical, so equality is identity.
inline bool s_equal(const SWord& u, const SWord& v) { return u == v; }

inline bool contains_generator(const SWord& w, SGenerator g) {
  for (const SGenerator& t : w.generators()) {
    if (t == g) return true;
  }
  return false;
}

/// Projection to the quotient killing y_i: words containing y_i go to zero.
inline SWord project_generator(const SWord& w, std::uint32_t y_index) {
  if (w.is_zero() || contains_generator(w, SGenerator::y(y_index))) return SWord::zero();
  return w;
}

inline std::uint32_t max_generator_index(const SWord& w) {
  std::uint32_t out = 0;
  for (const SGenerator& g : w.generators()) out = std::max(out, g.index);
  return out;
}

using SPolyItem = std::variant<SWord, long long>;

/// Word map over the semigroup: alternating coefficients and positive
/// variable powers; the variable may begin or end the expression, since
/// there is no identity coefficient. A zero coefficient anywhere collapses
/// the whole polynomial to the constant zero.
class SPolynomial {
 public:
  static SPolynomial zero_polynomial() {
    SPolynomial p;
    p.zero_ = true;
    return p;
  }

  static SPolynomial constant(const SWord& w) { return make({SPolyItem{w}}); }

  /// Normalizing builder over a token stream of coefficients and powers.
  static SPolynomial make(const std::vector<SPolyItem>& items) {
    if (items.empty()) throw std::invalid_argument("empty polynomial");
    bool hit_zero = false;
    std::optional<SWord> pending;
    std::optional<SWord> lead;
    bool any_exponent = false;
    std::vector<long long> exps;
    std::vector<std::optional<SWord>> after;
    for (const SPolyItem& item : items) {
      if (std::holds_alternative<SWord>(item)) {
        const SWord& s = std::get<SWord>(item);
        pending = pending ? s_mul(*pending, s) : s;
        if (pending->is_zero()) hit_zero = true;
      } else {
        const long long e = std::get<long long>(item);
        if (e < 0) throw std::invalid_argument("semigroup polynomial exponents must be >= 0");
        if (e == 0) continue;
        if (!any_exponent) {
          lead = pending;
          any_exponent = true;
          exps.push_back(e);
          after.push_back(std::nullopt);
        } else if (pending) {
          after.back() = pending;
          exps.push_back(e);
          after.push_back(std::nullopt);
        } else {
          exps.back() += e;  // adjacent powers merge
        }
        pending.reset();
      }
    }
    if (hit_zero) return zero_polynomial();

    SPolynomial p;
    if (!any_exponent) {
      if (!pending) throw std::invalid_argument("empty polynomial");
      p.coefficients_.push_back(*pending);
      p.has_lead_ = p.has_trail_ = true;
      return p;
    }
    after.back() = pending;
    p.exponents_ = std::move(exps);
    p.has_lead_ = lead.has_value();
    if (lead) p.coefficients_.push_back(*lead);
    for (std::size_t i = 0; i + 1 < after.size(); ++i) p.coefficients_.push_back(*after[i]);
    p.has_trail_ = after.back().has_value();
    if (after.back()) p.coefficients_.push_back(*after.back());
    return p;
  }

  bool is_zero() const { return zero_; }
  bool is_constant() const { return !zero_ && exponents_.empty(); }
  const std::vector<long long>& exponents() const { return exponents_; }
  const std::vector<SWord>& coefficients() const { return coefficients_; }
  bool has_leading_coefficient() const { return has_lead_; }
  bool has_trailing_coefficient() const { return has_trail_; }

  /// Canonical token stream (lead? e_1 c_1 ... e_n trail?).
  std::vector<SPolyItem> items() const {
    std::vector<SPolyItem> out;
    if (zero_) {
      out.emplace_back(SWord::zero());
      return out;
    }
    std::size_t c = 0;
    if (exponents_.empty()) {
      out.emplace_back(coefficients_[0]);
      return out;
    }
    if (has_lead_) out.emplace_back(coefficients_[c++]);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      out.emplace_back(exponents_[i]);
      const bool last = i + 1 == exponents_.size();
      if (!last || has_trail_) out.emplace_back(coefficients_[c++]);
    }
    return out;
  }

  friend bool operator==(const SPolynomial&, const SPolynomial&) = default;

 private:
  bool zero_ = false;
  std::vector<SWord> coefficients_;  // all nonzero
  std::vector<long long> exponents_;  // all >= 1
  bool has_lead_ = false;
  bool has_trail_ = false;
};

inline SWord s_power(const SWord& s, long long e) {
  if (s.is_zero()) return SWord::zero();
  std::vector<SGenerator> raw;
  raw.reserve(s.size() * static_cast<std::size_t>(e));
  for (long long t = 0; t < e; ++t) {
    raw.insert(raw.end(), s.generators().begin(), s.generators().end());
  }
  return SWord::normalize(std::move(raw));
}

/// Substitute the point and fold with s_mul; zero propagates.
inline SWord eval_s(const SPolynomial& p, const SWord& point) {
  if (p.is_zero()) return SWord::zero();
  std::optional<SWord> acc;
  for (const SPolyItem& item : p.items()) {
    const SWord value = std::holds_alternative<SWord>(item)
                            ? std::get<SWord>(item)
                            : s_power(point, std::get<long long>(item));
    acc = acc ? s_mul(*acc, value) : value;
  }
  return *acc;
}

/// Quotient projection killing y_i, applied coefficient-wise. Evaluation
/// of the result at a projected point agrees with projecting the original
/// evaluation.
inline SPolynomial kill_generator(const SPolynomial& p, std::uint32_t index) {
  if (p.is_zero()) return p;
  for (const SWord& c : p.coefficients()) {
    if (contains_generator(c, SGenerator::y(index))) {
      return SPolynomial::zero_polynomial();
    }
  }
  return p;
}

inline std::uint32_t max_coefficient_index(const SPolynomial& p) {
  std::uint32_t out = 0;
  for (const SWord& c : p.coefficients()) out = std::max(out, max_generator_index(c));
  return out;
}

}  // namespace zarlab

#endif  // ZARLAB_ZERO_MONOID_HPP_
