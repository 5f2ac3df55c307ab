// One-variable word maps over the group: free-product normal forms
// g_0 x^{i_1} g_1 ... x^{i_n} g_{n+1}, their evaluation, and the
// sub-basic Zariski membership predicates. Solution sets are never
// materialized; only pointwise membership is decided (via the solver).

#ifndef ZARLAB_WORD_MAPS_HPP_
#define ZARLAB_WORD_MAPS_HPP_

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "zarlab/dehn.hpp"
#include "zarlab/presentation.hpp"
#include "zarlab/word.hpp"

namespace zarlab {

/// Normal form: no zero exponents, and an interior empty coefficient
/// forces the surrounding exponents to merge. The leading and trailing
/// coefficients may be empty; a constant has no exponents at all.
class GroupPolynomial {
 public:
  GroupPolynomial() : coefficients_{Word{}} {}  // constant identity

  /// Normalizing constructor; coefficients.size() == exponents.size() + 1.
  /// Evaluation at every point is unchanged by normalization.
  static GroupPolynomial make(const std::vector<Word>& coefficients,
                              const std::vector<long long>& exponents) {
    if (coefficients.size() != exponents.size() + 1) {
      throw std::invalid_argument(
          "polynomial requires one more coefficient than exponents");
    }
    GroupPolynomial p;
    p.coefficients_.clear();
    p.coefficients_.push_back(coefficients[0]);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      p.push_exponent(exponents[i]);
      p.push_coefficient(coefficients[i + 1]);
    }
    return p;
  }

  const std::vector<Word>& coefficients() const { return coefficients_; }
  const std::vector<long long>& exponents() const { return exponents_; }
  bool is_constant() const { return exponents_.empty(); }

  friend bool operator==(const GroupPolynomial&, const GroupPolynomial&) = default;

 private:
  void push_coefficient(const Word& g) {
    coefficients_.back() = concat(coefficients_.back(), g);
  }
  void push_exponent(long long e) {
    if (e == 0) return;
    if (!exponents_.empty() && coefficients_.back().empty()) {
      exponents_.back() += e;
      if (exponents_.back() == 0) {  // powers cancelled; drop them and the
        exponents_.pop_back();       // empty coefficient in between
        coefficients_.pop_back();
      }
      return;
    }
    exponents_.push_back(e);
    coefficients_.push_back(Word{});
  }

  std::vector<Word> coefficients_;   // exponents_.size() + 1 entries
  std::vector<long long> exponents_;  // all nonzero

  friend GroupPolynomial mul(const GroupPolynomial&, const GroupPolynomial&);
};

/// Product in the free product: concatenate the token streams and
/// renormalize at the seam.
inline GroupPolynomial mul(const GroupPolynomial& p, const GroupPolynomial& q) {
  GroupPolynomial out = p;
  out.push_coefficient(q.coefficients_[0]);
  for (std::size_t i = 0; i < q.exponents_.size(); ++i) {
    out.push_exponent(q.exponents_[i]);
    out.push_coefficient(q.coefficients_[i + 1]);
  }
  return out;
}

inline Word word_power(const Word& x, long long e) {
  const Word base = e < 0 ? invert(x) : x;
  const long long reps = e < 0 ? -e : e;
  std::vector<Letter> raw;
  raw.reserve(base.size() * static_cast<std::size_t>(reps));
  for (long long t = 0; t < reps; ++t) {
    raw.insert(raw.end(), base.begin(), base.end());
  }
  return free_reduce(std::move(raw));
}

/// Substitute x and reduce.
inline Word eval_group(const GroupPolynomial& p, const Word& x) {
  Word acc = p.coefficients()[0];
  for (std::size_t i = 0; i < p.exponents().size(); ++i) {
    acc = concat(acc, word_power(x, p.exponents()[i]));
    acc = concat(acc, p.coefficients()[i + 1]);
  }
  return acc;
}

/// Union of the x-indices occurring in any coefficient.
inline std::set<std::uint32_t> coefficient_indices(const GroupPolynomial& p) {
  std::set<std::uint32_t> out;
  for (const Word& g : p.coefficients()) {
    for (const Letter& l : g) {
      if (l.family == LetterFamily::X) out.insert(l.index);
    }
  }
  return out;
}

/// Least x-index beyond every coefficient of every polynomial (1 if none).
inline std::uint32_t fresh_index(const std::vector<GroupPolynomial>& ps) {
  std::uint32_t max_seen = 0;
  for (const GroupPolynomial& p : ps) {
    const auto indices = coefficient_indices(p);
    if (!indices.empty()) max_seen = std::max(max_seen, *indices.rbegin());
  }
  return max_seen + 1;
}

/// Membership in the sub-basic closed set {x | p(x) = 1}.
inline bool in_subbasic_closed_group(const GroupPolynomial& p, const Word& x,
                                     PresentationParams params) {
  return is_identity(eval_group(p, x), params).first;
}

/// The polynomial a_1 X^-1 a_2 X ... a_{k-1} X^-1 a_k X; its value at x_i
/// is exactly relator i, and at a_{k+1} a reduced word of length 2k.
inline GroupPolynomial relator_polynomial(PresentationParams params) {
  params.validate();
  std::vector<Word> coefficients;
  std::vector<long long> exponents;
  for (std::uint32_t j = 1; j <= static_cast<std::uint32_t>(params.k); ++j) {
    coefficients.push_back(free_reduce({Letter::a(j)}));
    exponents.push_back(j % 2 == 1 ? -1 : +1);
  }
  coefficients.push_back(Word{});
  return GroupPolynomial::make(coefficients, exponents);
}

/// Same shape with all exponents >= 1 after normalization (x^0 is accepted
/// on input and collapses away; negative exponents are rejected).
class SemigroupPolynomial {
 public:
  SemigroupPolynomial() = default;

  static SemigroupPolynomial make(const std::vector<Word>& coefficients,
                                  const std::vector<long long>& exponents) {
    for (long long e : exponents) {
      if (e < 0) {
        throw std::invalid_argument("semigroup polynomial exponents must be >= 0");
      }
    }
    SemigroupPolynomial p;
    p.poly_ = GroupPolynomial::make(coefficients, exponents);
    return p;
  }

  const GroupPolynomial& polynomial() const { return poly_; }
  bool is_constant() const { return poly_.is_constant(); }

  friend bool operator==(const SemigroupPolynomial&, const SemigroupPolynomial&) = default;

 private:
  GroupPolynomial poly_;
};

inline Word eval_semigroup(const SemigroupPolynomial& p, const Word& x) {
  return eval_group(p.polynomial(), x);
}

inline std::uint32_t fresh_index(const std::vector<SemigroupPolynomial>& ps) {
  std::vector<GroupPolynomial> inner;
  inner.reserve(ps.size());
  for (const SemigroupPolynomial& p : ps) inner.push_back(p.polynomial());
  return fresh_index(inner);
}

/// Membership in the sub-basic closed set {x | p(x) = q(x)}, decided in
/// the group via the solver.
inline bool in_subbasic_closed_semigroup(const SemigroupPolynomial& p,
                                         const SemigroupPolynomial& q,
                                         const Word& x, PresentationParams params) {
  return equal_in_group(eval_semigroup(p, x), eval_semigroup(q, x), params);
}

}  // namespace zarlab

#endif  // ZARLAB_WORD_MAPS_HPP_
