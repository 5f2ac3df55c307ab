// Deterministic randomness for the verification suites and tests.
//
// Trial-level engines are seeded with (suite seed XOR trial number), so a
// trial's outcome does not depend on execution order. Bounded draws use
// rejection sampling on the raw 64-bit output; mt19937_64 is fully
// specified by the standard, so runs reproduce across platforms.

#ifndef ZARLAB_RNG_HPP_
#define ZARLAB_RNG_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "zarlab/presentation.hpp"
#include "zarlab/word.hpp"
#include "zarlab/word_maps.hpp"
#include "zarlab/zero_monoid.hpp"

namespace zarlab {

using RandomEngine = std::mt19937_64;

inline RandomEngine trial_engine(std::uint64_t seed, std::uint64_t trial) {
  return RandomEngine(seed ^ trial);
}

inline std::uint64_t uniform_below(RandomEngine& g, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v = g();
  while (v >= limit) v = g();
  return v % n;
}

/// Uniform in [lo, hi], inclusive.
inline long long uniform_int(RandomEngine& g, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  uniform_below(g, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Both signs of a_1..a_{k+1} plus both signs of the listed x-indices.
inline std::vector<Letter> gamma_alphabet(PresentationParams params,
                                          const std::vector<std::uint32_t>& x_indices) {
  std::vector<Letter> pool;
  for (std::uint32_t j = 1; j <= params.alphabet_bound(); ++j) {
    pool.push_back(Letter::a(j, +1));
    pool.push_back(Letter::a(j, -1));
  }
  for (std::uint32_t i : x_indices) {
    pool.push_back(Letter::x(i, +1));
    pool.push_back(Letter::x(i, -1));
  }
  return pool;
}

/// Uniform over the pool at each position, rejecting immediate
/// cancellations, so the result is reduced with exactly `length` letters.
/// The pool must contain two letters that are not mutually inverse.
inline Word random_reduced_word(RandomEngine& g, const std::vector<Letter>& pool,
                                std::size_t length) {
  std::vector<Letter> out;
  out.reserve(length);
  while (out.size() < length) {
    const Letter l = pool[uniform_below(g, pool.size())];
    if (!out.empty() && out.back() == inverse(l)) continue;
    out.push_back(l);
  }
  return free_reduce(std::move(out));
}

inline Word random_cyclically_reduced_word(RandomEngine& g,
                                           const std::vector<Letter>& pool,
                                           std::size_t length) {
  for (;;) {
    Word w = random_reduced_word(g, pool, length);
    if (w.cyclically_reduced()) return w;
  }
}

/// Degree uniform in [1,4], exponents uniform in [1,3], coefficient
/// lengths uniform in [0,6] over a_1..a_{k+1} and x_1..x_{max_x_index}.
inline SemigroupPolynomial random_semigroup_polynomial(RandomEngine& g,
                                                       PresentationParams params,
                                                       std::uint32_t max_x_index) {
  std::vector<std::uint32_t> xs;
  for (std::uint32_t i = 1; i <= max_x_index; ++i) xs.push_back(i);
  const std::vector<Letter> pool = gamma_alphabet(params, xs);
  const std::size_t degree = static_cast<std::size_t>(uniform_int(g, 1, 4));
  std::vector<Word> coefficients;
  std::vector<long long> exponents;
  for (std::size_t i = 0; i <= degree; ++i) {
    coefficients.push_back(
        random_reduced_word(g, pool, static_cast<std::size_t>(uniform_int(g, 0, 6))));
    if (i < degree) exponents.push_back(uniform_int(g, 1, 3));
  }
  return SemigroupPolynomial::make(coefficients, exponents);
}

/// Nonzero semigroup word of the given length bound over indices
/// 1..max_index; adjacent x_i y_i pairs are rejected during generation.
inline SWord random_sword(RandomEngine& g, std::uint32_t max_index, std::size_t max_len) {
  const std::size_t length = static_cast<std::size_t>(uniform_int(g, 1, static_cast<long long>(max_len)));
  std::vector<SGenerator> out;
  out.reserve(length);
  while (out.size() < length) {
    const SGenerator cand{uniform_below(g, 2) == 0 ? SFamily::x : SFamily::y,
                          static_cast<std::uint32_t>(uniform_int(g, 1, max_index))};
    if (!out.empty() && out.back().family == SFamily::x &&
        cand.family == SFamily::y && out.back().index == cand.index) {
      continue;
    }
    out.push_back(cand);
  }
  return SWord::normalize(std::move(out));
}

/// Degree uniform in [0,3]; leading/trailing coefficients present with
/// probability 1/2; coefficients are nonzero words of length <= 4.
inline SPolynomial random_spolynomial(RandomEngine& g, std::uint32_t max_index) {
  const std::size_t degree = static_cast<std::size_t>(uniform_int(g, 0, 3));
  std::vector<SPolyItem> items;
  if (degree == 0) {
    items.emplace_back(random_sword(g, max_index, 4));
    return SPolynomial::make(items);
  }
  if (uniform_below(g, 2) == 0) items.emplace_back(random_sword(g, max_index, 4));
  for (std::size_t i = 0; i < degree; ++i) {
    items.emplace_back(uniform_int(g, 1, 3));
    const bool last = i + 1 == degree;
    if (!last || uniform_below(g, 2) == 0) {
      items.emplace_back(random_sword(g, max_index, 4));
    }
  }
  return SPolynomial::make(items);
}

}  // namespace zarlab

#endif  // ZARLAB_RNG_HPP_
