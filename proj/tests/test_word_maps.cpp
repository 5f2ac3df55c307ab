#include <catch2/catch_amalgamated.hpp>

#include "zarlab/rng.hpp"
#include "zarlab/text.hpp"
#include "zarlab/word_maps.hpp"

using namespace zarlab;

namespace {

constexpr PresentationParams kParams{8};

// Oracle: evaluate a raw (unnormalized) coefficient/exponent stream
// directly, without building a polynomial.
Word raw_eval(const std::vector<Word>& coefficients, const std::vector<long long>& exponents,
              const Word& x) {
  Word acc = coefficients[0];
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    acc = concat(acc, word_power(x, exponents[i]));
    acc = concat(acc, coefficients[i + 1]);
  }
  return acc;
}

GroupPolynomial random_raw_polynomial(RandomEngine& g, std::vector<Word>* coefficients,
                                      std::vector<long long>* exponents) {
  const std::vector<Letter> pool = gamma_alphabet(kParams, {1, 2, 3});
  const std::size_t degree = static_cast<std::size_t>(uniform_int(g, 0, 4));
  coefficients->clear();
  exponents->clear();
  for (std::size_t i = 0; i <= degree; ++i) {
    coefficients->push_back(
        random_reduced_word(g, pool, static_cast<std::size_t>(uniform_int(g, 0, 4))));
    if (i < degree) exponents->push_back(uniform_int(g, -2, 2));  // zeros included
  }
  return GroupPolynomial::make(*coefficients, *exponents);
}

}  // namespace

TEST_CASE("normalization") {
  // x^0 collapses
  const GroupPolynomial constant =
      GroupPolynomial::make({parse_word("a1"), parse_word("a2")}, {0});
  CHECK(constant.is_constant());
  CHECK(render(constant) == "a1 a2");

  // exponents merge across an empty interior coefficient
  const GroupPolynomial merged =
      GroupPolynomial::make({parse_word("a1"), Word{}, parse_word("a2")}, {1, 1});
  CHECK(merged.exponents() == std::vector<long long>{2});

  // already normal input is unchanged
  const GroupPolynomial p = parse_group_polynomial("a1 X^-1 a2 X");
  CHECK(GroupPolynomial::make(p.coefficients(), p.exponents()) == p);

  // cancellation inside merged coefficients can cascade
  const GroupPolynomial collapsed = GroupPolynomial::make(
      {parse_word("a1"), parse_word("a2"), parse_word("a2'"), parse_word("a3")},
      {1, 0, -1});
  CHECK(collapsed.is_constant());
  CHECK(render(collapsed) == "a1 a3");

  CHECK_THROWS_AS(GroupPolynomial::make({Word{}}, {1}), std::invalid_argument);
}

TEST_CASE("normalize preserves evaluation") {
  RandomEngine g(5150);
  const std::vector<Letter> pool = gamma_alphabet(kParams, {1, 2, 3});
  for (int t = 0; t < 100; ++t) {
    std::vector<Word> coefficients;
    std::vector<long long> exponents;
    const GroupPolynomial p = random_raw_polynomial(g, &coefficients, &exponents);
    const Word x = random_reduced_word(g, pool, static_cast<std::size_t>(uniform_int(g, 0, 5)));
    CHECK(eval_group(p, x) == raw_eval(coefficients, exponents, x));
  }
}

TEST_CASE("evaluation examples") {
  const GroupPolynomial identity = parse_group_polynomial("X");
  CHECK(eval_group(identity, parse_word("a1")) == parse_word("a1"));

  const GroupPolynomial poly = relator_polynomial(kParams);
  CHECK(render(poly) == "a1 X^-1 a2 X a3 X^-1 a4 X a5 X^-1 a6 X a7 X^-1 a8 X");
  for (std::uint32_t i : {1u, 2u, 7u}) {
    CHECK(eval_group(poly, parse_word("x" + std::to_string(i))) == relator(kParams, i));
  }
  CHECK(eval_group(poly, parse_word("a9")) ==
        parse_word("a1 a9' a2 a9 a3 a9' a4 a9 a5 a9' a6 a9 a7 a9' a8 a9"));
}

TEST_CASE("evaluation is multiplicative") {
  RandomEngine g(86);
  std::vector<Word> cs;
  std::vector<long long> es;
  const std::vector<Letter> pool = gamma_alphabet(kParams, {1, 2});
  for (int t = 0; t < 500; ++t) {
    const GroupPolynomial p = random_raw_polynomial(g, &cs, &es);
    const GroupPolynomial q = random_raw_polynomial(g, &cs, &es);
    const Word x = random_reduced_word(g, pool, static_cast<std::size_t>(uniform_int(g, 0, 4)));
    CHECK(eval_group(mul(p, q), x) == concat(eval_group(p, x), eval_group(q, x)));
  }
}

TEST_CASE("constants ignore the point") {
  const GroupPolynomial c = parse_group_polynomial("a1 x2 a3'");
  CHECK(c.is_constant());
  CHECK(eval_group(c, parse_word("x9")) == eval_group(c, parse_word("a1 a2")));
}

TEST_CASE("coefficient indices and fresh index") {
  const GroupPolynomial p =
      GroupPolynomial::make({parse_word("a1 x3"), parse_word("x7'")}, {2});
  CHECK(coefficient_indices(p) == std::set<std::uint32_t>{3, 7});
  CHECK(coefficient_indices(parse_group_polynomial("a1 X a2")).empty());
  CHECK(coefficient_indices(parse_group_polynomial("x2 x5")) == std::set<std::uint32_t>{2, 5});

  CHECK(fresh_index(std::vector<GroupPolynomial>{p}) == 8);
  CHECK(fresh_index(std::vector<GroupPolynomial>{parse_group_polynomial("a1 X")}) == 1);
  CHECK(fresh_index(std::vector<GroupPolynomial>{parse_group_polynomial("x1 X")}) == 2);
  CHECK(fresh_index(std::vector<GroupPolynomial>{}) == 1);
}

TEST_CASE("group membership predicate") {
  const GroupPolynomial poly = relator_polynomial(kParams);
  CHECK(in_subbasic_closed_group(poly, parse_word("x3"), kParams));
  CHECK_FALSE(in_subbasic_closed_group(poly, parse_word("a9"), kParams));
  CHECK(in_subbasic_closed_group(parse_group_polynomial("X"), Word{}, kParams));
}

TEST_CASE("semigroup polynomials reject negative exponents") {
  CHECK_THROWS_AS(SemigroupPolynomial::make({Word{}, Word{}}, {-1}), std::invalid_argument);
  const SemigroupPolynomial p = SemigroupPolynomial::make(
      {parse_word("a1"), Word{}, parse_word("a2")}, {1, 0});
  for (long long e : p.polynomial().exponents()) CHECK(e >= 1);
}

TEST_CASE("semigroup membership predicate") {
  const SemigroupPolynomial p = parse_semigroup_polynomial("X a1");
  const SemigroupPolynomial q = parse_semigroup_polynomial("a1 X");
  CHECK(in_subbasic_closed_semigroup(p, p, parse_word("x4"), kParams));
  CHECK(in_subbasic_closed_semigroup(p, q, Word{}, kParams));
  CHECK_FALSE(in_subbasic_closed_semigroup(parse_semigroup_polynomial("X"),
                                           parse_semigroup_polynomial("a1"),
                                           parse_word("x5"), kParams));
}

TEST_CASE("a fresh generator escapes a proper equalizer set") {
  const SemigroupPolynomial p = parse_semigroup_polynomial("X a1 X");
  const SemigroupPolynomial q = parse_semigroup_polynomial("a2 X^2");
  const std::uint32_t m = fresh_index(std::vector<SemigroupPolynomial>{p, q});
  CHECK(m == 1);
  CHECK_FALSE(in_subbasic_closed_semigroup(p, q, free_reduce({Letter::x(m)}), kParams));
}

TEST_CASE("junction cancellation can eliminate the fresh letter") {
  // the whole x-part of the difference word cancels at the junction; the
  // predicate still decides correctly on the leftover constant part
  const SemigroupPolynomial p = parse_semigroup_polynomial("a1 X");
  const SemigroupPolynomial q = parse_semigroup_polynomial("a2 X");
  const std::uint32_t m = fresh_index(std::vector<SemigroupPolynomial>{p, q});
  CHECK(m == 1);
  const Word point = free_reduce({Letter::x(m)});
  const Word difference = concat(eval_semigroup(p, point), invert(eval_semigroup(q, point)));
  CHECK_FALSE(difference.empty());
  CHECK(relevant_indices(difference).empty());
  CHECK_FALSE(in_subbasic_closed_semigroup(p, q, point, kParams));

  const SemigroupPolynomial q2 = parse_semigroup_polynomial("a1 X");
  CHECK(in_subbasic_closed_semigroup(p, q2, point, kParams));
  // agreement at one fresh index extends to any other point
  CHECK(in_subbasic_closed_semigroup(p, q2, parse_word("a3 x2"), kParams));
}

TEST_CASE("fresh evaluation splits into polarized halves") {
  RandomEngine g(420);
  for (int t = 0; t < 200; ++t) {
    const SemigroupPolynomial p = random_semigroup_polynomial(g, kParams, 5);
    const SemigroupPolynomial q = random_semigroup_polynomial(g, kParams, 5);
    const std::uint32_t m = fresh_index(std::vector<SemigroupPolynomial>{p, q});
    const Word point = free_reduce({Letter::x(m)});
    const Word positive_half = eval_semigroup(p, point);
    const Word negative_half = invert(eval_semigroup(q, point));
    CHECK(polarity(positive_half, m).positive);
    CHECK(polarity(negative_half, m).negative);

    // after reduction the split persists: cancellation happens only at the
    // junction, so some prefix of the positive half meets some suffix of
    // the negative half
    const Word v = concat(positive_half, negative_half);
    const std::size_t cancelled =
        (positive_half.size() + negative_half.size() - v.size()) / 2;
    const std::size_t split = positive_half.size() - cancelled;
    CHECK(polarity(word_slice(v, 0, split), m).positive);
    CHECK(polarity(word_slice(v, split, v.size() - split), m).negative);
  }
}
