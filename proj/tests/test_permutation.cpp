#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "census.hpp"
#include "invar/errors.hpp"
#include "invar/perm_group.hpp"
#include "invar/permutation.hpp"

using namespace invar;

namespace {

// Independent sign oracle: parity of the inversion count of the image.
int inversion_sign(const Permutation& p) {
  const auto img = p.image();
  int inversions = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> full_symmetric(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_image(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

} // namespace

TEST_CASE("parse_permutation cycle notation") {
  CHECK(parse_permutation("(1 2 3 4)", 4).image() == std::vector<int>{2, 3, 4, 1});
  CHECK(parse_permutation("", 3) == Permutation(3));
  CHECK(parse_permutation("  ( 1   2 ) ( 3 4 )  ", 4).image() == std::vector<int>{2, 1, 4, 3});
  CHECK(parse_permutation("(2)", 3) == Permutation(3)); // 1-cycle is a fixed point

  CHECK_THROWS_AS(parse_permutation("(1 2)(1 3)", 3), ParseError); // repeated label
  CHECK_THROWS_AS(parse_permutation("(1 5)", 4), ParseError);      // out of range
  CHECK_THROWS_AS(parse_permutation("(0 1)", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("1 2", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("()", 4), ParseError);
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(parse_permutation("(1 2 3 4)", 4)).lengths == std::vector<int>{4});
  CHECK(cycle_type(Permutation(4)).lengths == std::vector<int>{1, 1, 1, 1});
  CHECK(cycle_type(parse_permutation("(1 3)(2 4)", 4)).lengths == std::vector<int>{2, 2});
}

TEST_CASE("sign matches the inversion-count oracle on all of S4") {
  CHECK(sign(parse_permutation("(1 2 3 4)", 4)) == -1);
  CHECK(sign(Permutation(4)) == 1);
  CHECK(sign(parse_permutation("(1 3)(2 4)", 4)) == 1);
  for (const auto& p : full_symmetric(4)) CHECK(sign(p) == inversion_sign(p));
}

TEST_CASE("sign is multiplicative") {
  const auto s4 = full_symmetric(4);
  for (const auto& p : s4)
    for (const auto& q : s4) CHECK(sign(compose(p, q)) == sign(p) * sign(q));
}

TEST_CASE("rank_id_minus") {
  CHECK(rank_id_minus(parse_permutation("(1 2)", 4)) == 1);
  CHECK(rank_id_minus(Permutation(5)) == 0);
  CHECK(rank_id_minus(parse_permutation("(1 2 3 4)", 4)) == 3);
}

TEST_CASE("pseudoreflection detection agrees with rank and cycle type over S4") {
  CHECK(is_pseudoreflection(parse_permutation("(1 2)", 4)));
  CHECK_FALSE(is_pseudoreflection(parse_permutation("(1 3)(2 4)", 4)));
  CHECK_FALSE(is_pseudoreflection(Permutation(4)));

  int pseudoreflections = 0;
  for (const auto& p : full_symmetric(4)) {
    const auto t = cycle_type(p);
    const bool single_swap = t.cycle_count() == 3 && t.lengths == std::vector<int>{1, 1, 2};
    CHECK(is_pseudoreflection(p) == (rank_id_minus(p) == 1));
    CHECK(is_pseudoreflection(p) == single_swap);
    if (is_pseudoreflection(p)) ++pseudoreflections;
  }
  CHECK(pseudoreflections == 6);
}

TEST_CASE("compose and inverse") {
  const auto p = parse_permutation("(1 2 3)", 3);
  CHECK(compose(p, p.inverse()) == Permutation(3));
  CHECK(compose(p.inverse(), p) == Permutation(3));
  // association spot check
  const auto q = parse_permutation("(1 2)", 3);
  const auto r = parse_permutation("(2 3)", 3);
  CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
}

TEST_CASE("generate_group closure") {
  const auto c4 = PermGroup::generate(4, {parse_permutation("(1 2 3 4)", 4)});
  CHECK(c4.order() == 4);

  const auto trivial = PermGroup::generate(3, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements().front() == Permutation(3));

  // closure must reach all 3! permutations
  const auto s3 = PermGroup::generate(3, {parse_permutation("(1 2)", 3),
                                          parse_permutation("(1 2 3)", 3)});
  CHECK(s3.order() == 6);
  CHECK(s3.elements() == full_symmetric(3));
}

TEST_CASE("generate_group errors") {
  CHECK_THROWS_AS(PermGroup::generate(3, {parse_permutation("(1 2)", 3),
                                          parse_permutation("(1 2)", 4)}),
                  MixedDegrees);
  CHECK_THROWS_AS(PermGroup::generate(4, {parse_permutation("(1 2)", 4),
                                          parse_permutation("(1 2 3 4)", 4)},
                                      5),
                  ClosureCapExceeded);
}

TEST_CASE("census group laws") {
  for (const auto& [name, g] : census::all()) {
    CAPTURE(name);

    // bijectivity of every element
    for (const auto& p : g.elements()) {
      auto img = p.image();
      std::sort(img.begin(), img.end());
      std::vector<int> expected(img.size());
      std::iota(expected.begin(), expected.end(), 1);
      CHECK(img == expected);
    }

    // identity present, elements sorted and unique
    CHECK(g.contains(Permutation(g.degree())));
    CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
    CHECK(std::adjacent_find(g.elements().begin(), g.elements().end()) == g.elements().end());

    // closure under composition and inverse
    for (const auto& p : g.elements()) {
      CHECK(g.contains(p.inverse()));
      for (const auto& q : g.elements()) CHECK(g.contains(compose(p, q)));
    }

    // every generator is an element
    for (const auto& gen : g.generators()) CHECK(g.contains(gen));

    // Lagrange: |G| divides n!
    std::size_t factorial = 1;
    for (int i = 2; i <= g.degree(); ++i) factorial *= static_cast<std::size_t>(i);
    CHECK(factorial % g.order() == 0);

    // sign homomorphism over the whole group
    for (const auto& p : g.elements())
      for (const auto& q : g.elements()) CHECK(sign(compose(p, q)) == sign(p) * sign(q));
  }
}

TEST_CASE("cycle string rendering") {
  CHECK(to_cycle_string(parse_permutation("(1 2 3 4)", 4)) == "(1 2 3 4)");
  CHECK(to_cycle_string(parse_permutation("(3 4)(1 2)", 4)) == "(1 2)(3 4)");
  CHECK(to_cycle_string(Permutation(4)) == "()");
}
