#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rover/errors.hpp"
#include "rover/expr.hpp"
#include "rover/groupoid.hpp"

using namespace rover;
using testutil::random_element;

namespace {

Forest caret() { return Forest::single(Tree::from_leaves({"0", "1"})); }

GroupoidElement sigma() {
  return make_element(caret(), Permutation({1, 0}), {Klein::E, Klein::E}, caret());
}

GroupoidElement dee() {
  return make_element(caret(), Permutation::identity(2), {Klein::E, Klein::B}, caret());
}

GroupoidElement gen(Generator k, int i, int n) { return from_generator(k, i, n); }

}  // namespace

TEST_CASE("make_element validates arities") {
  GroupoidElement one = identity_element(1);
  CHECK(is_identity(one));
  CHECK(one.domain_roots() == 1);
  CHECK(one.range_roots() == 1);

  CHECK(sigma().inner_size() == 2);
  CHECK(dee().labels[1] == Klein::B);

  CHECK(testutil::thrown_errc([] {
          make_element(split_at(1, 0), Permutation::identity(3), {Klein::E, Klein::E, Klein::E},
                       split_at(2, 0));
        }) == Errc::arity_mismatch);
  CHECK(testutil::thrown_errc([] {
          make_element(split_at(1, 0), Permutation::identity(2), {Klein::E}, split_at(1, 0));
        }) == Errc::arity_mismatch);
}

TEST_CASE("from_generator realizes the automaton states as tree pairs") {
  GroupoidElement b = gen(Generator::B, 0, 1);
  CHECK(b.f1 == Forest::single(Tree::from_leaves({"00", "01", "1"})));
  CHECK(b.f2 == b.f1);
  CHECK(b.alpha == Permutation({1, 0, 2}));
  CHECK(b.labels == std::vector<Klein>{Klein::E, Klein::E, Klein::C});

  GroupoidElement x12 = gen(Generator::X, 0, 2);
  CHECK(x12.f1 == split_at(2, 0));
  CHECK(x12.f2 == Forest::trivial(3));
  CHECK(x12.alpha.is_identity());

  GroupoidElement s22 = gen(Generator::Sigma, 1, 2);
  CHECK(s22.f1 == split_at(2, 1));
  CHECK(s22.f2 == split_at(2, 1));
  CHECK(s22.alpha == Permutation({0, 2, 1}));

  CHECK(equals(gen(Generator::Sigma, 0, 1), sigma()));
  CHECK(equals(gen(Generator::D, 0, 1), dee()));
  CHECK(testutil::thrown_errc([] { gen(Generator::B, 2, 2); }) == Errc::index_out_of_range);
}

TEST_CASE("multiply composes and contracts to Klein labels") {
  CHECK(is_identity(multiply(dee(), dee())));
  GroupoidElement b = gen(Generator::B, 0, 1);
  CHECK(is_identity(multiply(b, invert(b))));
  CHECK(is_identity(multiply(b, b)));

  GroupoidElement sd = multiply(sigma(), dee());
  GroupoidElement sd2 = multiply(sd, sd);
  CHECK_FALSE(is_identity(sd2));
  CHECK(is_identity(multiply(sd2, sd2)));

  CHECK(testutil::thrown_errc([&] { multiply(gen(Generator::X, 0, 2), sigma()); }) ==
        Errc::arity_mismatch);
}

TEST_CASE("invert swaps the two sides") {
  CHECK(is_identity(invert(identity_element(2))));
  CHECK(equals(invert(sigma()), sigma()));
  GroupoidElement x = gen(Generator::X, 0, 1);
  GroupoidElement xi = invert(x);
  CHECK(xi.domain_roots() == 2);
  CHECK(xi.range_roots() == 1);
  CHECK(xi.f1.is_trivial());
  CHECK(xi.f2 == caret());
  CHECK(is_identity(multiply(x, xi)));
  CHECK(is_identity(multiply(xi, x)));
}

TEST_CASE("is_identity is exact on decorated tree pairs") {
  CHECK(is_identity(identity_element(3)));
  CHECK_FALSE(is_identity(dee()));
  CHECK_FALSE(is_identity(sigma()));
  CHECK_FALSE(is_identity(gen(Generator::X, 0, 1)));  // arities differ

  // x b = s1 c2 x as maps C(1) -> C(2)
  GroupoidElement lhs = multiply(gen(Generator::X, 0, 1), gen(Generator::B, 0, 1));
  GroupoidElement rhs = multiply(gen(Generator::Sigma, 0, 2),
                                 multiply(gen(Generator::C, 1, 2), gen(Generator::X, 0, 1)));
  CHECK(is_identity(multiply(lhs, invert(rhs))));
}

TEST_CASE("equals decides the known relation suite") {
  GroupoidElement x = gen(Generator::X, 0, 1);
  CHECK(equals(multiply(x, gen(Generator::B, 0, 1)),
               multiply(gen(Generator::Sigma, 0, 2), multiply(gen(Generator::C, 1, 2), x))));
  CHECK(equals(multiply(x, gen(Generator::C, 0, 1)),
               multiply(gen(Generator::Sigma, 0, 2), multiply(gen(Generator::D, 1, 2), x))));
  CHECK(equals(multiply(x, gen(Generator::D, 0, 1)), multiply(gen(Generator::B, 1, 2), x)));
  // x1 s1 x = p(2 1 3) x1 x as maps C(1) -> C(3)
  GroupoidElement x1 = gen(Generator::X, 0, 2);
  GroupoidElement left = multiply(x1, multiply(gen(Generator::Sigma, 0, 2), x));
  GroupoidElement right = multiply(perm_element(Permutation({1, 0, 2})), multiply(x1, x));
  CHECK(equals(left, right));
  CHECK_FALSE(equals(gen(Generator::B, 0, 1), gen(Generator::C, 0, 1)));
}

TEST_CASE("evaluate follows a point through the diagram") {
  EvalResult r = evaluate(sigma(), 0, "0110");
  CHECK(r.root == 0);
  CHECK(r.bits == "1110");
  CHECK(r.residual == GrigWord());

  EvalResult rd = evaluate(dee(), 0, "10");
  CHECK(rd.root == 0);
  CHECK(rd.bits == "10");
  CHECK(word_reduce(rd.residual) == GrigWord("s"));

  EvalResult rx = evaluate(gen(Generator::X, 0, 1), 0, "01");
  CHECK(rx.root == 0);
  CHECK(rx.bits == "1");
  CHECK(rx.residual == GrigWord());

  CHECK(testutil::thrown_errc([] { evaluate(gen(Generator::B, 0, 1), 0, "0"); }) ==
        Errc::input_too_shallow);
}

TEST_CASE("reduce cancels matched carets") {
  GroupoidElement split_pair =
      make_element(caret(), Permutation::identity(2), {Klein::E, Klein::E}, caret());
  CHECK(reduce(split_pair) == identity_element(1));

  GroupoidElement folded = reduce(make_element(caret(), Permutation::identity(2),
                                               {Klein::E, Klein::B}, caret()));
  CHECK(folded.f1.is_trivial());
  CHECK(folded.f2.is_trivial());
  CHECK(folded.labels == std::vector<Klein>{Klein::D});
  CHECK(reduce(folded) == folded);
}

TEST_CASE("reduce preserves the map") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    GroupoidElement g = random_element(rng, 1, 4);
    CHECK(equals(reduce(g), g));
  }
}

TEST_CASE("groupoid laws hold on random elements") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 30; ++i) {
    GroupoidElement h = random_element(rng, 1, 3);
    GroupoidElement g = random_element(rng, h.range_roots(), 3);
    GroupoidElement f = random_element(rng, g.range_roots(), 3);
    CHECK(equals(multiply(multiply(f, g), h), multiply(f, multiply(g, h))));
    CHECK(equals(multiply(identity_element(g.range_roots()), g), g));
    CHECK(equals(multiply(g, identity_element(g.domain_roots())), g));
    CHECK(is_identity(multiply(g, invert(g))));
    CHECK(is_identity(multiply(invert(g), g)));
  }
}

TEST_CASE("evaluate respects composition") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    GroupoidElement h = random_element(rng, 1, 4);
    GroupoidElement g = random_element(rng, h.range_roots(), 4);
    GroupoidElement gh = multiply(g, h);
    int root = static_cast<int>(rng() % static_cast<uint64_t>(h.domain_roots()));
    std::string u = testutil::random_bits(rng, 20);
    EvalResult inner = evaluate(h, root, u);
    EvalResult outer = evaluate(g, inner.root, inner.bits);
    EvalResult direct = evaluate(gh, root, u);
    CHECK(direct.root == outer.root);
    CHECK(direct.bits == outer.bits);
    GrigWord expect = outer.residual.concat(inner.residual);
    CHECK(word_is_identity(direct.residual.concat(expect.inverse())));
  }
}

TEST_CASE("identity elements act as the identity map") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 20; ++i) {
    GroupoidElement g = random_element(rng, 1, 4);
    GroupoidElement e = multiply(g, invert(g));
    REQUIRE(is_identity(e));
    for (int t = 0; t < 5; ++t) {
      int root = static_cast<int>(rng() % static_cast<uint64_t>(e.domain_roots()));
      std::string u = testutil::random_bits(rng, 12);
      EvalResult r = evaluate(e, root, u);
      CHECK(r.root == root);
      CHECK(r.bits == u);
      CHECK(word_is_identity(r.residual));
    }
  }
}

TEST_CASE("full_image consumes the input") {
  auto [root, bits] = full_image(gen(Generator::X, 0, 1), 0, "01");
  CHECK(root == 0);
  CHECK(bits == "1");
  auto [r2, b2] = full_image(dee(), 0, "10");
  CHECK(r2 == 0);
  CHECK(b2 == "10");
}

TEST_CASE("direct_sum stacks elements side by side") {
  GroupoidElement s = direct_sum(sigma(), identity_element(1));
  CHECK(s.domain_roots() == 2);
  CHECK(equals(s, gen(Generator::Sigma, 0, 2)));
  GroupoidElement t = direct_sum(identity_element(1), sigma());
  CHECK(equals(t, gen(Generator::Sigma, 1, 2)));
}

TEST_CASE("parse_expression folds factors rightmost first") {
  CHECK(is_identity(parse_expression("b b")));
  CHECK(equals(parse_expression("x1 b1"), parse_expression("s1 c2 x1")));
  CHECK(equals(parse_expression("b"), gen(Generator::B, 0, 1)));
  GroupoidElement p = parse_expression("p(2 1 3)");
  CHECK(p.alpha == Permutation({1, 0, 2}));
  CHECK(is_identity(parse_expression("inv(x1) x1")));
  CHECK(parse_expression("x1 x1").range_roots() == 3);  // second x1 realized at arity 2

  CHECK(testutil::thrown_errc([] { parse_expression(""); }) == Errc::parse_error);
  CHECK(testutil::thrown_errc([] { parse_expression("q1"); }) == Errc::parse_error);
  CHECK(testutil::thrown_errc([] { parse_expression("x0"); }) == Errc::parse_error);
  CHECK(testutil::thrown_errc([] { parse_expression("b3 x1"); }) == Errc::arity_mismatch);
  CHECK(testutil::thrown_errc([] { parse_expression("p(1 2"); }) == Errc::parse_error);
}

TEST_CASE("expression evaluation matches direct construction") {
  // s1 d1 iterated four times returns to the start
  GroupoidElement sd = parse_expression("s1 d1");
  int root = 0;
  std::string bits = "0000";
  for (int t = 0; t < 4; ++t) {
    EvalResult r = evaluate(sd, root, bits);
    root = r.root;
    bits = r.bits;
  }
  CHECK(root == 0);
  CHECK(bits == "0000");
}
