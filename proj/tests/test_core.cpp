#include <cmath>
#include <random>

#include "doctest.h"
#include "garside/braid.hpp"
#include "garside/element.hpp"
#include "garside/error.hpp"
#include "garside/tuple.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

Element word(const StructurePtr& g, std::vector<int> w)
{
  return make_element(g, w);
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long catalan(int n)
{
  long long c = 1;
  for (int k = 0; k < n; ++k)
    c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<StructurePtr> small_structures()
{
  return {artin_structure(3), artin_structure(4), bkl_structure(3), bkl_structure(4)};
}

}  // namespace

TEST_CASE("structure parameters")
{
  auto a2 = artin_structure(2);
  CHECK(a2->n_atoms() == 1);
  CHECK(a2->delta() == a2->atom(0));
  CHECK(a2->delta_atom_length() == 1);
  CHECK(a2->tau_order() == 1);

  auto a3 = artin_structure(3);
  CHECK(a3->n_atoms() == 2);
  CHECK(a3->delta_atom_length() == 3);
  CHECK(a3->tau_order() == 2);
  CHECK(artin_structure(4)->tau_order() == 2);

  auto b2 = bkl_structure(2);
  CHECK(b2->n_atoms() == 1);
  CHECK(b2->delta() == b2->atom(bkl_atom_index(2, 1)));
  CHECK(b2->delta_atom_length() == 1);

  auto b3 = bkl_structure(3);
  CHECK(b3->n_atoms() == 3);
  CHECK(b3->delta_atom_length() == 2);
  CHECK(bkl_structure(4)->n_atoms() == 6);
  CHECK(bkl_structure(4)->tau_order() == 4);
  CHECK(bkl_structure(7)->tau_order() == 7);

  CHECK_THROWS_AS(artin_structure(1), Error);
  CHECK_THROWS_AS(bkl_structure(0), Error);
  CHECK_THROWS_AS(make_structure("hecke", 3), Error);
}

TEST_CASE("band generator indexing round-trips")
{
  for (int t = 2; t <= 12; ++t)
    for (int s = 1; s < t; ++s) {
      auto [t2, s2] = bkl_atom_strands(bkl_atom_index(t, s));
      CHECK(t2 == t);
      CHECK(s2 == s);
    }
}

TEST_CASE("enumerated simple counts")
{
  for (int n = 2; n <= 6; ++n) {
    CHECK(static_cast<long long>(enumerate_simples(*artin_structure(n)).size()) == factorial(n));
    CHECK(static_cast<long long>(enumerate_simples(*bkl_structure(n)).size()) == catalan(n));
  }
  auto two = enumerate_simples(*artin_structure(2));
  CHECK(two.size() == 2);
  CHECK_THROWS_AS(enumerate_simples(*artin_structure(12)), Error);
}

TEST_CASE("structure invariants on enumerated simples")
{
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : {artin_structure(n), bkl_structure(n)}) {
      auto all = enumerate_simples(*g);
      for (int i = 0; i < g->n_atoms(); ++i) {
        Simple x = g->atom(i);
        CHECK_FALSE(g->is_identity(x));
        CHECK(g->left_divides(x, g->delta()));
        CHECK(g->right_divides(g->delta(), x));
        for (int j = 0; j < g->n_atoms(); ++j)
          if (i != j) CHECK_FALSE(g->left_divides(x, g->atom(j)));
      }
      CHECK(g->tau(g->delta()) == g->delta());
      std::set<std::string> codes;
      for (const Simple& s : all) {
        CHECK(g->left_divides(s, g->delta()));
        CHECK(g->right_divides(g->delta(), s));
        CHECK(g->left_divides(g->identity(), s));
        CHECK(g->tau_inv(g->tau(s)) == s);
        CHECK(g->tau_power(s, g->tau_order()) == s);
        CHECK(g->decode(g->encode(s)) == s);
        codes.insert(g->encode(s));
        // the fast divisibility tests agree with the brute-force relations
        for (const Simple& t : all) {
          CHECK(g->left_divides(s, t) == oracle::left_div(*g, s, t));
          CHECK(g->right_divides(t, s) == oracle::right_div(*g, t, s));
        }
      }
      CHECK(codes.size() == all.size());
    }
}

TEST_CASE("lattice operations agree with brute force")
{
  for (const auto& g : small_structures()) {
    auto all = enumerate_simples(*g);
    for (const Simple& s : all)
      for (const Simple& t : all) {
        Simple ml = oracle::meet_left(*g, all, s, t);
        Simple mr = oracle::meet_right(*g, all, s, t);
        Simple jr = oracle::join_right(*g, all, s, t);
        Simple jl = oracle::join_left(*g, all, s, t);
        CHECK(lattice(*g, s, t, LatticeOp::meet_left) == ml);
        CHECK(lattice(*g, s, t, LatticeOp::meet_right) == mr);
        CHECK(lattice(*g, s, t, LatticeOp::join_right) == jr);
        CHECK(lattice(*g, s, t, LatticeOp::join_left) == jl);
        CHECK(g->generic_meet_left(s, t) == ml);
        CHECK(g->generic_meet_right(s, t) == mr);
        CHECK(complement(*g, s, t, Side::right) == s.left_quotient(jr));
        CHECK(complement(*g, s, t, Side::left) == oracle::join_left(*g, all, t, s).right_quotient(s));
      }
  }
}

TEST_CASE("fast meets agree with the generic path in larger groups")
{
  std::mt19937_64 rng(7);
  for (const auto& g : {artin_structure(7), bkl_structure(9)}) {
    auto all = enumerate_simples(*g);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 2000; ++k) {
      Simple s = all[pick(rng)], t = all[pick(rng)];
      CHECK(g->meet_left(s, t) == g->generic_meet_left(s, t));
      CHECK(g->meet_right(s, t) == g->generic_meet_right(s, t));
    }
  }
}

TEST_CASE("lattice examples in B3")
{
  auto g = artin_structure(3);
  Simple s1 = g->atom(0), s2 = g->atom(1);
  Simple s = s1.then(s2);
  CHECK(lattice(*g, s, g->identity(), LatticeOp::meet_left) == g->identity());
  CHECK(lattice(*g, s, g->delta(), LatticeOp::meet_left) == s);
  CHECK(lattice(*g, s1, s2, LatticeOp::join_right) == g->delta());
  CHECK(lattice(*g, s1, s2, LatticeOp::meet_left) == g->identity());
  CHECK(complement(*g, g->identity(), s2, Side::right) == s2);
  CHECK(complement(*g, s1, s1, Side::right) == g->identity());
  CHECK(complement(*g, s1, s2, Side::right) == s2.then(s1));
  CHECK_THROWS_AS(lattice(*g, s1, artin_structure(4)->atom(0), LatticeOp::meet_left), Error);
}

TEST_CASE("complement identities")
{
  for (const auto& g : small_structures()) {
    for (const Simple& s : enumerate_simples(*g)) {
      Simple d = g->partial(s);
      CHECK(s.then(d) == g->delta());
      CHECK(g->partial_power(s, 1) == d);
      CHECK(g->partial_power(s, 2) == g->tau(s));
      CHECK(g->partial_power(g->partial_power(s, 1), -1) == s);
      CHECK(g->partial_inv(s).then(s) == g->delta());
      CHECK(g->partial_power(s, 0) == s);
      CHECK(g->partial_power(s, -2) == g->tau_inv(s));
    }
    CHECK(g->partial(g->identity()) == g->delta());
    CHECK(g->partial(g->delta()) == g->identity());
  }
  auto g = artin_structure(3);
  CHECK(g->partial(g->atom(0)) == g->atom(1).then(g->atom(0)));
}

TEST_CASE("dual complement is the Kreweras complement")
{
  // Kreweras: the coarsest partition K with π ∪ K noncrossing on the
  // interleaved points 1 < 1' < 2 < 2' < ...; as permutations K = π^{-1} δ.
  for (int n = 2; n <= 6; ++n) {
    auto g = bkl_structure(n);
    auto all = enumerate_simples(*g);
    for (const Simple& s : all) {
      Simple k = g->partial(s);
      CHECK(oracle::blocks(k).size() + oracle::blocks(s).size() == static_cast<std::size_t>(n + 1));
      bool coarsest = true;
      for (const Simple& t : all)
        if (t != k && oracle::refines(k, t) && g->product_if_simple(s, t)) coarsest = false;
      CHECK(coarsest);
    }
  }
}

TEST_CASE("tau on atoms")
{
  auto a4 = artin_structure(4);
  for (int i = 0; i < 3; ++i)
    CHECK(a4->tau(a4->atom(i)) == a4->atom(2 - i));
  CHECK(tau_power(word(a4, {1}), 1) == word(a4, {3}));

  auto b5 = bkl_structure(5);
  for (int t = 2; t <= 5; ++t)
    for (int s = 1; s < t; ++s) {
      // rotation s -> s+1, t -> t+1 modulo N
      int s2 = s % 5 + 1, t2 = t % 5 + 1;
      int lo = std::min(s2, t2), hi = std::max(s2, t2);
      Simple rotated = b5->atom(bkl_atom_index(hi, lo));
      CHECK(b5->tau(b5->atom(bkl_atom_index(t, s))) == rotated);
      Element x = Element::from_simple(b5, b5->atom(bkl_atom_index(t, s)));
      CHECK(conjugate(x, Element::delta_power(b5, 1)) == Element::from_simple(b5, rotated));
    }
}

TEST_CASE("normal form examples in B3")
{
  auto g = artin_structure(3);
  Element id = word(g, {});
  CHECK(id.inf() == 0);
  CHECK(id.factors().empty());

  Element d = word(g, {1, 2, 1});
  CHECK(d.inf() == 1);
  CHECK(d.canonical_length() == 0);

  Element sq = word(g, {1, 1});
  CHECK(sq.inf() == 0);
  CHECK(sq.sup() == 2);
  CHECK(sq.factors() == std::vector<Simple>{g->atom(0), g->atom(0)});

  // σ1^{-1} = Δ^{-1}·∂̃(σ1) = Δ^{-1}·σ1σ2
  Element inv1 = word(g, {-1});
  CHECK(inv1.inf() == -1);
  CHECK(inv1.sup() == 0);
  CHECK(inv1.factors() == std::vector<Simple>{g->atom(0).then(g->atom(1))});
  CHECK(multiply(inv1, word(g, {1})).is_identity());
  CHECK(inverse(word(g, {1})) == inv1);
  // Δ^{-1}·σ2σ1 is σ2^{-1}
  CHECK(word(g, {-2}).factors() == std::vector<Simple>{g->atom(1).then(g->atom(0))});

  CHECK(multiply(word(g, {1}), word(g, {2, 1})) == d);
  CHECK(multiply(word(g, {1}), word(g, {1})) == sq);
  CHECK(multiply(sq, id) == sq);
  CHECK(inverse(id) == id);
  CHECK(inverse(Element::delta_power(g, 5)) == Element::delta_power(g, -5));

  CHECK(conjugate(word(g, {1}), d) == word(g, {2}));
  Element d2 = Element::delta_power(g, 2);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k)
    CHECK(conjugate(d2, oracle::random_element(g, rng, 10)) == d2);
  CHECK(conjugate(sq, id) == sq);

  std::vector<int> bad{3};
  CHECK_THROWS_AS(make_element(g, bad), Error);
  std::vector<int> zero{0};
  CHECK_THROWS_AS(make_element(g, zero), Error);
  CHECK_THROWS_AS(multiply(sq, word(artin_structure(4), {1})), Error);
}

TEST_CASE("normal form property suite")
{
  std::mt19937_64 rng(11);
  for (int n : {3, 4, 8})
    for (const auto& g : {artin_structure(n), bkl_structure(n)}) {
      for (int trial = 0; trial < 1000; ++trial) {
        auto w = oracle::random_word(*g, rng, 1 + trial % 25);
        Element e = make_element(g, w);
        REQUIRE(is_normal_form(e));
        Element prod(g);
        for (int letter : w) {
          std::vector<int> one{letter};
          prod = multiply(prod, make_element(g, one));
        }
        CHECK(prod == e);
        Element inv = inverse(e);
        CHECK(is_normal_form(inv));
        CHECK(multiply(e, inv).is_identity());
        CHECK(multiply(inv, e).is_identity());
        CHECK(make_element(g, to_word(e)) == e);
        long long letters = 0;
        for (int l : w) letters += l > 0 ? 1 : -1;
        CHECK(exponent_sum(e) == letters);
        CHECK(tau_power(e, 1).inf() == e.inf());
        CHECK(tau_power(e, 1).sup() == e.sup());
        CHECK(tau_power(e, g->tau_order()) == e);
        CHECK(tau_power(e, 1) == conjugate(e, Element::delta_power(g, 1)));
      }
    }
}

TEST_CASE("conjugation is a group action")
{
  std::mt19937_64 rng(5);
  for (const auto& g : {artin_structure(5), bkl_structure(5)}) {
    auto all = enumerate_simples(*g);
    for (int trial = 0; trial < 200; ++trial) {
      Element a = oracle::random_element(g, rng, 12);
      Element x = oracle::random_element(g, rng, 6);
      Element y = oracle::random_element(g, rng, 6);
      CHECK(conjugate(conjugate(a, x), y) == conjugate(a, multiply(x, y)));
      const Simple& s = all[static_cast<std::size_t>(trial) % all.size()];
      Element xs = Element::from_simple(g, s);
      CHECK(conjugate_by_simple(a, s) == conjugate(a, xs));
      CHECK(conjugate_by_simple_inverse(a, s) == conjugate(a, inverse(xs)));
      Element lm = a;
      lm.left_multiply(s);
      CHECK(lm == multiply(xs, a));
      CHECK(is_normal_form(lm));
    }
  }
}

TEST_CASE("tuples and intervals")
{
  auto g = artin_structure(3);
  TupleElement a({word(g, {1}), Element::delta_power(g, 1)});
  CHECK(in_interval(a, Interval({0, 1}, {1, 1})));
  CHECK_FALSE(in_interval(TupleElement({word(g, {1})}), Interval({1}, {1})));
  CHECK(in_interval(a, Interval::of(a)));
  CHECK(in_interval(a, Interval({0, 0}, {kUnbounded, kUnbounded})));
  CHECK_THROWS_AS(in_interval(a, Interval({0}, {1})), Error);
  CHECK_THROWS_AS(Interval({2}, {1}), Error);
  CHECK_THROWS_AS(TupleElement({word(g, {1}), word(artin_structure(4), {1})}), Error);

  std::mt19937_64 rng(2);
  for (const auto& s : {artin_structure(5), bkl_structure(6)})
    for (int k = 0; k < 100; ++k) {
      TupleElement t = oracle::random_tuple(s, rng, 3, 15);
      CHECK(decode_tuple(s, t.key()) == t);
    }
}

TEST_CASE("inf exponents beyond 32 bits")
{
  auto g = artin_structure(4);
  Element big = Element::delta_power(g, 3'000'000'000LL);
  big.right_multiply(g->atom(0));
  CHECK(big.inf() == 3'000'000'000LL);
  CHECK(inverse(big).sup() == -3'000'000'000LL);
}
