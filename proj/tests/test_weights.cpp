#include "doctest.h"

#include <map>
#include <random>
#include <stdexcept>

#include "ringweight/mobius.hpp"
#include "ringweight/weights.hpp"

#include "testutil.hpp"

using namespace ringweight;
using testutil::test_ring_specs;

namespace {

// independent route to the homogeneous weight: generic poset recursion for
// mu and enumerated orbit sizes
Weight homogeneous_oracle(const ProductRing& ring) {
  FinitePoset lattice = ideal_lattice(ring);
  MobiusTable mu = mobius_poset(lattice);
  size_t zero = ring.ideal_index(ring.zero_ideal());
  std::vector<Scalar> values(ring.ideal_count(), Scalar(0));
  for (size_t i = 0; i < ring.ideal_count(); ++i) {
    const IdealExponent& e = ring.ideal_reps()[i];
    auto orbit = testutil::orbit_by_enumeration(ring, e);
    values[i] = Scalar(1) - mu.value(zero, i) / Scalar(static_cast<long long>(orbit.size()));
  }
  return Weight::from_values(ring, std::move(values));
}

}  // namespace

TEST_CASE("weight_from_table: expansion and validation") {
  ProductRing z4 = parse_ring("Z4");
  Weight w = Weight::from_table(z4, {{{0}, Scalar(1)}, {{1}, Scalar(2)}});
  FnR f = w.expand();
  CHECK(f[1] == Scalar(1));
  CHECK(f[3] == Scalar(1));
  CHECK(f[2] == Scalar(2));
  CHECK(f[0] == Scalar(0));

  // missing exponent
  CHECK_THROWS_AS(Weight::from_table(z4, {{{0}, Scalar(1)}}), std::invalid_argument);
  // nonzero at the zero ideal
  CHECK_THROWS_AS(
      Weight::from_table(z4, {{{0}, Scalar(1)}, {{1}, Scalar(1)}, {{2}, Scalar(1)}}),
      std::invalid_argument);
  // zero entry at the zero ideal is accepted
  CHECK(Weight::from_table(z4, {{{0}, Scalar(1)}, {{1}, Scalar(1)}, {{2}, Scalar(0)}}) ==
        hamming(z4));
  // unknown key
  CHECK_THROWS_AS(Weight::from_table(z4, {{{0}, Scalar(1)}, {{1}, Scalar(1)}, {{3}, Scalar(1)}}),
                  std::invalid_argument);

  // all-ones table on Z2 x Z2 is the Hamming weight
  ProductRing z2z2 = parse_ring("Z2*Z2");
  Weight ones = Weight::from_table(
      z2z2, {{{0, 0}, Scalar(1)}, {{0, 1}, Scalar(1)}, {{1, 0}, Scalar(1)}});
  CHECK(ones == hamming(z2z2));
}

TEST_CASE("hamming weight") {
  ProductRing z4 = parse_ring("Z4");
  FnR f = hamming(z4).expand();
  CHECK(f.table() == std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(1), Scalar(1)});

  ProductRing f2x2 = parse_ring("F2x2");
  CHECK(hamming(f2x2).at(f2x2.rep_element(IdealExponent{{1}})) == Scalar(1));

  for (const auto& spec : test_ring_specs()) {
    ProductRing ring = parse_ring(spec);
    FnR h = hamming(ring).expand();
    Scalar sum(0);
    for (size_t x = 0; x < ring.size(); ++x) sum += h[x];
    CHECK(sum == Scalar(static_cast<long long>(ring.size() - 1)));
  }
}

TEST_CASE("homogeneous weight tables") {
  ProductRing z4 = parse_ring("Z4");
  FnR w4 = homogeneous(z4).expand();
  CHECK(w4.table() == std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(2), Scalar(1)});

  ProductRing z8 = parse_ring("Z8");
  Weight w8 = homogeneous(z8);
  CHECK(w8.at(Element{{4}}) == Scalar(2));
  CHECK(w8.at(Element{{2}}) == Scalar(1));
  CHECK(w8.at(Element{{1}}) == Scalar(1));

  ProductRing z2z2 = parse_ring("Z2*Z2");
  Weight w22 = homogeneous(z2z2);
  CHECK(w22.at(Element{{0, 0}}) == Scalar(0));
  CHECK(w22.at_exponent(IdealExponent{{1, 0}}) == Scalar(2));
  CHECK(w22.at_exponent(IdealExponent{{0, 1}}) == Scalar(2));
  CHECK(w22.at_exponent(IdealExponent{{0, 0}}) == Scalar(0));  // a vanishing nonzero orbit

  for (const auto& spec : test_ring_specs()) {
    ProductRing ring = parse_ring(spec);
    CHECK(homogeneous(ring) == homogeneous_oracle(ring));
  }
}

TEST_CASE("symmetry groups") {
  ProductRing z4 = parse_ring("Z4");
  FnR inv = homogeneous(z4).expand();
  CHECK(sym_left(inv).indices() == std::vector<size_t>{1, 3});
  CHECK(sym_right(inv).indices() == std::vector<size_t>{1, 3});

  FnR d1 = delta(z4, z4.one());
  CHECK(sym_left(d1).indices() == std::vector<size_t>{1});

  FnR constant(z4, std::vector<Scalar>(4, Scalar(5)));
  CHECK(sym_left(constant).is_full_unit_group());
  CHECK(sym_right(constant).is_full_unit_group());

  // construction enforces the subgroup axioms
  CHECK_THROWS_AS(SymmetryGroup(z4, {3}), std::invalid_argument);   // missing identity
  CHECK_THROWS_AS(SymmetryGroup(z4, {2}), std::invalid_argument);   // not a unit
  CHECK(SymmetryGroup(z4, {1}).is_subgroup());

  for (const auto& spec : test_ring_specs()) {
    ProductRing ring = parse_ring(spec);
    FnR h = hamming(ring).expand();
    CHECK(sym_left(h).is_subgroup());
    CHECK(sym_right(h).is_subgroup());
    FnR d = delta_index(ring, ring.unit_indices().back());
    CHECK(sym_left(d).is_subgroup());
  }
}

TEST_CASE("is_invariant") {
  ProductRing z4 = parse_ring("Z4");
  CHECK(is_invariant(homogeneous(z4).expand()));
  CHECK(is_invariant(hamming(parse_ring("Z2*F2x2")).expand()));

  FnR skewed(z4);
  skewed[1] = Scalar(1);
  skewed[3] = Scalar(2);
  CHECK(!is_invariant(skewed));

  // every table-built weight is invariant with full symmetry groups
  std::mt19937 rng(3);
  for (const auto& spec : test_ring_specs()) {
    ProductRing ring = parse_ring(spec);
    FnR f = testutil::random_invariant_weight(ring, rng).expand();
    CHECK(sym_left(f).is_full_unit_group());
    CHECK(sym_right(f).is_full_unit_group());
  }
}

TEST_CASE("homogeneity constant") {
  for (const auto& spec : test_ring_specs())
    CHECK(homogeneity_constant(homogeneous(parse_ring(spec))) == Scalar(1));

  // Hamming on Z4: ideal R2 averages 1/2, ideal R averages 3/4
  ProductRing z4 = parse_ring("Z4");
  CHECK(!homogeneity_constant(hamming(z4)));

  Weight zero_w = Weight::from_table(z4, {{{0}, Scalar(0)}, {{1}, Scalar(0)}});
  CHECK(homogeneity_constant(zero_w) == Scalar(0));
}

TEST_CASE("weight on tuples") {
  ProductRing z4 = parse_ring("Z4");
  Weight w = homogeneous(z4);
  CHECK(weight_on_tuple(w, {Element{{1}}, Element{{2}}}) == Scalar(3));
  CHECK(weight_on_tuple(w, {}) == Scalar(0));
  CHECK(weight_on_tuple(w, {z4.zero(), z4.zero()}) == Scalar(0));

  std::mt19937 rng(5);
  std::uniform_int_distribution<size_t> pick(0, z4.size() - 1);
  for (int it = 0; it < 50; ++it) {
    std::vector<Element> tuple{z4.element(pick(rng)), z4.element(pick(rng)),
                               z4.element(pick(rng))};
    std::vector<Element> swapped{tuple[2], tuple[0], tuple[1]};
    CHECK(weight_on_tuple(w, tuple) == weight_on_tuple(w, swapped));
  }
}

TEST_CASE("weights take at most |E| distinct values") {
  std::mt19937 rng(9);
  for (const auto& spec : test_ring_specs()) {
    ProductRing ring = parse_ring(spec);
    Weight w = testutil::random_invariant_weight(ring, rng);
    FnR f = w.expand();
    std::set<std::string> distinct;
    for (size_t x = 0; x < ring.size(); ++x) distinct.insert(f[x].str());
    CHECK(distinct.size() <= ring.ideal_count());
  }
}
