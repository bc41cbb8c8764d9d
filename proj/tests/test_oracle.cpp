#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "ringweight/criterion.hpp"
#include "ringweight/oracle.hpp"

#include "testutil.hpp"

using namespace ringweight;

namespace {

Weight failing_z4_weight(const ProductRing& z4) {
  return Weight::from_table(z4, {{{0}, Scalar(1)}, {{1}, Scalar(0)}});
}

// the ideal of Z4 generated by 2, as a length-1 code
Code z4_socle_code(const ProductRing& z4) { return Code(z4, 1, {Tuple{2}}); }

}  // namespace

TEST_CASE("code enumeration counts") {
  ProductRing z4 = parse_ring("Z4");
  CHECK(enumerate_codes(z4, 1, 1).size() == 3);  // {0}, {0,2}, Z4

  // all length-1 codes are the principal ideals, which is all of E here
  ProductRing z2z2 = parse_ring("Z2*Z2");
  CHECK(enumerate_codes(z2z2, 1, 1).size() == 4);

  CHECK(enumerate_codes(parse_ring("F2x2"), 1, 1).size() == 3);

  for (const auto& spec : {"Z4", "Z8", "Z2*Z2", "Z2*Z4", "F2x2", "Z9"}) {
    ProductRing ring = parse_ring(spec);
    CHECK(enumerate_codes(ring, 1, 1).size() == ring.ideal_count());
  }

  // subspaces of F2^2: {0}, three lines, the plane
  CHECK(enumerate_codes(parse_ring("Z2"), 2, 2).size() == 5);
  // submodules of Z4^2 are exactly the subgroups of Z4 x Z4
  CHECK(enumerate_codes(z4, 2, 2).size() == 15);
}

TEST_CASE("codes carry verified closures and distinct element sets") {
  for (const auto& spec : {"Z4", "Z2*Z4", "F2x2"}) {
    ProductRing ring = parse_ring(spec);
    auto codes = enumerate_codes(ring, 2, 2);
    std::set<std::vector<size_t>> element_sets;
    for (const Code& code : codes) {
      CHECK(code.contains(0));
      CHECK(element_sets.insert(code.elements()).second);
      // generators span the element set (re-spanned on construction)
      CHECK(code.generators().size() <= 2);
    }
  }
}

TEST_CASE("code enumeration budgets") {
  ProductRing z4 = parse_ring("Z4");
  OracleBudgets tiny;
  tiny.max_space = 8;
  CHECK_THROWS_AS(enumerate_codes(z4, 2, 2, tiny), budget_error);
  CHECK_THROWS_AS(enumerate_codes(z4, 3, 4), std::invalid_argument);  // max_gens > n

  OracleBudgets few_codes;
  few_codes.max_codes = 4;
  CHECK_THROWS_AS(enumerate_codes(z4, 2, 2, few_codes), budget_error);
}

TEST_CASE("isometry enumeration on Z4") {
  ProductRing z4 = parse_ring("Z4");
  Weight whom = homogeneous(z4);

  // full ring: exactly 1 -> 1 and 1 -> 3
  Code full(z4, 1, {Tuple{1}});
  auto maps = enumerate_isometries(full, whom);
  REQUIRE(maps.size() == 2);
  std::set<size_t> images;
  for (const auto& map : maps) images.insert(map.apply(Tuple{1})[0]);
  CHECK(images == std::set<size_t>{1, 3});

  // socle code: only 2 -> 2
  auto socle_maps = enumerate_isometries(z4_socle_code(z4), whom);
  REQUIRE(socle_maps.size() == 1);
  CHECK(socle_maps[0].apply(Tuple{2}) == Tuple{2});

  // failing weight admits the non-injective 2 -> 0
  auto failing_maps = enumerate_isometries(z4_socle_code(z4), failing_z4_weight(z4));
  REQUIRE(failing_maps.size() == 2);
  bool found_collapse = false;
  for (const auto& map : failing_maps)
    if (map.apply(Tuple{2}) == Tuple{0}) {
      found_collapse = true;
      CHECK(!map.is_injective());
    }
  CHECK(found_collapse);
}

TEST_CASE("isometry budget") {
  ProductRing z4 = parse_ring("Z4");
  OracleBudgets tiny;
  tiny.max_maps = 1;
  CHECK_THROWS_AS(enumerate_isometries(Code(z4, 1, {Tuple{1}}), homogeneous(z4), tiny),
                  budget_error);
}

TEST_CASE("monomial extension search") {
  ProductRing z4 = parse_ring("Z4");
  Weight whom = homogeneous(z4);
  SymmetryGroup units(z4, z4.unit_indices());

  // identity map extends via the identity monomial
  Code full(z4, 1, {Tuple{1}});
  auto maps = enumerate_isometries(full, whom);
  for (const auto& map : maps) {
    auto monomial = extends_to_monomial(map, units);
    REQUIRE(monomial);
    // the monomial reproduces the map on the whole code
    for (size_t pos = 0; pos < full.size(); ++pos)
      CHECK(monomial->apply(z4, full.element_tuple(pos)) == map.images()[pos]);
    if (map.apply(Tuple{1}) == Tuple{3}) CHECK(monomial->units == std::vector<size_t>{3});
  }

  // monomials are bijective, so the collapse map never extends
  for (const auto& map : enumerate_isometries(z4_socle_code(z4), failing_z4_weight(z4)))
    if (!map.is_injective()) CHECK(!extends_to_monomial(map, units));
}

TEST_CASE("linear map tables are verified") {
  ProductRing z4 = parse_ring("Z4");
  Code full(z4, 1, {Tuple{1}});
  // images must form a module homomorphism: 1 -> 1 forces 2 -> 2
  CHECK_THROWS_AS(LinearMap(full, {Tuple{0}, Tuple{1}, Tuple{1}, Tuple{3}}), std::logic_error);
}

TEST_CASE("every unit-monomial restricts to an isometry of every code") {
  for (const auto& spec : {"Z4", "Z2*Z2", "F2x2", "Z9"}) {
    ProductRing ring = parse_ring(spec);
    for (const Weight& w : {hamming(ring), homogeneous(ring)}) {
      FnR wf = w.expand();
      for (size_t n = 1; n <= 2; ++n) {
        auto codes = enumerate_codes(ring, n, n);
        std::vector<size_t> perm(n);
        for (size_t i = 0; i < n; ++i) perm[i] = i;
        do {
          // all unit assignments
          std::vector<size_t> pick(n, 0);
          const auto& units = ring.unit_indices();
          for (;;) {
            Monomial monomial;
            monomial.perm = perm;
            for (size_t i = 0; i < n; ++i) monomial.units.push_back(units[pick[i]]);
            for (const Code& code : codes)
              for (size_t pos = 0; pos < code.size(); ++pos) {
                Tuple x = code.element_tuple(pos);
                Tuple y = monomial.apply(ring, x);
                Scalar wx(0), wy(0);
                for (size_t i = 0; i < n; ++i) {
                  wx += w.at_index(x[i]);
                  wy += w.at_index(y[i]);
                }
                CHECK(wx == wy);
              }
            size_t i = n;
            bool done = true;
            while (i-- > 0) {
              if (++pick[i] < units.size()) {
                done = false;
                break;
              }
              pick[i] = 0;
              if (i == 0) break;
            }
            if (done) break;
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
}

TEST_CASE("extension sweeps") {
  ProductRing z4 = parse_ring("Z4");
  for (size_t n = 1; n <= 2; ++n) {
    for (const Weight& w : {hamming(z4), homogeneous(z4)}) {
      ExtensionReport report = verify_extension_theorem(z4, w, n);
      CHECK(report.witnesses.empty());
      CHECK(report.codes_skipped == 0);
      CHECK(report.extendable == report.isometries_found);
      CHECK(report.codes_examined == report.codes_total);
    }
  }

  ExtensionReport failing = verify_extension_theorem(z4, failing_z4_weight(z4), 1);
  REQUIRE(failing.witnesses.size() == 1);
  const LinearMap& witness = failing.witnesses[0].map;
  CHECK(witness.domain().elements() == std::vector<size_t>{0, 2});
  CHECK(witness.apply(Tuple{2}) == Tuple{0});
  CHECK(!witness.is_injective());
}

TEST_CASE("skipped codes are reported, not fatal") {
  ProductRing z4 = parse_ring("Z4");
  OracleBudgets tight;
  tight.max_maps = 1;  // the full ring needs two assignments
  ExtensionReport report = verify_extension_theorem(z4, homogeneous(z4), 1, tight);
  CHECK(report.codes_skipped == 1);
  CHECK(report.codes_examined == 2);
  CHECK(report.codes_examined + report.codes_skipped == report.codes_total);

  // too small a code budget fails the enumeration itself
  OracleBudgets cap;
  cap.max_codes = 1;
  CHECK_THROWS_AS(verify_extension_theorem(z4, homogeneous(z4), 1, cap), budget_error);
}

TEST_CASE("correlation isometry check") {
  ProductRing z4 = parse_ring("Z4");
  Weight whom = homogeneous(z4);
  Code full(z4, 1, {Tuple{1}});
  auto maps = enumerate_isometries(full, whom);

  // the class of delta_1 acts as the identity translate
  FnR d1 = delta(z4, z4.one());
  for (const auto& map : maps) CHECK(check_lemiso(map, whom, d1));

  // epsilon elements of S
  for (const auto& map : maps)
    for (const IdealExponent& e : z4.ideal_reps())
      CHECK(check_lemiso(map, whom, epsilon(z4, e)));

  // a non-isometry input is rejected
  auto failing_maps = enumerate_isometries(z4_socle_code(z4), failing_z4_weight(z4));
  for (const auto& map : failing_maps)
    if (!map.is_injective())
      CHECK_THROWS_AS(check_lemiso(map, whom, d1), std::invalid_argument);
}

TEST_CASE("raw function weights with a restricted symmetry group") {
  // delta_1 is a weight (zero at 0) but not invariant; its right symmetry
  // group is trivial, so extensions may only use the identity scaling
  ProductRing z4 = parse_ring("Z4");
  FnR d1 = delta(z4, z4.one());
  SymmetryGroup sym = sym_right(d1);
  CHECK(sym.indices() == std::vector<size_t>{1});

  ExtensionReport report = verify_extension_theorem(z4, d1, sym, 1, {}, "delta_1");
  CHECK(report.weight == "delta_1");
  CHECK(report.codes_examined == 3);
  // on the socle code both 2 -> 0 and 2 -> 2 preserve delta_1; only the
  // identity-restriction extends through {1}-monomials
  CHECK(report.isometries_found == 4);
  CHECK(report.extendable == 3);
  REQUIRE(report.witnesses.size() == 1);
  CHECK(report.witnesses[0].map.apply(Tuple{2}) == Tuple{0});
}

TEST_CASE("lemiso holds for random S elements across rings") {
  std::mt19937 rng(41);
  for (const auto& spec : {"Z4", "Z2*Z2", "F2x2"}) {
    ProductRing ring = parse_ring(spec);
    Weight w = homogeneous(ring);
    for (const Code& code : enumerate_codes(ring, 1, 1))
      for (const auto& map : enumerate_isometries(code, w))
        for (int it = 0; it < 3; ++it)
          CHECK(check_lemiso(map, w, testutil::random_s_element(ring, rng).fn()));
  }
}
