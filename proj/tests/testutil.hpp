#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include "ringweight/conv.hpp"
#include "ringweight/mobius.hpp"
#include "ringweight/ring.hpp"
#include "ringweight/weights.hpp"

namespace testutil {

using namespace ringweight;

inline const std::vector<std::string>& test_ring_specs() {
  static const std::vector<std::string> specs = {"Z4",    "Z8",    "Z9",       "Z16",  "Z2*Z2",
                                                 "Z2*Z4", "Z2*Z2*Z2", "F2x2", "F3x2", "Z2*F2x2"};
  return specs;
}

// --- deterministic random values ---

inline Rational random_rational(std::mt19937& rng, bool allow_zero = true) {
  std::uniform_int_distribution<long long> num(-6, 6);
  std::uniform_int_distribution<long long> den(1, 4);
  long long n = num(rng);
  if (!allow_zero && n == 0) n = 1;
  return Rational(n, den(rng));
}

inline Scalar random_scalar(std::mt19937& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> coin(0, 3);
  Rational re = random_rational(rng, allow_zero);
  Rational im = coin(rng) == 0 ? random_rational(rng) : Rational(0);
  if (!allow_zero && re.is_zero() && im.is_zero()) re = Rational(1);
  return Scalar(re, im);
}

inline FnR random_fnr(const ProductRing& ring, std::mt19937& rng) {
  FnR f(ring);
  for (size_t x = 0; x < ring.size(); ++x) f[x] = random_scalar(rng);
  return f;
}

// random rational-valued invariant weight table
inline Weight random_invariant_weight(const ProductRing& ring, std::mt19937& rng) {
  std::vector<Scalar> values(ring.ideal_count(), Scalar(0));
  size_t zero = ring.ideal_index(ring.zero_ideal());
  for (size_t i = 0; i < ring.ideal_count(); ++i)
    if (i != zero) values[i] = Scalar(random_rational(rng));
  return Weight::from_values(ring, std::move(values));
}

inline SElement random_s_element(const ProductRing& ring, std::mt19937& rng) {
  FnR f(ring);
  for (const IdealExponent& e : ring.ideal_reps()) {
    Scalar v = random_scalar(rng);
    for (size_t x : ring.orbit_elements(e)) f[x] = v;
  }
  return SElement::canonicalize(std::move(f));
}

// --- independent Mobius oracles (the four defining recursions) ---

// Form (c): mu(x,y) = -sum_{x < z <= y} mu(z,y), recursing on the first
// argument. Independent of the library's form-(d) recursion.
inline MobiusTable mobius_by_form_c(const FinitePoset& poset) {
  const size_t n = poset.size();
  std::vector<size_t> below(n, 0);
  for (size_t y = 0; y < n; ++y)
    for (size_t z = 0; z < n; ++z)
      if (poset.leq(z, y)) ++below[y];
  // for fixed y, process x from closest-to-y downward
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (below[a] != below[b]) return below[a] > below[b];
    return a < b;
  });
  std::vector<Scalar> vals(n * n, Scalar(0));
  for (size_t y = 0; y < n; ++y) {
    for (size_t x : order) {
      if (!poset.leq(x, y)) continue;
      if (x == y) {
        vals[x * n + y] = Scalar(1);
        continue;
      }
      Scalar sum(0);
      for (size_t z = 0; z < n; ++z)
        if (z != x && poset.leq(x, z) && poset.leq(z, y)) sum += vals[z * n + y];
      vals[x * n + y] = -sum;
    }
  }
  return MobiusTable(n, std::move(vals));
}

// Forms (a) and (b) as equation checks on a finished table.
inline bool satisfies_form_a(const FinitePoset& poset, const MobiusTable& mu) {
  for (size_t x = 0; x < poset.size(); ++x) {
    if (!(mu.value(x, x) == Scalar(1))) return false;
    for (size_t y = 0; y < poset.size(); ++y) {
      if (x == y || !poset.leq(x, y)) continue;
      Scalar sum(0);
      for (size_t z = 0; z < poset.size(); ++z)
        if (poset.leq(x, z) && poset.leq(z, y)) sum += mu.value(z, y);
      if (!sum.is_zero()) return false;
    }
  }
  return true;
}

inline bool satisfies_form_b(const FinitePoset& poset, const MobiusTable& mu) {
  for (size_t x = 0; x < poset.size(); ++x) {
    for (size_t y = 0; y < poset.size(); ++y) {
      if (x == y || !poset.leq(x, y)) continue;
      Scalar sum(0);
      for (size_t z = 0; z < poset.size(); ++z)
        if (poset.leq(x, z) && poset.leq(z, y)) sum += mu.value(x, z);
      if (!sum.is_zero()) return false;
    }
  }
  return true;
}

// --- brute-force ring oracles ---

// units by enumeration: a is a unit iff some b gives ab = 1
inline std::vector<size_t> units_by_enumeration(const ProductRing& ring) {
  std::vector<size_t> out;
  size_t one = ring.index(ring.one());
  for (size_t a = 0; a < ring.size(); ++a)
    for (size_t b = 0; b < ring.size(); ++b)
      if (ring.mul_index(a, b) == one) {
        out.push_back(a);
        break;
      }
  return out;
}

// the principal ideal Ra = {ra | r in R} as a sorted index set
inline std::set<size_t> principal_ideal(const ProductRing& ring, size_t a) {
  std::set<size_t> out;
  for (size_t r = 0; r < ring.size(); ++r) out.insert(ring.mul_index(r, a));
  return out;
}

// unit orbit by multiplying the representative by every unit
inline std::set<size_t> orbit_by_enumeration(const ProductRing& ring, const IdealExponent& e) {
  std::set<size_t> out;
  size_t rep = ring.index(ring.rep_element(e));
  for (size_t u : ring.unit_indices()) out.insert(ring.mul_index(u, rep));
  return out;
}

}  // namespace testutil
