#include "ringweight/conv.hpp"

#include <algorithm>
#include <stdexcept>

#include "ringweight/mobius.hpp"

namespace ringweight {

namespace {

// Iterates all exponent vectors t with 0 <= t_i <= bound_i.
template <typename Fn>
void for_each_exponent_below(const std::vector<int>& bound, Fn&& fn) {
  std::vector<int> t(bound.size(), 0);
  for (;;) {
    fn(t);
    size_t i = t.size();
    while (i-- > 0) {
      if (t[i] < bound[i]) {
        ++t[i];
        std::fill(t.begin() + static_cast<long>(i) + 1, t.end(), 0);
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

FnR convolve(const FnR& f, const FnR& g) {
  require_same_ring(f, g);
  const ProductRing& ring = f.ring();
  FnR out(ring);
  for (size_t a = 0; a < ring.size(); ++a) {
    if (f[a].is_zero()) continue;
    for (size_t b = 0; b < ring.size(); ++b) {
      if (g[b].is_zero()) continue;
      out[ring.mul_index(a, b)] += f[a] * g[b];
    }
  }
  return out;
}

FnR corr_left(const FnR& f, const FnR& w) {
  require_same_ring(f, w);
  const ProductRing& ring = f.ring();
  FnR out(ring);
  for (size_t x = 0; x < ring.size(); ++x) {
    Scalar sum(0);
    for (size_t r = 0; r < ring.size(); ++r) {
      if (f[r].is_zero()) continue;
      sum += f[r] * w[ring.mul_index(x, r)];
    }
    out[x] = sum;
  }
  return out;
}

FnR corr_right(const FnR& w, const FnR& g) {
  require_same_ring(w, g);
  const ProductRing& ring = w.ring();
  FnR out(ring);
  for (size_t x = 0; x < ring.size(); ++x) {
    Scalar sum(0);
    for (size_t r = 0; r < ring.size(); ++r) {
      if (g[r].is_zero()) continue;
      sum += w[ring.mul_index(r, x)] * g[r];
    }
    out[x] = sum;
  }
  return out;
}

SElement SElement::canonicalize(FnR f) {
  const ProductRing& ring = f.ring();
  f[0] = Scalar(0);
  for (const IdealExponent& e : ring.ideal_reps()) {
    const auto& orbit = ring.orbit_elements(e);
    for (size_t i = 1; i < orbit.size(); ++i)
      if (!(f[orbit[i]] == f[orbit[0]]))
        throw std::invalid_argument("function is not constant on unit orbits");
  }
  return SElement(std::move(f));
}

std::vector<Scalar> SElement::epsilon_coords() const {
  const ProductRing& ring = fn_.ring();
  const size_t zero = ring.ideal_index(ring.zero_ideal());
  std::vector<Scalar> coords;
  coords.reserve(ring.ideal_count() - 1);
  for (size_t i = 0; i < ring.ideal_count(); ++i) {
    if (i == zero) continue;
    const IdealExponent& e = ring.ideal_reps()[i];
    size_t rep = ring.orbit_elements(e)[0];
    coords.push_back(fn_[rep] * Scalar(static_cast<long long>(ring.orbit_size(e))));
  }
  return coords;
}

FnR epsilon(const ProductRing& ring, const IdealExponent& e) {
  FnR f(ring);
  const auto& orbit = ring.orbit_elements(e);
  Scalar value = Scalar(1) / Scalar(static_cast<long long>(orbit.size()));
  for (size_t x : orbit) f[x] = value;
  return f;
}

namespace {

std::vector<int> orth_bound(const ProductRing& ring, const IdealExponent& x) {
  // Rx^orth <= Rt means t_i <= d_i - x_i componentwise.
  std::vector<int> bound(x.e.size());
  for (size_t i = 0; i < x.e.size(); ++i) bound[i] = ring.components()[i].d - x.e[i];
  return bound;
}

}  // namespace

SElement eta(const ProductRing& ring, const IdealExponent& x) {
  if (x == ring.zero_ideal())
    throw std::domain_error("eta is not defined at the zero ideal");
  (void)ring.ideal_index(x);
  FnR acc(ring);
  for_each_exponent_below(orth_bound(ring, x), [&](const std::vector<int>& t) {
    IdealExponent te{t};
    Scalar mu = mobius_zero_closed(ring, ring.ideal_product(x, te));
    if (mu.is_zero()) return;
    acc += mu * epsilon(ring, te);
  });
  return SElement::canonicalize(std::move(acc));
}

ScalarMatrix eta_change_of_basis(const ProductRing& ring) {
  const size_t zero = ring.ideal_index(ring.zero_ideal());
  std::vector<size_t> nonzero;
  for (size_t i = 0; i < ring.ideal_count(); ++i)
    if (i != zero) nonzero.push_back(i);

  ScalarMatrix m(nonzero.size(), std::vector<Scalar>(nonzero.size(), Scalar(0)));
  for (size_t row = 0; row < nonzero.size(); ++row) {
    const IdealExponent& x = ring.ideal_reps()[nonzero[row]];
    std::vector<int> bound = orth_bound(ring, x);
    for (size_t col = 0; col < nonzero.size(); ++col) {
      const IdealExponent& t = ring.ideal_reps()[nonzero[col]];
      bool in_range = true;
      for (size_t i = 0; i < bound.size(); ++i)
        if (t.e[i] > bound[i]) {
          in_range = false;
          break;
        }
      if (!in_range) continue;
      m[row][col] = mobius_zero_closed(ring, ring.ideal_product(x, t));
    }
  }
  return m;
}

Scalar corr_eta_closed(const Weight& w, const IdealExponent& x, const IdealExponent& y) {
  const ProductRing& ring = w.ring();
  if (x == ring.zero_ideal())
    throw std::domain_error("corr_eta_closed is not defined at the zero ideal");
  (void)ring.ideal_index(y);
  if (!ring.leq_ideal(x, y)) return Scalar(0);
  Scalar sum(0);
  for_each_exponent_below(orth_bound(ring, x), [&](const std::vector<int>& t) {
    IdealExponent te{t};
    Scalar mu = mobius_zero_closed(ring, ring.ideal_product(x, te));
    if (mu.is_zero()) return;
    sum += mu * w.at_exponent(ring.ideal_product(te, y));
  });
  return sum;
}

}  // namespace ringweight
