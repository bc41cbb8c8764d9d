#pragma once

#include <vector>

#include "ringweight/fnr.hpp"
#include "ringweight/linalg.hpp"
#include "ringweight/ring.hpp"
#include "ringweight/scalar.hpp"
#include "ringweight/weights.hpp"

namespace ringweight {

/// Multiplicative convolution (f * g)(x) = sum_{ab=x} f(a) g(b).
FnR convolve(const FnR& f, const FnR& g);

/// Left correlation (f (*)' w)(x) = sum_r f(r) w(xr).
FnR corr_left(const FnR& f, const FnR& w);

/// Right correlation (w (*) g)(x) = sum_r w(rx) g(r).
FnR corr_right(const FnR& w, const FnR& g);

/// Canonical representative of a class in the invariant subalgebra S:
/// constant on unit orbits with value 0 at the zero element. The value at 0
/// is the coset degree of freedom and is normalized away on construction.
class SElement {
 public:
  /// Zeroes the entry at 0 and verifies unit-orbit invariance.
  static SElement canonicalize(FnR f);

  const FnR& fn() const { return fn_; }
  const ProductRing& ring() const { return fn_.ring(); }

  /// Coordinates over the epsilon basis indexed by the nonzero ideals in
  /// ideal_reps() order.
  std::vector<Scalar> epsilon_coords() const;

  friend bool operator==(const SElement& a, const SElement& b) { return a.fn_ == b.fn_; }

 private:
  explicit SElement(FnR fn) : fn_(std::move(fn)) {}
  FnR fn_;
};

/// The normalized orbit indicator eps_e = delta_{R^x e} / |R^x e|. Defined
/// for every e including the zero ideal, where it is delta_0 (which the
/// canonical S-representative convention sets aside).
FnR epsilon(const ProductRing& ring, const IdealExponent& e);

/// eta_x = sum over t with Rx^orth <= Rt of mu(0, Rxt) eps_t, as a canonical
/// S-representative. x must not be the zero ideal.
SElement eta(const ProductRing& ring, const IdealExponent& x);

/// Matrix expressing each eta_x in the epsilon basis; rows and columns are
/// indexed by the nonzero ideals in ideal_reps() order.
ScalarMatrix eta_change_of_basis(const ProductRing& ring);

/// Closed form of (w (*) eta_x) at rep(y): sum over t with Rx^orth <= Rt of
/// mu(0,Rxt) w(ty) when Rx <= Ry, and 0 otherwise. x must not be the zero
/// ideal.
Scalar corr_eta_closed(const Weight& w, const IdealExponent& x, const IdealExponent& y);

}  // namespace ringweight
