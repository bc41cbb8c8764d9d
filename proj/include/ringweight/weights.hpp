#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ringweight/fnr.hpp"
#include "ringweight/ring.hpp"
#include "ringweight/scalar.hpp"

namespace ringweight {

/// A set of units closed under multiplication and inverse (the closure is an
/// invariant callers can check with is_subgroup; the sym_* constructors
/// always produce genuine subgroups).
class SymmetryGroup {
 public:
  SymmetryGroup(const ProductRing& ring, std::vector<size_t> unit_indices);

  const ProductRing& ring() const { return *ring_; }
  size_t size() const { return indices_.size(); }
  const std::vector<size_t>& indices() const { return indices_; }
  bool contains(size_t element_index) const;
  bool contains_all(const SymmetryGroup& other) const;
  bool is_full_unit_group() const { return indices_.size() == ring_->unit_count(); }

  /// Verifies the subgroup axioms by enumeration.
  bool is_subgroup() const;

  friend bool operator==(const SymmetryGroup& a, const SymmetryGroup& b) {
    return a.ring_ == b.ring_ && a.indices_ == b.indices_;
  }

 private:
  const ProductRing* ring_;
  std::vector<size_t> indices_;  // ascending element indices
};

/// Sym_l(f) = {u unit | f(x) = f(ux) for all x}.
SymmetryGroup sym_left(const FnR& f);
/// Sym_r(f) = {u unit | f(xu) = f(x) for all x}.
SymmetryGroup sym_right(const FnR& f);
/// True iff both symmetry groups are the full unit group.
bool is_invariant(const FnR& f);

/// An invariant weight: value 0 at the zero ideal and one exact value per
/// unit orbit, stored on the ideal representatives E. The dense expansion to
/// a function on R is derived on demand and is invariant by construction.
class Weight {
 public:
  /// Builds from a table keyed by exponent vectors. The keys must cover
  /// every nonzero ideal; the zero-ideal key may be omitted and must map to
  /// zero when present.
  static Weight from_table(const ProductRing& ring,
                           const std::map<std::vector<int>, Scalar>& table);

  /// Values indexed compatibly with ring.ideal_reps(); the zero-ideal entry
  /// must be zero.
  static Weight from_values(const ProductRing& ring, std::vector<Scalar> values);

  const ProductRing& ring() const { return *ring_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& at_exponent(const IdealExponent& e) const;
  const Scalar& at(const Element& a) const;
  const Scalar& at_index(size_t element_index) const;

  FnR expand() const;

  friend Weight operator*(const Scalar& s, const Weight& w);
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.ring_ == b.ring_ && a.values_ == b.values_;
  }

 private:
  Weight(const ProductRing& ring, std::vector<Scalar> values);
  const ProductRing* ring_;
  std::vector<Scalar> values_;
};

/// w_H: 0 at 0 and 1 elsewhere.
Weight hamming(const ProductRing& ring);

/// The normalized homogeneous weight 1 - mu(0,Rx)/|R^x x|.
Weight homogeneous(const ProductRing& ring);

/// Returns c when every nonzero principal ideal averages to the same
/// constant c (sum_{y in Rx} w(y) = c|Rx|), std::nullopt otherwise.
std::optional<Scalar> homogeneity_constant(const Weight& w);

/// Coordinatewise extension w(x_1) + ... + w(x_n); empty tuples give 0.
Scalar weight_on_tuple(const Weight& w, const std::vector<Element>& x);

}  // namespace ringweight
