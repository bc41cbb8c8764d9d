#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringweight/ring.hpp"
#include "ringweight/scalar.hpp"

namespace ringweight {

/// A finite poset over indexed elements, stored as an explicit relation
/// table. Construction verifies reflexivity, antisymmetry and transitivity.
class FinitePoset {
 public:
  explicit FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels = {});

  size_t size() const { return leq_.size(); }
  bool leq(size_t x, size_t y) const { return leq_[x][y]; }
  const std::string& label(size_t x) const { return labels_[x]; }

  std::optional<size_t> least() const;
  std::optional<size_t> greatest() const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::string> labels_;
};

/// Dense table of mu(x,y); zero for x not <= y, mu(x,x) = 1.
class MobiusTable {
 public:
  MobiusTable(size_t n, std::vector<Scalar> values);
  size_t size() const { return n_; }
  const Scalar& value(size_t x, size_t y) const { return values_[x * n_ + y]; }

 private:
  size_t n_;
  std::vector<Scalar> values_;
};

/// Mobius function of an arbitrary finite poset by the downward recursion
/// mu(x,y) = -sum_{x <= z < y} mu(x,z).
MobiusTable mobius_poset(const FinitePoset& poset);

/// Given g, returns f with g(x) = sum_{y <= x} f(y), computed as
/// f(x) = sum_{y <= x} g(y) mu(y,x). Requires a least element.
std::vector<Scalar> mobius_invert(const FinitePoset& poset, const std::vector<Scalar>& g);

/// The lattice of principal ideals {Re | e in E} ordered by containment,
/// indexed compatibly with ring.ideal_reps().
FinitePoset ideal_lattice(const ProductRing& ring);

/// mu(Re, Rf) on the ideal lattice: componentwise product of the chain
/// values (1 when e_i = f_i, -1 when e_i = f_i + 1, 0 otherwise).
Scalar mobius_pair(const ProductRing& ring, const IdealExponent& e, const IdealExponent& f);

/// mu(0, Re) in closed form: (-1)^(sum(d_i - e_i)) when Re lies in the
/// socle (all e_i >= d_i - 1), 0 otherwise.
Scalar mobius_zero_closed(const ProductRing& ring, const IdealExponent& e);

}  // namespace ringweight
