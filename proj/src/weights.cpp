#include "ringweight/weights.hpp"

#include <algorithm>
#include <stdexcept>

#include "ringweight/mobius.hpp"

namespace ringweight {

SymmetryGroup::SymmetryGroup(const ProductRing& ring, std::vector<size_t> unit_indices)
    : ring_(&ring), indices_(std::move(unit_indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  for (size_t u : indices_)
    if (!ring.is_unit(ring.element(u)))
      throw std::invalid_argument("symmetry group members must be units");
  if (!is_subgroup())
    throw std::invalid_argument("symmetry group members must form a subgroup of the units");
}

bool SymmetryGroup::contains(size_t element_index) const {
  return std::binary_search(indices_.begin(), indices_.end(), element_index);
}

bool SymmetryGroup::contains_all(const SymmetryGroup& other) const {
  return std::includes(indices_.begin(), indices_.end(), other.indices_.begin(),
                       other.indices_.end());
}

bool SymmetryGroup::is_subgroup() const {
  size_t one = ring_->index(ring_->one());
  if (!contains(one)) return false;
  for (size_t u : indices_) {
    auto inv = ring_->inverse(ring_->element(u));
    if (!inv || !contains(ring_->index(*inv))) return false;
    for (size_t v : indices_)
      if (!contains(ring_->mul_index(u, v))) return false;
  }
  return true;
}

SymmetryGroup sym_left(const FnR& f) {
  const ProductRing& ring = f.ring();
  std::vector<size_t> out;
  for (size_t u : ring.unit_indices()) {
    bool ok = true;
    for (size_t x = 0; x < ring.size() && ok; ++x) ok = f[x] == f[ring.mul_index(u, x)];
    if (ok) out.push_back(u);
  }
  return SymmetryGroup(ring, std::move(out));
}

SymmetryGroup sym_right(const FnR& f) {
  const ProductRing& ring = f.ring();
  std::vector<size_t> out;
  for (size_t u : ring.unit_indices()) {
    bool ok = true;
    for (size_t x = 0; x < ring.size() && ok; ++x) ok = f[x] == f[ring.mul_index(x, u)];
    if (ok) out.push_back(u);
  }
  return SymmetryGroup(ring, std::move(out));
}

bool is_invariant(const FnR& f) {
  return sym_left(f).is_full_unit_group() && sym_right(f).is_full_unit_group();
}

Weight::Weight(const ProductRing& ring, std::vector<Scalar> values)
    : ring_(&ring), values_(std::move(values)) {}

Weight Weight::from_values(const ProductRing& ring, std::vector<Scalar> values) {
  if (values.size() != ring.ideal_count())
    throw std::invalid_argument("weight value count must equal |E|");
  if (!values[ring.ideal_index(ring.zero_ideal())].is_zero())
    throw std::invalid_argument("weight must vanish at the zero ideal");
  return Weight(ring, std::move(values));
}

Weight Weight::from_table(const ProductRing& ring,
                          const std::map<std::vector<int>, Scalar>& table) {
  std::vector<Scalar> values(ring.ideal_count(), Scalar(0));
  std::vector<bool> covered(ring.ideal_count(), false);
  const size_t zero = ring.ideal_index(ring.zero_ideal());
  for (const auto& [exps, value] : table) {
    IdealExponent e{exps};
    size_t ei = 0;
    try {
      ei = ring.ideal_index(e);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("weight table key '" + e.str() +
                                  "' is not an ideal exponent of this ring");
    }
    if (ei == zero) {
      if (!value.is_zero())
        throw std::invalid_argument("weight table assigns a nonzero value at the zero ideal");
      continue;
    }
    values[ei] = value;
    covered[ei] = true;
  }
  for (size_t i = 0; i < ring.ideal_count(); ++i)
    if (i != zero && !covered[i])
      throw std::invalid_argument("weight table is missing exponent '" +
                                  ring.ideal_reps()[i].str() + "'");
  return Weight(ring, std::move(values));
}

const Scalar& Weight::at_exponent(const IdealExponent& e) const {
  return values_[ring_->ideal_index(e)];
}

const Scalar& Weight::at(const Element& a) const {
  return values_[ring_->valuation_index(ring_->index(a))];
}

const Scalar& Weight::at_index(size_t element_index) const {
  return values_[ring_->valuation_index(element_index)];
}

FnR Weight::expand() const {
  FnR f(*ring_);
  for (size_t x = 0; x < ring_->size(); ++x) f[x] = values_[ring_->valuation_index(x)];
  return f;
}

Weight operator*(const Scalar& s, const Weight& w) {
  std::vector<Scalar> values = w.values_;
  for (auto& v : values) v *= s;
  return Weight(*w.ring_, std::move(values));
}

Weight hamming(const ProductRing& ring) {
  std::vector<Scalar> values(ring.ideal_count(), Scalar(1));
  values[ring.ideal_index(ring.zero_ideal())] = Scalar(0);
  return Weight::from_values(ring, std::move(values));
}

Weight homogeneous(const ProductRing& ring) {
  std::vector<Scalar> values(ring.ideal_count(), Scalar(0));
  for (size_t i = 0; i < ring.ideal_count(); ++i) {
    const IdealExponent& e = ring.ideal_reps()[i];
    Scalar mu = mobius_zero_closed(ring, e);
    Scalar orbit(static_cast<long long>(ring.orbit_size(e)));
    values[i] = Scalar(1) - mu / orbit;
  }
  // The formula itself gives 0 at the zero ideal: mu(0,0) = 1 over orbit 1.
  return Weight::from_values(ring, std::move(values));
}

std::optional<Scalar> homogeneity_constant(const Weight& w) {
  const ProductRing& ring = w.ring();
  std::optional<Scalar> c;
  const size_t zero = ring.ideal_index(ring.zero_ideal());
  for (size_t i = 0; i < ring.ideal_count(); ++i) {
    if (i == zero) continue;
    const IdealExponent& e = ring.ideal_reps()[i];
    Scalar sum(0);
    for (size_t j = 0; j < ring.ideal_count(); ++j) {
      const IdealExponent& f = ring.ideal_reps()[j];
      if (!ring.leq_ideal(f, e)) continue;  // orbit of f lies in Re iff Rf <= Re
      sum += Scalar(static_cast<long long>(ring.orbit_size(f))) * w.values()[j];
    }
    Scalar avg = sum / Scalar(static_cast<long long>(ring.ideal_size(e)));
    if (!c)
      c = avg;
    else if (!(*c == avg))
      return std::nullopt;
  }
  return c;
}

Scalar weight_on_tuple(const Weight& w, const std::vector<Element>& x) {
  Scalar sum(0);
  for (const auto& a : x) sum += w.at(a);
  return sum;
}

}  // namespace ringweight
