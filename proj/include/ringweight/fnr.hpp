#pragma once

#include <vector>

#include "ringweight/ring.hpp"
#include "ringweight/scalar.hpp"

namespace ringweight {

/// A total function R -> Scalar stored as a dense table over element
/// indices. Functions are tied to the ring instance they were built from;
/// binary operations require both operands to come from the same instance.
class FnR {
 public:
  explicit FnR(const ProductRing& ring) : ring_(&ring), table_(ring.size(), Scalar(0)) {}
  FnR(const ProductRing& ring, std::vector<Scalar> table);

  const ProductRing& ring() const { return *ring_; }
  size_t size() const { return table_.size(); }
  const std::vector<Scalar>& table() const { return table_; }

  const Scalar& operator[](size_t index) const { return table_[index]; }
  Scalar& operator[](size_t index) { return table_[index]; }
  const Scalar& at(const Element& a) const { return table_[ring_->index(a)]; }

  FnR& operator+=(const FnR& rhs);
  FnR& operator-=(const FnR& rhs);
  FnR& operator*=(const Scalar& s);

  friend FnR operator+(FnR lhs, const FnR& rhs) { return lhs += rhs; }
  friend FnR operator-(FnR lhs, const FnR& rhs) { return lhs -= rhs; }
  friend FnR operator*(const Scalar& s, FnR f) { return f *= s; }
  friend bool operator==(const FnR& a, const FnR& b) {
    return a.ring_ == b.ring_ && a.table_ == b.table_;
  }

 private:
  const ProductRing* ring_;
  std::vector<Scalar> table_;
};

/// Indicator of a single element; delta of 1 is the convolution identity.
FnR delta(const ProductRing& ring, const Element& r);
FnR delta_index(const ProductRing& ring, size_t index);

/// Indicator of a set of elements (duplicates collapse).
FnR delta_set(const ProductRing& ring, const std::vector<Element>& a);

/// Throws std::invalid_argument unless both functions live on the same ring
/// instance.
void require_same_ring(const FnR& a, const FnR& b);

}  // namespace ringweight
