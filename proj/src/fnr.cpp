#include "ringweight/fnr.hpp"

#include <stdexcept>

namespace ringweight {

FnR::FnR(const ProductRing& ring, std::vector<Scalar> table)
    : ring_(&ring), table_(std::move(table)) {
  if (table_.size() != ring.size()) throw std::invalid_argument("function table length must equal |R|");
}

FnR& FnR::operator+=(const FnR& rhs) {
  require_same_ring(*this, rhs);
  for (size_t i = 0; i < table_.size(); ++i) table_[i] += rhs.table_[i];
  return *this;
}

FnR& FnR::operator-=(const FnR& rhs) {
  require_same_ring(*this, rhs);
  for (size_t i = 0; i < table_.size(); ++i) table_[i] -= rhs.table_[i];
  return *this;
}

FnR& FnR::operator*=(const Scalar& s) {
  for (auto& v : table_) v *= s;
  return *this;
}

FnR delta(const ProductRing& ring, const Element& r) { return delta_index(ring, ring.index(r)); }

FnR delta_index(const ProductRing& ring, size_t index) {
  FnR f(ring);
  f[index] = Scalar(1);
  return f;
}

FnR delta_set(const ProductRing& ring, const std::vector<Element>& a) {
  FnR f(ring);
  for (const auto& x : a) f[ring.index(x)] = Scalar(1);
  return f;
}

void require_same_ring(const FnR& a, const FnR& b) {
  if (&a.ring() != &b.ring())
    throw std::invalid_argument("operands live on different rings");
}

}  // namespace ringweight
