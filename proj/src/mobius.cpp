#include "ringweight/mobius.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ringweight {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels)
    : leq_(std::move(leq)), labels_(std::move(labels)) {
  const size_t n = leq_.size();
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("poset relation table must be square");
  for (size_t x = 0; x < n; ++x)
    if (!leq_[x][x]) throw std::invalid_argument("poset relation is not reflexive");
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      if (x != y && leq_[x][y] && leq_[y][x])
        throw std::invalid_argument("poset relation is not antisymmetric");
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      if (!leq_[x][y]) continue;
      for (size_t z = 0; z < n; ++z)
        if (leq_[y][z] && !leq_[x][z])
          throw std::invalid_argument("poset relation is not transitive");
    }
  if (labels_.empty()) {
    labels_.reserve(n);
    for (size_t x = 0; x < n; ++x) labels_.push_back(std::to_string(x));
  }
  if (labels_.size() != n) throw std::invalid_argument("poset label count mismatch");
}

std::optional<size_t> FinitePoset::least() const {
  for (size_t z = 0; z < size(); ++z) {
    bool below_all = true;
    for (size_t y = 0; y < size(); ++y)
      if (!leq_[z][y]) {
        below_all = false;
        break;
      }
    if (below_all) return z;
  }
  return std::nullopt;
}

std::optional<size_t> FinitePoset::greatest() const {
  for (size_t z = 0; z < size(); ++z) {
    bool above_all = true;
    for (size_t y = 0; y < size(); ++y)
      if (!leq_[y][z]) {
        above_all = false;
        break;
      }
    if (above_all) return z;
  }
  return std::nullopt;
}

MobiusTable::MobiusTable(size_t n, std::vector<Scalar> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) throw std::invalid_argument("mobius table size mismatch");
}

MobiusTable mobius_poset(const FinitePoset& poset) {
  const size_t n = poset.size();
  // Process second arguments along a linear extension so that every z < y is
  // finished before y.
  std::vector<size_t> below_count(n, 0);
  for (size_t y = 0; y < n; ++y)
    for (size_t z = 0; z < n; ++z)
      if (poset.leq(z, y)) ++below_count[y];
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (below_count[a] != below_count[b]) return below_count[a] < below_count[b];
    return a < b;
  });

  std::vector<Scalar> values(n * n, Scalar(0));
  for (size_t x = 0; x < n; ++x) {
    for (size_t y : order) {
      if (!poset.leq(x, y)) continue;
      if (x == y) {
        values[x * n + y] = Scalar(1);
        continue;
      }
      Scalar sum(0);
      for (size_t z = 0; z < n; ++z)
        if (z != y && poset.leq(x, z) && poset.leq(z, y)) sum += values[x * n + z];
      values[x * n + y] = -sum;
    }
  }
  return MobiusTable(n, std::move(values));
}

std::vector<Scalar> mobius_invert(const FinitePoset& poset, const std::vector<Scalar>& g) {
  if (g.size() != poset.size()) throw std::invalid_argument("mobius_invert: size mismatch");
  if (!poset.least()) throw std::domain_error("mobius_invert requires a least element");
  MobiusTable mu = mobius_poset(poset);
  std::vector<Scalar> f(poset.size(), Scalar(0));
  for (size_t x = 0; x < poset.size(); ++x) {
    Scalar sum(0);
    for (size_t y = 0; y < poset.size(); ++y)
      if (poset.leq(y, x)) sum += g[y] * mu.value(y, x);
    f[x] = sum;
  }
  return f;
}

FinitePoset ideal_lattice(const ProductRing& ring) {
  const auto& reps = ring.ideal_reps();
  const size_t n = reps.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    labels.push_back(reps[i].str());
    for (size_t j = 0; j < n; ++j) leq[i][j] = ring.leq_ideal(reps[i], reps[j]);
  }
  return FinitePoset(std::move(leq), std::move(labels));
}

Scalar mobius_pair(const ProductRing& ring, const IdealExponent& e, const IdealExponent& f) {
  // range validation via the ring
  (void)ring.ideal_index(e);
  (void)ring.ideal_index(f);
  long long sign = 1;
  for (size_t i = 0; i < e.e.size(); ++i) {
    if (e.e[i] == f.e[i]) continue;
    if (e.e[i] == f.e[i] + 1)
      sign = -sign;
    else
      return Scalar(0);
  }
  return Scalar(sign);
}

Scalar mobius_zero_closed(const ProductRing& ring, const IdealExponent& e) {
  (void)ring.ideal_index(e);
  int total = 0;
  for (size_t i = 0; i < e.e.size(); ++i) {
    int gap = ring.components()[i].d - e.e[i];
    if (gap > 1) return Scalar(0);  // Re not inside the socle
    total += gap;
  }
  return Scalar(total % 2 == 0 ? 1 : -1);
}

}  // namespace ringweight
