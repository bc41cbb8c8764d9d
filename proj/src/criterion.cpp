#include "ringweight/criterion.hpp"

#include <algorithm>

#include "ringweight/linalg.hpp"
#include "ringweight/mobius.hpp"

namespace ringweight {

std::vector<std::pair<IdealExponent, Scalar>> criterion_values(const Weight& w) {
  const ProductRing& ring = w.ring();
  const size_t zero = ring.ideal_index(ring.zero_ideal());
  std::vector<std::pair<IdealExponent, Scalar>> out;
  out.reserve(ring.ideal_count() - 1);
  for (size_t i = 0; i < ring.ideal_count(); ++i) {
    if (i == zero) continue;
    const IdealExponent& x = ring.ideal_reps()[i];
    // sum over t with t_i <= d_i - x_i; there xt has exponent x + t
    Scalar value(0);
    std::vector<int> t(x.e.size(), 0);
    for (;;) {
      IdealExponent xt = x;
      for (size_t k = 0; k < t.size(); ++k) xt.e[k] += t[k];
      Scalar mu = mobius_zero_closed(ring, xt);
      if (!mu.is_zero()) value += mu * w.at_exponent(xt);
      size_t k = t.size();
      while (k-- > 0) {
        if (t[k] < ring.components()[k].d - x.e[k]) {
          ++t[k];
          std::fill(t.begin() + static_cast<long>(k) + 1, t.end(), 0);
          break;
        }
        if (k == 0) goto next_x;
      }
    }
  next_x:
    out.emplace_back(x, value);
  }
  return out;
}

CriterionReport criterion_check(const Weight& w) {
  CriterionReport report;
  report.ring = w.ring().spec_string();
  report.pass = true;
  for (auto& [x, value] : criterion_values(w)) {
    bool pass = !value.is_zero();
    report.pass = report.pass && pass;
    report.entries.push_back({x, value, pass});
  }
  return report;
}

std::optional<SElement> solve_to_hamming(const Weight& w) {
  const ProductRing& ring = w.ring();
  const size_t zero = ring.ideal_index(ring.zero_ideal());
  std::vector<size_t> nonzero;
  for (size_t i = 0; i < ring.ideal_count(); ++i)
    if (i != zero) nonzero.push_back(i);
  const size_t n = nonzero.size();

  // Row y, column x: (w (*) eta_x)(rep y). The Hamming weight is 1 on every
  // nonzero ideal and both sides vanish at 0.
  ScalarMatrix a(n, std::vector<Scalar>(n));
  std::vector<Scalar> b(n, Scalar(1));
  for (size_t row = 0; row < n; ++row)
    for (size_t col = 0; col < n; ++col)
      a[row][col] =
          corr_eta_closed(w, ring.ideal_reps()[nonzero[col]], ring.ideal_reps()[nonzero[row]]);

  auto coeffs = solve_linear(std::move(a), std::move(b));
  if (!coeffs) return std::nullopt;

  FnR acc(ring);
  for (size_t col = 0; col < n; ++col) {
    if ((*coeffs)[col].is_zero()) continue;
    acc += (*coeffs)[col] * eta(ring, ring.ideal_reps()[nonzero[col]]).fn();
  }
  SElement h = SElement::canonicalize(std::move(acc));
  if (!(corr_right(w.expand(), h.fn()) == hamming(ring).expand())) return std::nullopt;
  return h;
}

}  // namespace ringweight
