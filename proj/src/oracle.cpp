#include "ringweight/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ringweight/conv.hpp"

namespace ringweight {

namespace {

size_t space_size(const ProductRing& ring, size_t n, const OracleBudgets& budgets) {
  size_t space = 1;
  for (size_t i = 0; i < n; ++i) {
    if (space > budgets.max_space / ring.size())
      throw budget_error("|R|^n = " + std::to_string(ring.size()) + "^" + std::to_string(n) +
                         " exceeds the space budget " + std::to_string(budgets.max_space));
    space *= ring.size();
  }
  return space;
}

// Tuple-extended value table of a function on R, per flat ambient index.
std::vector<Scalar> tuple_value_table(const ProductRing& ring, size_t n, size_t space,
                                      const std::vector<Scalar>& per_element) {
  std::vector<Scalar> out(space, Scalar(0));
  for (size_t flat = 0; flat < space; ++flat) {
    Scalar sum(0);
    size_t rem = flat;
    for (size_t i = 0; i < n; ++i) {
      sum += per_element[rem % ring.size()];
      rem /= ring.size();
    }
    out[flat] = sum;
  }
  return out;
}

std::vector<size_t> span_extend(const ProductRing& ring, size_t n,
                                const std::vector<size_t>& base, const Tuple& gen) {
  std::set<size_t> out;
  for (size_t flat : base) {
    Tuple x = tuple_unflat(ring, n, flat);
    for (size_t r = 0; r < ring.size(); ++r)
      out.insert(tuple_flat(ring, tuple_add(ring, x, tuple_scale(ring, r, gen))));
  }
  return {out.begin(), out.end()};
}

}  // namespace

size_t tuple_flat(const ProductRing& ring, const Tuple& t) {
  size_t flat = 0;
  for (size_t v : t) flat = flat * ring.size() + v;
  return flat;
}

Tuple tuple_unflat(const ProductRing& ring, size_t n, size_t flat) {
  Tuple t(n, 0);
  for (size_t i = n; i-- > 0;) {
    t[i] = flat % ring.size();
    flat /= ring.size();
  }
  return t;
}

Tuple tuple_add(const ProductRing& ring, const Tuple& a, const Tuple& b) {
  Tuple out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ring.add_index(a[i], b[i]);
  return out;
}

Tuple tuple_scale(const ProductRing& ring, size_t r, const Tuple& x) {
  Tuple out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = ring.mul_index(r, x[i]);
  return out;
}

Code::Code(const ProductRing& ring, size_t n, std::vector<Tuple> generators)
    : ring_(&ring), n_(n), generators_(std::move(generators)) {
  if (n_ == 0) throw std::invalid_argument("code length must be positive");
  for (const auto& g : generators_) {
    if (g.size() != n_) throw std::invalid_argument("generator length mismatch");
    for (size_t v : g)
      if (v >= ring.size()) throw std::invalid_argument("generator entry out of range");
  }
  std::vector<size_t> span{0};
  Tuple zero(n_, 0);
  span[0] = tuple_flat(ring, zero);
  for (const auto& g : generators_) span = span_extend(ring, n_, span, g);
  elements_ = std::move(span);

  // closure invariants, by enumeration
  if (!contains(tuple_flat(ring, zero))) throw std::logic_error("code misses zero");
  for (size_t fa : elements_) {
    Tuple a = tuple_unflat(ring, n_, fa);
    for (size_t fb : elements_)
      if (!contains(tuple_flat(ring, tuple_add(ring, a, tuple_unflat(ring, n_, fb)))))
        throw std::logic_error("code is not closed under addition");
    for (size_t r = 0; r < ring.size(); ++r)
      if (!contains(tuple_flat(ring, tuple_scale(ring, r, a))))
        throw std::logic_error("code is not closed under scalar multiplication");
  }
}

bool Code::contains(size_t flat) const {
  return std::binary_search(elements_.begin(), elements_.end(), flat);
}

size_t Code::position_of(size_t flat) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), flat);
  if (it == elements_.end() || *it != flat) throw std::out_of_range("element not in code");
  return static_cast<size_t>(it - elements_.begin());
}

Tuple Code::element_tuple(size_t position) const {
  return tuple_unflat(*ring_, n_, elements_[position]);
}

LinearMap::LinearMap(Code domain, std::vector<Tuple> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) throw std::invalid_argument("image table size mismatch");
  const ProductRing& ring = domain_.ring();
  for (size_t pa = 0; pa < domain_.size(); ++pa) {
    Tuple a = domain_.element_tuple(pa);
    for (size_t pb = 0; pb < domain_.size(); ++pb) {
      Tuple sum = tuple_add(ring, a, domain_.element_tuple(pb));
      if (images_[domain_.position_of(tuple_flat(ring, sum))] !=
          tuple_add(ring, images_[pa], images_[pb]))
        throw std::logic_error("map table is not additive");
    }
    for (size_t r = 0; r < ring.size(); ++r) {
      Tuple rx = tuple_scale(ring, r, a);
      if (images_[domain_.position_of(tuple_flat(ring, rx))] !=
          tuple_scale(ring, r, images_[pa]))
        throw std::logic_error("map table is not R-linear");
    }
  }
}

Tuple LinearMap::apply(const Tuple& x) const {
  return images_[domain_.position_of(tuple_flat(domain_.ring(), x))];
}

bool LinearMap::is_injective() const {
  std::set<size_t> seen;
  for (const auto& y : images_)
    if (!seen.insert(tuple_flat(domain_.ring(), y)).second) return false;
  return true;
}

Tuple Monomial::apply(const ProductRing& ring, const Tuple& x) const {
  Tuple out(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) out[i] = ring.mul_index(x[perm[i]], units[i]);
  return out;
}

std::vector<Code> enumerate_codes(const ProductRing& ring, size_t n, size_t max_gens,
                                  const OracleBudgets& budgets) {
  if (n == 0) throw std::invalid_argument("code length must be positive");
  if (max_gens > n) throw std::invalid_argument("max_gens must not exceed the length");
  const size_t space = space_size(ring, n, budgets);

  // Breadth-first over submodules, one added generator per layer; the first
  // discovery records a minimal generator list.
  std::map<std::vector<size_t>, std::vector<Tuple>> found;
  std::vector<size_t> zero_code{tuple_flat(ring, Tuple(n, 0))};
  found.emplace(zero_code, std::vector<Tuple>{});
  std::vector<std::vector<size_t>> frontier{zero_code};
  for (size_t depth = 0; depth < max_gens; ++depth) {
    std::vector<std::vector<size_t>> next;
    for (const auto& key : frontier) {
      const std::vector<Tuple> gens = found.at(key);
      for (size_t g = 0; g < space; ++g) {
        Tuple gen = tuple_unflat(ring, n, g);
        std::vector<size_t> grown = span_extend(ring, n, key, gen);
        if (found.count(grown)) continue;
        if (found.size() >= budgets.max_codes)
          throw budget_error("distinct submodule count exceeds the code budget " +
                             std::to_string(budgets.max_codes));
        std::vector<Tuple> grown_gens = gens;
        grown_gens.push_back(gen);
        found.emplace(grown, std::move(grown_gens));
        next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Code> codes;
  codes.reserve(found.size());
  for (const auto& [elements, gens] : found) {
    Code code(ring, n, gens);
    if (code.elements() != elements) throw std::logic_error("span mismatch in code enumeration");
    codes.push_back(std::move(code));
  }
  std::stable_sort(codes.begin(), codes.end(),
                   [](const Code& a, const Code& b) { return a.size() < b.size(); });
  return codes;
}

std::vector<LinearMap> enumerate_isometries(const Code& code, const FnR& w,
                                            const OracleBudgets& budgets) {
  const ProductRing& ring = code.ring();
  if (&ring != &w.ring()) throw std::invalid_argument("weight lives on a different ring");
  const size_t n = code.length();
  const size_t space = space_size(ring, n, budgets);
  const std::vector<Scalar> tw = tuple_value_table(ring, n, space, w.table());

  const auto& gens = code.generators();
  const size_t k = gens.size();
  if (k == 0) {
    // only the zero map, which preserves any weight
    return {LinearMap(code, {Tuple(n, 0)})};
  }

  // candidate images share the generator's weight (a necessary condition)
  std::vector<std::vector<Tuple>> candidates(k);
  size_t assignments = 1;
  for (size_t i = 0; i < k; ++i) {
    const Scalar& target = tw[tuple_flat(ring, gens[i])];
    for (size_t flat = 0; flat < space; ++flat)
      if (tw[flat] == target) candidates[i].push_back(tuple_unflat(ring, n, flat));
    if (candidates[i].empty()) return {};
    if (assignments > budgets.max_maps / candidates[i].size())
      throw budget_error("generator image assignments exceed the map budget " +
                         std::to_string(budgets.max_maps));
    assignments *= candidates[i].size();
  }

  // all coefficient tuples in R^k, for the well-definedness propagation
  std::vector<std::vector<size_t>> coeffs;
  {
    std::vector<size_t> r(k, 0);
    for (;;) {
      coeffs.push_back(r);
      size_t i = k;
      while (i-- > 0) {
        if (++r[i] < ring.size()) break;
        r[i] = 0;
        if (i == 0) goto coeffs_done;
      }
    }
  coeffs_done:;
  }

  std::vector<LinearMap> maps;
  std::vector<size_t> pick(k, 0);
  for (;;) {
    std::vector<Tuple> images(code.size());
    std::vector<char> seen(code.size(), 0);
    bool ok = true;
    for (const auto& r : coeffs) {
      Tuple x(n, 0), y(n, 0);
      for (size_t i = 0; i < k; ++i) {
        x = tuple_add(ring, x, tuple_scale(ring, r[i], gens[i]));
        y = tuple_add(ring, y, tuple_scale(ring, r[i], candidates[i][pick[i]]));
      }
      size_t pos = code.position_of(tuple_flat(ring, x));
      if (!seen[pos]) {
        if (!(tw[tuple_flat(ring, y)] == tw[tuple_flat(ring, x)])) {
          ok = false;
          break;
        }
        images[pos] = std::move(y);
        seen[pos] = 1;
      } else if (images[pos] != y) {
        ok = false;  // inconsistent revisit: not well defined
        break;
      }
    }
    if (ok) {
      if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::logic_error("generators do not span their code");
      maps.emplace_back(code, std::move(images));
    }
    size_t i = k;
    while (i-- > 0) {
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      if (i == 0) return maps;
    }
  }
}

std::vector<LinearMap> enumerate_isometries(const Code& code, const Weight& w,
                                            const OracleBudgets& budgets) {
  return enumerate_isometries(code, w.expand(), budgets);
}

std::optional<Monomial> extends_to_monomial(const LinearMap& map, const SymmetryGroup& group) {
  const Code& code = map.domain();
  const ProductRing& ring = code.ring();
  const size_t n = code.length();

  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  const auto& units = group.indices();
  if (units.empty()) return std::nullopt;
  do {
    std::vector<size_t> pick(n, 0);
    for (;;) {
      Monomial candidate;
      candidate.perm = perm;
      candidate.units.resize(n);
      for (size_t i = 0; i < n; ++i) candidate.units[i] = units[pick[i]];
      bool match = true;
      for (size_t pos = 0; pos < code.size() && match; ++pos)
        match = candidate.apply(ring, code.element_tuple(pos)) == map.images()[pos];
      if (match) return candidate;
      size_t i = n;
      bool done = true;
      while (i-- > 0) {
        if (++pick[i] < units.size()) {
          done = false;
          break;
        }
        pick[i] = 0;
        if (i == 0) break;
      }
      if (done) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

ExtensionReport verify_extension_theorem(const ProductRing& ring, const FnR& w,
                                         const SymmetryGroup& group, size_t n,
                                         const OracleBudgets& budgets,
                                         const std::string& weight_name) {
  ExtensionReport report;
  report.ring = ring.spec_string();
  report.weight = weight_name;
  report.n = n;

  std::vector<Code> codes = enumerate_codes(ring, n, n, budgets);
  report.codes_total = codes.size();
  for (const Code& code : codes) {
    std::vector<LinearMap> isometries;
    try {
      isometries = enumerate_isometries(code, w, budgets);
    } catch (const budget_error&) {
      ++report.codes_skipped;
      continue;
    }
    ++report.codes_examined;
    for (auto& map : isometries) {
      ++report.isometries_found;
      if (extends_to_monomial(map, group))
        ++report.extendable;
      else
        report.witnesses.push_back({std::move(map)});
    }
  }
  return report;
}

ExtensionReport verify_extension_theorem(const ProductRing& ring, const Weight& w, size_t n,
                                         const OracleBudgets& budgets,
                                         const std::string& weight_name) {
  if (&ring != &w.ring()) throw std::invalid_argument("weight lives on a different ring");
  FnR expanded = w.expand();
  return verify_extension_theorem(ring, expanded, sym_right(expanded), n, budgets, weight_name);
}

bool check_lemiso(const LinearMap& map, const FnR& w, const FnR& s) {
  require_same_ring(w, s);
  const Code& code = map.domain();
  const ProductRing& ring = code.ring();
  if (&ring != &w.ring()) throw std::invalid_argument("weight lives on a different ring");
  const size_t n = code.length();
  const size_t space = space_size(ring, n, OracleBudgets{});
  const std::vector<Scalar> tw = tuple_value_table(ring, n, space, w.table());
  for (size_t pos = 0; pos < code.size(); ++pos)
    if (!(tw[code.elements()[pos]] == tw[tuple_flat(ring, map.images()[pos])]))
      throw std::invalid_argument("map is not a w-isometry");

  const std::vector<Scalar> tws =
      tuple_value_table(ring, n, space, corr_right(w, s).table());
  for (size_t pos = 0; pos < code.size(); ++pos)
    if (!(tws[code.elements()[pos]] == tws[tuple_flat(ring, map.images()[pos])])) return false;
  return true;
}

bool check_lemiso(const LinearMap& map, const Weight& w, const FnR& s) {
  return check_lemiso(map, w.expand(), s);
}

}  // namespace ringweight
