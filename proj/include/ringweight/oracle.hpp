#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringweight/fnr.hpp"
#include "ringweight/ring.hpp"
#include "ringweight/scalar.hpp"
#include "ringweight/weights.hpp"

namespace ringweight {

/// Thrown when an enumeration would exceed its configured budget.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

struct OracleBudgets {
  size_t max_space = 4096;    // cap on |R|^n; exceeding it is an error
  size_t max_codes = 100000;  // cap on distinct submodules; exceeding it is an error
  size_t max_maps = 1000000;  // generator-image assignments per code; sweeps skip past it
};

/// A tuple of element indices, one per coordinate of R^n.
using Tuple = std::vector<size_t>;

size_t tuple_flat(const ProductRing& ring, const Tuple& t);
Tuple tuple_unflat(const ProductRing& ring, size_t n, size_t flat);
Tuple tuple_add(const ProductRing& ring, const Tuple& a, const Tuple& b);
Tuple tuple_scale(const ProductRing& ring, size_t r, const Tuple& x);  // r * x

/// A linear code: a submodule of R^n held as an explicit element set plus a
/// generator list whose span is the set. Construction verifies the closure
/// invariants by enumeration.
class Code {
 public:
  Code(const ProductRing& ring, size_t n, std::vector<Tuple> generators);

  const ProductRing& ring() const { return *ring_; }
  size_t length() const { return n_; }
  size_t size() const { return elements_.size(); }
  const std::vector<size_t>& elements() const { return elements_; }  // ascending flat indices
  const std::vector<Tuple>& generators() const { return generators_; }

  bool contains(size_t flat) const;
  size_t position_of(size_t flat) const;  // throws std::out_of_range when absent
  Tuple element_tuple(size_t position) const;

 private:
  const ProductRing* ring_;
  size_t n_;
  std::vector<size_t> elements_;
  std::vector<Tuple> generators_;
};

/// A module homomorphism C -> R^n stored as a full value table (image per
/// element of the code, in elements() order). Construction re-verifies
/// additivity and scalar compatibility over all tabled pairs.
class LinearMap {
 public:
  LinearMap(Code domain, std::vector<Tuple> images);

  const Code& domain() const { return domain_; }
  const std::vector<Tuple>& images() const { return images_; }
  Tuple apply(const Tuple& x) const;
  bool is_injective() const;

 private:
  Code domain_;
  std::vector<Tuple> images_;
};

/// Coordinate permutation with unit scaling: output coordinate i is
/// x[perm[i]] * unit[i].
struct Monomial {
  std::vector<size_t> perm;
  std::vector<size_t> units;  // element indices

  Tuple apply(const ProductRing& ring, const Tuple& x) const;
};

/// All distinct submodules of R^n generated by at most max_gens elements,
/// deduplicated by element set and ordered by (size, element list). For
/// max_gens = n this is every submodule.
std::vector<Code> enumerate_codes(const ProductRing& ring, size_t n, size_t max_gens,
                                  const OracleBudgets& budgets = {});

/// All linear maps C -> R^n preserving the tuple-extended weight pointwise,
/// enumerated via generator images with full coefficient propagation.
std::vector<LinearMap> enumerate_isometries(const Code& code, const FnR& w,
                                            const OracleBudgets& budgets = {});
std::vector<LinearMap> enumerate_isometries(const Code& code, const Weight& w,
                                            const OracleBudgets& budgets = {});

/// Searches all n! |G|^n G-monomial transformations for one whose
/// restriction to the domain code equals the map.
std::optional<Monomial> extends_to_monomial(const LinearMap& map, const SymmetryGroup& group);

struct ExtensionWitness {
  LinearMap map;  // carries its domain code
};

struct ExtensionReport {
  std::string ring;
  std::string weight;
  size_t n = 0;
  size_t codes_total = 0;
  size_t codes_examined = 0;
  size_t codes_skipped = 0;  // budget-exceeded codes, reported not fatal
  size_t isometries_found = 0;
  size_t extendable = 0;
  std::vector<ExtensionWitness> witnesses;  // non-extendable isometries
};

/// Sweeps every enumerated code and every enumerated w-isometry, recording
/// whether a G-monomial extension exists with G = Sym_r(w).
ExtensionReport verify_extension_theorem(const ProductRing& ring, const Weight& w, size_t n,
                                         const OracleBudgets& budgets = {},
                                         const std::string& weight_name = "weight");
ExtensionReport verify_extension_theorem(const ProductRing& ring, const FnR& w,
                                         const SymmetryGroup& group, size_t n,
                                         const OracleBudgets& budgets = {},
                                         const std::string& weight_name = "fn");

/// True iff map is a (w (*) s)-isometry. Requires map to be a w-isometry
/// and throws std::invalid_argument otherwise; a false return would refute
/// the correlation-isometry lemma.
bool check_lemiso(const LinearMap& map, const FnR& w, const FnR& s);
bool check_lemiso(const LinearMap& map, const Weight& w, const FnR& s);

}  // namespace ringweight
