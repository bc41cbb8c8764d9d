#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ringweight {

enum class ChainRingKind { IntegerResidue, TruncatedPoly };

/// One finite chain ring: Z_{p^d} or F_p[x]/(x^d), with p prime and d >= 1.
/// The residue field has q = p elements for both supported kinds; the radical
/// generator is p respectively x, with nilpotency index d.
struct ChainRingSpec {
  ChainRingKind kind = ChainRingKind::IntegerResidue;
  long long p = 0;
  int d = 0;
  long long q = 0;     // residue field size (= p)
  long long size = 0;  // q^d

  static ChainRingSpec integer_residue(long long p, int d);
  static ChainRingSpec truncated_poly(long long p, int d);

  std::string str() const;  // "Z4", "F2x2", ...

  friend bool operator==(const ChainRingSpec&, const ChainRingSpec&) = default;
};

/// Exponent vector (e_1,...,e_r) with 0 <= e_i <= d_i, naming the principal
/// ideal generated by p_1^{e_1}...p_r^{e_r}. The unit ideal is (0,...,0) and
/// the zero ideal is (d_1,...,d_r); containment reverses the componentwise
/// exponent order.
struct IdealExponent {
  std::vector<int> e;

  std::string str() const;  // comma-joined, e.g. "1,0"

  friend bool operator==(const IdealExponent&, const IdealExponent&) = default;
};

/// Ring element as a tuple of per-component encodings in [0, q_i^{d_i}).
/// An integer-residue component stores its residue; a truncated-polynomial
/// component stores sum_j c_j p^j for the coefficient tuple (c_0,...,c_{d-1}).
struct Element {
  std::vector<long long> c;

  friend bool operator==(const Element&, const Element&) = default;
};

/// A finite direct product of finite chain rings. All arithmetic is
/// componentwise and exact. Instances are immutable after construction and
/// safe to share across threads; functions built on a ring reference the
/// ring instance they were created from.
///
/// Element indexing is mixed-radix over the components with component 0 most
/// significant: index(a) = (...((a_0)*m_1 + a_1)*m_2 + ...) with m_i the
/// component sizes, so index 0 is the zero element.
class ProductRing {
 public:
  explicit ProductRing(std::vector<ChainRingSpec> components);

  const std::vector<ChainRingSpec>& components() const { return components_; }
  size_t component_count() const { return components_.size(); }
  size_t size() const { return size_; }
  size_t unit_count() const { return unit_indices_.size(); }
  std::string spec_string() const;  // "Z2*Z4"

  // element indexing
  Element element(size_t index) const;
  size_t index(const Element& a) const;
  std::string render(const Element& a) const;
  std::string render_index(size_t index) const { return render(element(index)); }

  Element zero() const;
  Element one() const;

  // componentwise ring operations; operands must belong to this ring
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;

  // index-level fast paths (table-backed at desk scale)
  size_t add_index(size_t a, size_t b) const;
  size_t neg_index(size_t a) const;
  size_t mul_index(size_t a, size_t b) const;

  bool is_zero(const Element& a) const;
  bool is_unit(const Element& a) const;
  std::optional<Element> inverse(const Element& a) const;

  /// Componentwise largest i with a_i in rad^i; a zero component gives d_i.
  IdealExponent valuation(const Element& a) const;
  /// Index into ideal_reps() of valuation(element(elem_index)).
  size_t valuation_index(size_t elem_index) const { return val_of_elem_[elem_index]; }

  /// All Prod(d_i + 1) ideal representatives, sorted by exponent sum
  /// ascending (larger ideals first) with lexicographic tie-break.
  const std::vector<IdealExponent>& ideal_reps() const { return ideal_reps_; }
  size_t ideal_count() const { return ideal_reps_.size(); }
  size_t ideal_index(const IdealExponent& e) const;

  /// The literal product p_1^{e_1}...p_r^{e_r}.
  Element rep_element(const IdealExponent& e) const;

  IdealExponent unit_ideal() const;  // (0,...,0)
  IdealExponent zero_ideal() const;  // (d_1,...,d_r)
  IdealExponent socle_rep() const;   // (d_1-1,...,d_r-1)
  IdealExponent orth(const IdealExponent& e) const;  // (d_i - e_i)

  /// Exponent of rep(e)*rep(f): min(e_i + f_i, d_i).
  IdealExponent ideal_product(const IdealExponent& e, const IdealExponent& f) const;

  /// Ideal containment R*rep(e) <= R*rep(f), i.e. e_i >= f_i for all i.
  bool leq_ideal(const IdealExponent& e, const IdealExponent& f) const;

  size_t ideal_size(const IdealExponent& e) const;  // |Re| = Prod q^(d_i - e_i)
  /// |R^x rep(e)| = Prod (q^(d_i-e_i) - q^(d_i-e_i-1)), factor 1 when e_i = d_i.
  size_t orbit_size(const IdealExponent& e) const;
  /// Ascending element indices of the unit orbit R^x rep(e).
  const std::vector<size_t>& orbit_elements(const IdealExponent& e) const;

  /// Ascending element indices of R^x.
  const std::vector<size_t>& unit_indices() const { return unit_indices_; }

 private:
  std::vector<ChainRingSpec> components_;
  size_t size_ = 0;
  std::vector<long long> strides_;
  std::vector<IdealExponent> ideal_reps_;
  std::vector<size_t> exponent_code_to_ideal_;  // mixed-radix exponent code -> E index
  std::vector<size_t> val_of_elem_;
  std::vector<std::vector<size_t>> orbit_elems_;
  std::vector<size_t> unit_indices_;
  std::vector<size_t> inverse_of_unit_;  // element index -> inverse index (units only)
  std::vector<unsigned> add_table_;
  std::vector<unsigned> mul_table_;
  std::vector<unsigned> neg_table_;
  bool tables_built_ = false;

  void check_element(const Element& a) const;
  void check_exponent(const IdealExponent& e) const;
  size_t exponent_code(const IdealExponent& e) const;
};

/// Parses the ring grammar: components joined by '*', each either Z<n> with
/// n a prime power (Z4, Z9, ...) or F<p>x<d> meaning F_p[x]/(x^d) (F2x2).
/// Whitespace is ignored. Throws std::invalid_argument naming the offending
/// token and its position.
ProductRing parse_ring(std::string_view spec);

/// Component list for the same grammar, for callers that construct the ring
/// themselves.
std::vector<ChainRingSpec> parse_ring_components(std::string_view spec);

}  // namespace ringweight
