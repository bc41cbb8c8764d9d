#include "ringweight/ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ringweight {

namespace {

constexpr size_t kMaxRingSize = 1u << 20;    // dense enumeration guard
constexpr size_t kOpTableLimit = 512;        // index-op tables below this size

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void validate_spec_args(long long p, int d) {
  if (!is_prime(p)) throw std::invalid_argument("chain ring base " + std::to_string(p) + " is not prime");
  if (d < 1) throw std::invalid_argument("chain ring nilpotency index must be at least 1");
}

// --- per-component arithmetic on the [0, p^d) encodings ---

long long comp_add(const ChainRingSpec& s, long long a, long long b) {
  if (s.kind == ChainRingKind::IntegerResidue) return (a + b) % s.size;
  long long r = 0, place = 1;
  for (int j = 0; j < s.d; ++j) {
    r += ((a % s.p + b % s.p) % s.p) * place;
    a /= s.p;
    b /= s.p;
    place *= s.p;
  }
  return r;
}

long long comp_neg(const ChainRingSpec& s, long long a) {
  if (s.kind == ChainRingKind::IntegerResidue) return (s.size - a) % s.size;
  long long r = 0, place = 1;
  for (int j = 0; j < s.d; ++j) {
    r += ((s.p - a % s.p) % s.p) * place;
    a /= s.p;
    place *= s.p;
  }
  return r;
}

long long comp_mul(const ChainRingSpec& s, long long a, long long b) {
  if (s.kind == ChainRingKind::IntegerResidue) return (a * b) % s.size;
  // truncated polynomial product: c_k = sum_{i+j=k} a_i b_j mod p, k < d
  std::vector<long long> da(s.d), db(s.d), dc(s.d, 0);
  for (int j = 0; j < s.d; ++j) {
    da[j] = a % s.p;
    db[j] = b % s.p;
    a /= s.p;
    b /= s.p;
  }
  for (int i = 0; i < s.d; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; i + j < s.d; ++j) dc[i + j] = (dc[i + j] + da[i] * db[j]) % s.p;
  }
  long long r = 0, place = 1;
  for (int j = 0; j < s.d; ++j) {
    r += dc[j] * place;
    place *= s.p;
  }
  return r;
}

int comp_valuation(const ChainRingSpec& s, long long a) {
  if (a == 0) return s.d;
  if (s.kind == ChainRingKind::IntegerResidue) {
    int v = 0;
    while (a % s.p == 0) {
      a /= s.p;
      ++v;
    }
    return v;
  }
  int v = 0;
  while (a % s.p == 0) {
    a /= s.p;
    ++v;
  }
  return v;
}

std::string comp_render(const ChainRingSpec& s, long long a) {
  if (s.kind == ChainRingKind::IntegerResidue) return std::to_string(a);
  if (a == 0) return "0";
  std::string out;
  long long v = a;
  for (int j = 0; j < s.d; ++j) {
    long long cj = v % s.p;
    v /= s.p;
    if (cj == 0) continue;
    if (!out.empty()) out += "+";
    if (j == 0) {
      out += std::to_string(cj);
    } else {
      if (cj != 1) out += std::to_string(cj);
      out += (j == 1) ? "x" : "x^" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace

ChainRingSpec ChainRingSpec::integer_residue(long long p, int d) {
  validate_spec_args(p, d);
  return {ChainRingKind::IntegerResidue, p, d, p, ipow(p, d)};
}

ChainRingSpec ChainRingSpec::truncated_poly(long long p, int d) {
  validate_spec_args(p, d);
  return {ChainRingKind::TruncatedPoly, p, d, p, ipow(p, d)};
}

std::string ChainRingSpec::str() const {
  if (kind == ChainRingKind::IntegerResidue) return "Z" + std::to_string(size);
  return "F" + std::to_string(p) + "x" + std::to_string(d);
}

std::string IdealExponent::str() const {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out;
}

ProductRing::ProductRing(std::vector<ChainRingSpec> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("ring needs at least one component");
  size_t size = 1;
  for (const auto& s : components_) {
    validate_spec_args(s.p, s.d);
    if (s.q != s.p || s.size != ipow(s.p, s.d)) throw std::invalid_argument("inconsistent chain ring spec");
    if (size > kMaxRingSize / static_cast<size_t>(s.size))
      throw std::invalid_argument("ring too large for dense enumeration");
    size *= static_cast<size_t>(s.size);
  }
  size_ = size;

  const size_t r = components_.size();
  strides_.assign(r, 1);
  for (size_t i = r; i-- > 1;) strides_[i - 1] = strides_[i] * components_[i].size;

  // E, sorted by exponent sum ascending with lexicographic tie-break.
  IdealExponent cur{std::vector<int>(r, 0)};
  size_t exp_codes = 1;
  for (const auto& s : components_) exp_codes *= static_cast<size_t>(s.d + 1);
  ideal_reps_.reserve(exp_codes);
  for (;;) {
    ideal_reps_.push_back(cur);
    size_t i = r;
    while (i-- > 0) {
      if (cur.e[i] < components_[i].d) {
        ++cur.e[i];
        std::fill(cur.e.begin() + static_cast<long>(i) + 1, cur.e.end(), 0);
        break;
      }
      if (i == 0) goto done;
    }
  }
done:
  std::sort(ideal_reps_.begin(), ideal_reps_.end(), [](const IdealExponent& a, const IdealExponent& b) {
    int sa = std::accumulate(a.e.begin(), a.e.end(), 0);
    int sb = std::accumulate(b.e.begin(), b.e.end(), 0);
    if (sa != sb) return sa < sb;
    return a.e < b.e;
  });
  exponent_code_to_ideal_.assign(exp_codes, 0);
  for (size_t i = 0; i < ideal_reps_.size(); ++i)
    exponent_code_to_ideal_[exponent_code(ideal_reps_[i])] = i;

  // valuation of every element, orbit lists, units
  val_of_elem_.resize(size_);
  orbit_elems_.assign(ideal_reps_.size(), {});
  for (size_t idx = 0; idx < size_; ++idx) {
    Element a = element(idx);
    IdealExponent v;
    v.e.reserve(r);
    for (size_t i = 0; i < r; ++i) v.e.push_back(comp_valuation(components_[i], a.c[i]));
    size_t ei = exponent_code_to_ideal_[exponent_code(v)];
    val_of_elem_[idx] = ei;
    orbit_elems_[ei].push_back(idx);
  }
  unit_indices_ = orbit_elems_[exponent_code_to_ideal_[exponent_code(unit_ideal())]];

  inverse_of_unit_.assign(size_, size_);
  for (size_t u : unit_indices_) {
    if (inverse_of_unit_[u] != size_) continue;
    for (size_t v : unit_indices_) {
      if (index(mul(element(u), element(v))) == index(one())) {
        inverse_of_unit_[u] = v;
        inverse_of_unit_[v] = u;
        break;
      }
    }
  }

  if (size_ <= kOpTableLimit) {
    add_table_.resize(size_ * size_);
    mul_table_.resize(size_ * size_);
    neg_table_.resize(size_);
    for (size_t i = 0; i < size_; ++i) {
      Element a = element(i);
      neg_table_[i] = static_cast<unsigned>(index(neg(a)));
      for (size_t j = 0; j < size_; ++j) {
        Element b = element(j);
        add_table_[i * size_ + j] = static_cast<unsigned>(index(add(a, b)));
        mul_table_[i * size_ + j] = static_cast<unsigned>(index(mul(a, b)));
      }
    }
    tables_built_ = true;
  }
}

std::string ProductRing::spec_string() const {
  std::string out;
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) out += "*";
    out += components_[i].str();
  }
  return out;
}

Element ProductRing::element(size_t index) const {
  if (index >= size_) throw std::out_of_range("element index out of range");
  Element a;
  a.c.resize(components_.size());
  auto rem = static_cast<long long>(index);
  for (size_t i = 0; i < components_.size(); ++i) {
    a.c[i] = rem / strides_[i];
    rem %= strides_[i];
  }
  return a;
}

size_t ProductRing::index(const Element& a) const {
  check_element(a);
  long long idx = 0;
  for (size_t i = 0; i < components_.size(); ++i) idx += a.c[i] * strides_[i];
  return static_cast<size_t>(idx);
}

std::string ProductRing::render(const Element& a) const {
  check_element(a);
  if (components_.size() == 1) return comp_render(components_[0], a.c[0]);
  std::string out = "(";
  for (size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ",";
    out += comp_render(components_[i], a.c[i]);
  }
  return out + ")";
}

Element ProductRing::zero() const { return Element{std::vector<long long>(components_.size(), 0)}; }

Element ProductRing::one() const {
  Element a = zero();
  for (size_t i = 0; i < components_.size(); ++i) a.c[i] = 1;
  return a;
}

Element ProductRing::add(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  Element out = a;
  for (size_t i = 0; i < components_.size(); ++i) out.c[i] = comp_add(components_[i], a.c[i], b.c[i]);
  return out;
}

Element ProductRing::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element ProductRing::neg(const Element& a) const {
  check_element(a);
  Element out = a;
  for (size_t i = 0; i < components_.size(); ++i) out.c[i] = comp_neg(components_[i], a.c[i]);
  return out;
}

Element ProductRing::mul(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  Element out = a;
  for (size_t i = 0; i < components_.size(); ++i) out.c[i] = comp_mul(components_[i], a.c[i], b.c[i]);
  return out;
}

size_t ProductRing::add_index(size_t a, size_t b) const {
  if (tables_built_) return add_table_[a * size_ + b];
  return index(add(element(a), element(b)));
}

size_t ProductRing::neg_index(size_t a) const {
  if (tables_built_) return neg_table_[a];
  return index(neg(element(a)));
}

size_t ProductRing::mul_index(size_t a, size_t b) const {
  if (tables_built_) return mul_table_[a * size_ + b];
  return index(mul(element(a), element(b)));
}

bool ProductRing::is_zero(const Element& a) const {
  check_element(a);
  return std::all_of(a.c.begin(), a.c.end(), [](long long v) { return v == 0; });
}

bool ProductRing::is_unit(const Element& a) const {
  check_element(a);
  for (size_t i = 0; i < components_.size(); ++i)
    if (comp_valuation(components_[i], a.c[i]) != 0) return false;
  return true;
}

std::optional<Element> ProductRing::inverse(const Element& a) const {
  if (!is_unit(a)) return std::nullopt;
  return element(inverse_of_unit_[index(a)]);
}

IdealExponent ProductRing::valuation(const Element& a) const {
  check_element(a);
  IdealExponent v;
  v.e.reserve(components_.size());
  for (size_t i = 0; i < components_.size(); ++i)
    v.e.push_back(comp_valuation(components_[i], a.c[i]));
  return v;
}

size_t ProductRing::ideal_index(const IdealExponent& e) const {
  check_exponent(e);
  return exponent_code_to_ideal_[exponent_code(e)];
}

Element ProductRing::rep_element(const IdealExponent& e) const {
  check_exponent(e);
  Element a = zero();
  for (size_t i = 0; i < components_.size(); ++i)
    a.c[i] = (e.e[i] == components_[i].d) ? 0 : ipow(components_[i].p, e.e[i]);
  return a;
}

IdealExponent ProductRing::unit_ideal() const {
  return IdealExponent{std::vector<int>(components_.size(), 0)};
}

IdealExponent ProductRing::zero_ideal() const {
  IdealExponent e;
  for (const auto& s : components_) e.e.push_back(s.d);
  return e;
}

IdealExponent ProductRing::socle_rep() const {
  IdealExponent e;
  for (const auto& s : components_) e.e.push_back(s.d - 1);
  return e;
}

IdealExponent ProductRing::orth(const IdealExponent& e) const {
  check_exponent(e);
  IdealExponent out = e;
  for (size_t i = 0; i < components_.size(); ++i) out.e[i] = components_[i].d - e.e[i];
  return out;
}

IdealExponent ProductRing::ideal_product(const IdealExponent& e, const IdealExponent& f) const {
  check_exponent(e);
  check_exponent(f);
  IdealExponent out = e;
  for (size_t i = 0; i < components_.size(); ++i)
    out.e[i] = std::min(e.e[i] + f.e[i], components_[i].d);
  return out;
}

bool ProductRing::leq_ideal(const IdealExponent& e, const IdealExponent& f) const {
  check_exponent(e);
  check_exponent(f);
  for (size_t i = 0; i < components_.size(); ++i)
    if (e.e[i] < f.e[i]) return false;
  return true;
}

size_t ProductRing::ideal_size(const IdealExponent& e) const {
  check_exponent(e);
  size_t n = 1;
  for (size_t i = 0; i < components_.size(); ++i)
    n *= static_cast<size_t>(ipow(components_[i].q, components_[i].d - e.e[i]));
  return n;
}

size_t ProductRing::orbit_size(const IdealExponent& e) const {
  check_exponent(e);
  size_t n = 1;
  for (size_t i = 0; i < components_.size(); ++i) {
    const auto& s = components_[i];
    if (e.e[i] == s.d) continue;
    n *= static_cast<size_t>(ipow(s.q, s.d - e.e[i]) - ipow(s.q, s.d - e.e[i] - 1));
  }
  return n;
}

const std::vector<size_t>& ProductRing::orbit_elements(const IdealExponent& e) const {
  return orbit_elems_[ideal_index(e)];
}

void ProductRing::check_element(const Element& a) const {
  if (a.c.size() != components_.size())
    throw std::invalid_argument("element does not belong to this ring");
  for (size_t i = 0; i < components_.size(); ++i)
    if (a.c[i] < 0 || a.c[i] >= components_[i].size)
      throw std::invalid_argument("element component out of range for this ring");
}

void ProductRing::check_exponent(const IdealExponent& e) const {
  if (e.e.size() != components_.size())
    throw std::invalid_argument("ideal exponent does not belong to this ring");
  for (size_t i = 0; i < components_.size(); ++i)
    if (e.e[i] < 0 || e.e[i] > components_[i].d)
      throw std::invalid_argument("ideal exponent out of range for this ring");
}

size_t ProductRing::exponent_code(const IdealExponent& e) const {
  size_t code = 0;
  for (size_t i = 0; i < components_.size(); ++i)
    code = code * static_cast<size_t>(components_[i].d + 1) + static_cast<size_t>(e.e[i]);
  return code;
}

namespace {

struct Token {
  std::string text;
  size_t pos = 0;
};

[[noreturn]] void spec_error(const Token& tok, const std::string& why) {
  throw std::invalid_argument("ring spec error at '" + tok.text + "' (position " +
                              std::to_string(tok.pos) + "): " + why);
}

std::optional<long long> token_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    v = v * 10 + (ch - '0');
    if (v > (1ll << 40)) return std::nullopt;
  }
  return v;
}

ChainRingSpec parse_component(const Token& tok) {
  const std::string& t = tok.text;
  if (t.empty()) spec_error(tok, "empty ring component");
  if (t[0] == 'Z') {
    auto n = token_number(std::string_view(t).substr(1));
    if (!n) spec_error(tok, "expected Z<n> with n a prime power");
    if (*n < 2) spec_error(tok, std::to_string(*n) + " is not a prime power");
    long long p = 2;
    while (*n % p != 0) ++p;
    long long m = *n;
    int d = 0;
    while (m % p == 0) {
      m /= p;
      ++d;
    }
    if (m != 1)
      spec_error(tok, std::to_string(*n) + " is not a prime power (write composite moduli as a product, e.g. Z2*Z3)");
    return ChainRingSpec::integer_residue(p, d);
  }
  if (t[0] == 'F') {
    auto x = t.find('x');
    if (x == std::string::npos) spec_error(tok, "expected F<p>x<d>");
    auto p = token_number(std::string_view(t).substr(1, x - 1));
    auto d = token_number(std::string_view(t).substr(x + 1));
    if (!p || !d) spec_error(tok, "expected F<p>x<d>");
    if (!is_prime(*p)) spec_error(tok, std::to_string(*p) + " is not prime");
    if (*d < 1) spec_error(tok, "nilpotency index must be at least 1");
    return ChainRingSpec::truncated_poly(*p, static_cast<int>(*d));
  }
  spec_error(tok, "unrecognized ring component (expected Z<n> or F<p>x<d>)");
}

}  // namespace

std::vector<ChainRingSpec> parse_ring_components(std::string_view spec) {
  std::vector<Token> tokens;
  Token cur;
  bool open = false;
  for (size_t i = 0; i <= spec.size(); ++i) {
    char ch = i < spec.size() ? spec[i] : '*';
    if (i < spec.size() && (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')) continue;
    if (ch == '*') {
      tokens.push_back(cur);  // empty token reported by parse_component
      cur = Token{};
      open = false;
      continue;
    }
    if (!open) {
      cur.pos = i;
      open = true;
    }
    cur.text += ch;
  }
  std::vector<ChainRingSpec> comps;
  comps.reserve(tokens.size());
  for (const auto& tok : tokens) comps.push_back(parse_component(tok));
  return comps;
}

ProductRing parse_ring(std::string_view spec) { return ProductRing(parse_ring_components(spec)); }

}  // namespace ringweight
