#include "ringweight/weight_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ringweight {

namespace {

Rational parse_rational_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string())
    throw std::invalid_argument("weight file: " + where + " must be a rational string");
  auto r = Rational::parse(j.get<std::string>());
  if (!r)
    throw std::invalid_argument("weight file: '" + j.get<std::string>() + "' in " + where +
                                " is not a rational");
  return *r;
}

Scalar parse_scalar_value(const nlohmann::json& j, const std::string& key) {
  if (j.is_string()) return Scalar(parse_rational_field(j, "value of '" + key + "'"));
  if (j.is_object()) {
    Rational re(0), im(0);
    if (j.contains("re")) re = parse_rational_field(j.at("re"), "re of '" + key + "'");
    if (j.contains("im")) im = parse_rational_field(j.at("im"), "im of '" + key + "'");
    return Scalar(re, im);
  }
  throw std::invalid_argument("weight file: value of '" + key +
                              "' must be a rational string or a {re, im} object");
}

std::vector<int> parse_exponent_key(const std::string& key) {
  std::vector<int> exps;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int v = 0;
    auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc() || res.ptr != part.data() + part.size() || v < 0)
      throw std::invalid_argument("weight file: '" + key + "' is not an exponent vector");
    exps.push_back(v);
  }
  if (exps.empty()) throw std::invalid_argument("weight file: empty exponent key");
  return exps;
}

}  // namespace

Weight parse_weight_json(const ProductRing& ring, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("weight file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ring") || !doc.contains("values"))
    throw std::invalid_argument("weight file must be an object with 'ring' and 'values'");
  if (!doc.at("ring").is_string())
    throw std::invalid_argument("weight file: 'ring' must be a spec string");

  ProductRing declared = parse_ring(doc.at("ring").get<std::string>());
  if (declared.components() != ring.components())
    throw std::invalid_argument("weight file ring '" + declared.spec_string() +
                                "' does not match '" + ring.spec_string() + "'");

  const auto& values = doc.at("values");
  if (!values.is_object())
    throw std::invalid_argument("weight file: 'values' must be an object");
  std::map<std::vector<int>, Scalar> table;
  for (const auto& [key, value] : values.items())
    table[parse_exponent_key(key)] = parse_scalar_value(value, key);
  return Weight::from_table(ring, table);
}

Weight load_weight_file(const ProductRing& ring, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open weight file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_weight_json(ring, buf.str());
}

}  // namespace ringweight
