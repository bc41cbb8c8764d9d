#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ringweight/criterion.hpp"
#include "ringweight/oracle.hpp"
#include "ringweight/ring.hpp"
#include "ringweight/weights.hpp"

namespace ringweight {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name);

/// RFC 4180 quoting for fields containing commas or quotes.
std::string csv_field(const std::string& value);

// All renderers produce byte-deterministic output ending in a newline and
// throw std::invalid_argument for formats a report does not support.

std::string render_ring_info(const ProductRing& ring, Format format);           // text | json
std::string render_mobius(const ProductRing& ring, Format format);              // csv | json
std::string render_weight(const Weight& w, const std::string& name, Format format);  // all
std::string render_eta_matrix(const ProductRing& ring, Format format);          // csv
std::string render_criterion(const CriterionReport& report, Format format);     // all
std::string render_extension(const ExtensionReport& report, Format format);     // text | json

}  // namespace ringweight
