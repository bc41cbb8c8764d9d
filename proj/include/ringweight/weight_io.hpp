#pragma once

#include <string>

#include "ringweight/ring.hpp"
#include "ringweight/weights.hpp"

namespace ringweight {

/// Parses a weight file: a JSON object with a `ring` spec string and a
/// `values` object mapping comma-joined exponent vectors (e.g. "1,0") to
/// either a rational string "a/b" or an object {re, im} of rational strings.
/// The file's ring must match the given ring; the zero-ideal key may be
/// omitted and must map to zero when present.
Weight parse_weight_json(const ProductRing& ring, const std::string& text);

/// Reads and parses a weight file from disk.
Weight load_weight_file(const ProductRing& ring, const std::string& path);

}  // namespace ringweight
