#pragma once

// Canonical text forms.
//
//   weight      46,46,45,1,-1,-45,-46,-46       (no whitespace)
//   omega JSON  {"mu":[[0,0],[],[132,-132]]}
//   trace JSON  {"seq":[...],"status":"expanded","children":[...]}
//   scatter CSV x1,...,xh,depth
//
// JSON integers are written and read at full precision.

#include "lvdist/core.hpp"
#include "lvdist/enumeration.hpp"
#include "lvdist/modular_iteration.hpp"

#include <span>
#include <string>
#include <string_view>

namespace lvdist {

std::string format_weight(const Weight& w);
/// Parses the comma-separated form. Without `sort`, a sequence that is not
/// weakly decreasing is rejected with DomainError.
Weight parse_weight(std::string_view text, bool sort = false);

BigInt parse_integer(std::string_view text);

std::string omega_to_json(const OmegaElement& o);
OmegaElement omega_from_json(std::string_view json);

std::string trace_to_json(const IterationTrace& t);
IterationTrace trace_from_json(std::string_view json);

/// Records sorted descending by coordinates, header x1..xh,depth.
std::string scatter_csv(std::span<const ScatterRecord> records, std::size_t half_length);

/// Log-scaled (base p) scatter plot. Zero coordinates are drawn in a
/// dedicated band at the axis origin.
std::string scatter_svg(std::span<const ScatterRecord> records, const BigInt& p);

} // namespace lvdist
