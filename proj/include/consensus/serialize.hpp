#pragma once

#include <string>

#include "json.hpp"

namespace consensus {

// Row container for machine-readable output.  A single flat object is
// one row; an array of flat objects is a table.  Key order is
// preserved (column order).
using Rows = nlohmann::ordered_json;

// Decimal, 17 significant digits: parses back to the identical 64-bit
// float.
std::string format_double(double v);

// CSV with a header row.  Cells: doubles via format_double, null as an
// empty cell, arrays joined with ';'.  All rows must share one schema.
std::string to_csv(const Rows& rows);

// Pretty JSON (doubles serialize shortest-round-trip, so values equal
// the CSV cells bit for bit after parsing).
std::string to_json_text(const Rows& rows);

} // namespace consensus
