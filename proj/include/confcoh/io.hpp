#pragma once

// Text, JSON and CSV renderings of the library's values, plus JSON parsers
// for the round-trip.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "confcoh/qformula.hpp"
#include "confcoh/repr.hpp"
#include "confcoh/series.hpp"

namespace confcoh::io {

using nlohmann::json;

/// 2 -> "²", 10 -> "¹⁰"
std::string superscript(int n);

/// "t²s" style monomial; empty for t^0 s^0.
std::string ts_monomial(int t, int s);

// --- representations ----------------------------------------------------

/// [{"i":..,"j":..,"mult":..}, ...] in label order.
json to_json(const repr::VirtualRep& rep);
repr::VirtualRep rep_from_json(const json& j);

// --- series -------------------------------------------------------------

/// Rep-valued rendering, e.g. "1 + u + [V(0,1)]·t·u + t²·u". Terms in (u, t, s) order.
std::string render_series(const series::TriSeries& q);
/// Dimension-valued rendering grouped by powers of u, e.g. "1 + (1 + 2t + t²)u".
std::string render_series_dims(const series::TriSeries& q, int genus);

/// [{"t":..,"s":..,"u":..,"rep":[...]}, ...]
json to_json(const series::TriSeries& q);
series::TriSeries series_from_json(const json& j, int order);

// --- tables -------------------------------------------------------------

using DimMap = std::map<std::pair<int, int>, Integer>;

/// {"genus", "n", "table": [{"degree", "weight", "dim", "decomposition"}]}
json to_json(const qformula::MixedTable& table);
/// Same schema without "decomposition".
json dims_to_json(int genus, int n, const DimMap& dims);
qformula::MixedTable table_from_json(const json& j);

/// One line per entry: "k h dim decomposition" (decomposition omitted for dims).
std::string render_table(const qformula::MixedTable& table);
std::string render_dims(int genus, int n, const DimMap& dims);

/// Header "n,k,h,dim" followed by one row per nonzero entry.
std::string csv_header();
std::string csv_rows(int n, const DimMap& dims);

// --- integer lists ------------------------------------------------------

/// "1 0 0 1"
std::string render_list(const std::vector<Integer>& values);
json to_json(const std::vector<Integer>& values);
std::vector<Integer> integers_from_json(const json& j);

/// JSON numbers when they fit in 64 bits, decimal strings otherwise.
json integer_json(const Integer& v);
Integer integer_from_json(const json& j);

}  // namespace confcoh::io
