#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "agband/groupoid.hpp"
#include "json.hpp"

namespace agband {

// {"order": n, "labels": [...], "table": [[...], ...]}, row-major.
nlohmann::json to_json(const FiniteGroupoid& g);

// Throws ArgumentError on schema violations; table validity is enforced by
// the FiniteGroupoid constructor. "labels" is optional.
FiniteGroupoid groupoid_from_json(const nlohmann::json& doc);

// Aligned text table: a header row of labels, then one row per
// element starting with its label. `corner` fills the top-left cell.
std::string render_text(const FiniteGroupoid& g, std::string_view corner = "");

// Reads a Cayley JSON document from `path`, or from `in` when path is "-".
FiniteGroupoid read_groupoid(const std::string& path, std::istream& in);

}  // namespace agband
