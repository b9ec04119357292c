#pragma once

// JSON forms of algebra elements and series.
//
// Element: {"d": 2, "entries": [["1/2","0"],["-3","1"]]}.
// Series:  {"d": 2, "N": 3, "maps": [{"n": 0, "value": <element>},
//           {"n": 1, "tensor": [<element>, ...]}, ...]}, degree-n tensors
//           nested n deep over basis indices 0..d^2-1.

#include <string>

#include <json.hpp>

#include "freeconv/series.hpp"

namespace freeconv {

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TruncSeries& f);
TruncSeries series_from_json(const nlohmann::json& j);

// Parses text, turning JSON syntax errors into ParseError.
nlohmann::json parse_json_text(const std::string& text);
TruncSeries read_series_file(const std::string& path);

} // namespace freeconv
