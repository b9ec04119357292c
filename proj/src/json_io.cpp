#include "freeconv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "freeconv/error.hpp"

namespace freeconv {

using nlohmann::json;

json to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j)
            row.push_back(format_rational(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"d", m.dim()}, {"entries", std::move(rows)}};
}

namespace {

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(std::to_string(j.get<long long>()));
    throw ParseError("rational must be a string like \"p/q\" or an integer");
}

std::size_t size_field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string("missing or invalid field \"") + key + "\"");
    return j[key].get<std::size_t>();
}

json tensor_to_json(const MultiMap& m, std::size_t slot, std::size_t base)
{
    if (slot == m.arity())
        return to_json(m[base]);
    json arr = json::array();
    for (std::size_t c = 0; c < m.basis_size(); ++c)
        arr.push_back(tensor_to_json(m, slot + 1, base * m.basis_size() + c));
    return arr;
}

void tensor_from_json(const json& j, MultiMap& m, std::size_t slot, std::size_t base)
{
    if (slot == m.arity()) {
        Matrix v = matrix_from_json(j);
        if (v.dim() != m.dim())
            throw ParseError("tensor entry has the wrong dimension");
        m[base] = std::move(v);
        return;
    }
    if (!j.is_array() || j.size() != m.basis_size())
        throw ParseError("degree-" + std::to_string(m.arity()) + " tensor must nest arrays of length " +
                         std::to_string(m.basis_size()));
    for (std::size_t c = 0; c < m.basis_size(); ++c)
        tensor_from_json(j[c], m, slot + 1, base * m.basis_size() + c);
}

} // namespace

Matrix matrix_from_json(const json& j)
{
    const std::size_t d = size_field(j, "d");
    if (d == 0)
        throw ParseError("algebra dimension must be positive");
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != d)
        throw ParseError("\"entries\" must be a d x d array");
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        const json& row = j["entries"][i];
        if (!row.is_array() || row.size() != d)
            throw ParseError("\"entries\" must be a d x d array");
        for (std::size_t k = 0; k < d; ++k)
            m(i, k) = rational_from_json(row[k]);
    }
    return m;
}

json to_json(const TruncSeries& f)
{
    json maps = json::array();
    maps.push_back(json{{"n", 0}, {"value", to_json(f[0][0])}});
    for (std::size_t n = 1; n <= f.order(); ++n)
        maps.push_back(json{{"n", n}, {"tensor", tensor_to_json(f[n], 0, 0)}});
    return json{{"d", f.dim()}, {"N", f.order()}, {"maps", std::move(maps)}};
}

TruncSeries series_from_json(const json& j)
{
    const std::size_t d = size_field(j, "d");
    const std::size_t order = size_field(j, "N");
    if (d == 0)
        throw ParseError("algebra dimension must be positive");
    if (!j.contains("maps") || !j["maps"].is_array() || j["maps"].size() != order + 1)
        throw ParseError("\"maps\" must list degrees 0..N");
    auto s = TruncSeries::zero(d, order);
    for (const json& entry : j["maps"]) {
        const std::size_t n = size_field(entry, "n");
        if (n > order)
            throw ParseError("map degree exceeds N");
        if (n == 0) {
            if (!entry.contains("value"))
                throw ParseError("degree-0 map needs \"value\"");
            Matrix v = matrix_from_json(entry["value"]);
            if (v.dim() != d)
                throw ParseError("degree-0 value has the wrong dimension");
            s[0][0] = std::move(v);
        } else {
            if (!entry.contains("tensor"))
                throw ParseError("degree-" + std::to_string(n) + " map needs \"tensor\"");
            tensor_from_json(entry["tensor"], s[n], 0, 0);
        }
    }
    return s;
}

json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

TruncSeries read_series_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return series_from_json(parse_json_text(buf.str()));
}

} // namespace freeconv
