#include <dwstar/cli/jets_file.hpp>

#include <json.hpp>

namespace dwstar::cli
{

namespace
{

using nlohmann::json;

Integer read_integer(const json &v)
{
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
    }
    if (v.is_string()) {
        Integer z;
        if (z.set_str(v.get<std::string>(), 10) != 0) {
            throw JetsFileError("malformed integer string " + v.dump());
        }
        return z;
    }
    throw JetsFileError("expected an integer, got " + v.dump());
}

Rational read_rational(const json &num, const json &den)
{
    const Integer d = read_integer(den);
    if (d == 0) {
        throw JetsFileError("zero denominator");
    }
    Rational q(read_integer(num), d);
    q.canonicalize();
    return q;
}

unsigned read_small(const json &v, const char *what)
{
    if (!v.is_number_unsigned() || v.get<unsigned long>() > 64) {
        throw JetsFileError(std::string("field ") + what + " must be an integer in [0, 64]");
    }
    return v.get<unsigned>();
}

std::string integer_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return z.get_str();
    }
    return "\"" + z.get_str() + "\"";
}

} // namespace

JetData jets_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw JetsFileError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("point") || !doc.contains("m") || !doc.contains("n") ||
        !doc.contains("values")) {
        throw JetsFileError("jets file needs keys point, m, n, values");
    }
    const json &point = doc["point"];
    if (!point.is_array() || point.size() != 4) {
        throw JetsFileError("point must be [x0_num, x0_den, p0_num, p0_den]");
    }
    JetData data;
    data.x0 = read_rational(point[0], point[1]);
    data.p0 = read_rational(point[2], point[3]);
    data.m = read_small(doc["m"], "m");
    data.n = read_small(doc["n"], "n");
    const json &values = doc["values"];
    if (!values.is_array()) {
        throw JetsFileError("values must be an array");
    }
    for (const json &entry : values) {
        if (!entry.is_array() || entry.size() != 5 || !entry[3].is_array() || entry[3].size() != 2 ||
            !entry[4].is_array() || entry[4].size() != 2) {
            throw JetsFileError("value entry must be [point, i, j, [re_num, re_den], [im_num, im_den]]: " +
                                entry.dump());
        }
        const JetKey key{read_small(entry[0], "point"), read_small(entry[1], "i"), read_small(entry[2], "j")};
        if (key.point > 3 || key.i > data.m || key.j > data.n) {
            throw JetsFileError("value entry out of range: " + entry.dump());
        }
        const GaussianRational value(read_rational(entry[3][0], entry[3][1]), read_rational(entry[4][0], entry[4][1]));
        if (!data.values.emplace(key, value).second) {
            throw JetsFileError("duplicate value entry: " + entry.dump());
        }
    }
    return data;
}

std::string jets_to_json(const JetData &data)
{
    const auto rat = [](const Rational &q) {
        return "[" + integer_json(q.get_num()) + "," + integer_json(q.get_den()) + "]";
    };
    std::string out = "{\"point\": [" + integer_json(data.x0.get_num()) + "," + integer_json(data.x0.get_den()) + "," +
                      integer_json(data.p0.get_num()) + "," + integer_json(data.p0.get_den()) +
                      "], \"m\": " + std::to_string(data.m) + ", \"n\": " + std::to_string(data.n) + ", \"values\": [";
    bool first = true;
    for (const auto &[key, value] : data.values) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += "[" + std::to_string(key.point) + "," + std::to_string(key.i) + "," + std::to_string(key.j) + "," +
               rat(value.re()) + "," + rat(value.im()) + "]";
    }
    return out + "]}";
}

} // namespace dwstar::cli
