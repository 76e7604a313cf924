#include "wtrunc/curve_io.hpp"

#include <json.hpp>

#include <algorithm>

namespace wtrunc::curves {

namespace {

using json = nlohmann::ordered_json;

Int parse_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ConfigError(path, "not an integer: " + j.get<std::string>());
        }
    }
    throw ConfigError(path, "expected an integer (number or decimal string)");
}

UPoly parse_poly(const json& j, const std::string& path) {
    if (!j.is_array()) throw ConfigError(path, "expected coefficient array");
    std::vector<Rat> cs;
    cs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& pair = j[i];
        std::string p = path + "[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2)
            throw ConfigError(p, "expected [numerator, denominator] pair");
        Int num = parse_int(pair[0], p + "[0]");
        Int den = parse_int(pair[1], p + "[1]");
        if (den == 0) throw ConfigError(p, "zero coefficient denominator");
        cs.emplace_back(num, den);
    }
    return UPoly(std::move(cs));
}

json poly_to_json(const UPoly& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs())
        arr.push_back(json::array({c.num().str(), c.den().str()}));
    return arr;
}

// Normalized === input test up to nothing: warn when the stored pair differs
// from what normalization produced.
bool same_pair(const UPoly& num_in, const UPoly& den_in, const RatFunc& f) {
    return num_in == f.num() && den_in == f.den();
}

TruncationCurve parse_curve(const json& j, const std::string& path,
                            std::vector<std::string>& warnings) {
    if (!j.is_object()) throw ConfigError(path, "expected curve object");
    TruncationCurve c;
    if (!j.contains("name") || !j["name"].is_string())
        throw ConfigError(path + ".name", "missing or non-string");
    c.name = j["name"].get<std::string>();
    if (!j.contains("param") || !j["param"].is_string())
        throw ConfigError(path + ".param", "missing or non-string");
    c.param = j["param"].get<std::string>();
    if (c.param == "c" || c.param == "lambda")
        throw ConfigError(path + ".param", "parameter may not be named c or lambda");

    c.family = CurveFamily::external;
    if (j.contains("indices")) {
        const json& idx = j["indices"];
        if (!idx.is_object()) throw ConfigError(path + ".indices", "expected object");
        for (auto it = idx.begin(); it != idx.end(); ++it) {
            if (it.key() == "family") {
                if (!it.value().is_string())
                    throw ConfigError(path + ".indices.family", "expected string");
                c.family_tag = it.value().get<std::string>();
            } else {
                if (!it.value().is_number_integer())
                    throw ConfigError(path + ".indices." + it.key(), "expected integer");
                c.indices[it.key()] = it.value().get<int>();
            }
        }
        if (c.family_tag == "D") c.family = CurveFamily::d_family;
    }

    for (const char* coord : {"c", "lambda"}) {
        if (!j.contains(coord)) throw ConfigError(path + "." + coord, "missing coordinate");
        const json& cj = j[coord];
        if (!cj.is_object() || !cj.contains("num") || !cj.contains("den"))
            throw ConfigError(path + "." + coord, "expected {num, den}");
        UPoly num = parse_poly(cj["num"], path + "." + coord + ".num");
        UPoly den = parse_poly(cj["den"], path + "." + coord + ".den");
        if (den.is_zero()) throw ConfigError(path + "." + coord + ".den", "zero denominator");
        RatFunc f(c.param, num, den);
        if (!same_pair(num, den, f))
            warnings.push_back(path + "." + coord +
                               ": num/den were not coprime-normalized; normalized on load");
        if (std::string(coord) == "c")
            c.c = f;
        else
            c.lambda = f;
    }

    if (j.contains("excluded")) {
        const json& ex = j["excluded"];
        if (!ex.is_array()) throw ConfigError(path + ".excluded", "expected array");
        for (std::size_t i = 0; i < ex.size(); ++i) {
            std::string p = path + ".excluded[" + std::to_string(i) + "]";
            const json& e = ex[i];
            if (!e.is_object() || !e.contains("value") || !e.contains("reason"))
                throw ConfigError(p, "expected {value, reason}");
            Rat v;
            try {
                v = Rat::parse(e["value"].get<std::string>());
            } catch (const std::exception& ex2) {
                throw ConfigError(p + ".value", ex2.what());
            }
            ExclusionReason r;
            try {
                r = reason_from_name(e["reason"].get<std::string>());
            } catch (const std::exception& ex2) {
                throw ConfigError(p + ".reason", ex2.what());
            }
            bool merged = false;
            for (auto& known : c.excluded)
                if (known.value == v) {
                    known.reasons.insert(r);
                    merged = true;
                    break;
                }
            if (!merged) c.excluded.push_back({v, {r}});
        }
    }
    std::sort(c.excluded.begin(), c.excluded.end(),
              [](const ExcludedValue& a, const ExcludedValue& b) { return a.value < b.value; });

    // Invariants: every rational pole of the normalized coordinates must be
    // declared with the matching reason; the built-in family must declare its
    // critical levels.
    auto require_reason = [&](const Rat& v, ExclusionReason r, const char* what) {
        for (const auto& e : c.excluded)
            if (e.value == v && e.reasons.count(r)) return;
        throw ConfigError(path + ".excluded",
                          std::string("missing declared ") + what + " at " + c.param + "=" +
                              v.str());
    };
    for (const Rat& v : rational_roots_of(c.c.den()))
        require_reason(v, ExclusionReason::pole_of_c, "pole_of_c");
    auto rep = find_roots(c.lambda.den());
    for (const auto& [v, mult] : rep.rational_roots)
        require_reason(v, ExclusionReason::pole_of_lambda, "pole_of_lambda");
    c.lambda_den_residual = rep.residual;
    if (c.family == CurveFamily::d_family) {
        auto it = c.indices.find("n");
        if (it == c.indices.end())
            throw ConfigError(path + ".indices", "family D requires integer index n");
        int n = it->second;
        if (n < 1) throw ConfigError(path + ".indices.n", "must be >= 1");
        require_reason(Rat(-2 * n + 2), ExclusionReason::critical, "critical level");
        require_reason(Rat(-2 * n + 1), ExclusionReason::critical, "critical level");
    }
    return c;
}

}  // namespace

LoadResult load_curves(const std::string& config_text) {
    json doc;
    try {
        doc = json::parse(config_text);
    } catch (const std::exception& e) {
        throw ConfigError("$", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array())
        throw ConfigError("$", "expected top-level object with a curves array");
    LoadResult out;
    const json& arr = doc["curves"];
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.curves.push_back(
            parse_curve(arr[i], "curves[" + std::to_string(i) + "]", out.warnings));
    return out;
}

std::string serialize_curves(const std::vector<TruncationCurve>& curves) {
    json arr = json::array();
    for (const auto& c : curves) {
        json jc;
        jc["name"] = c.name;
        jc["param"] = c.param;
        json idx = json::object();
        if (!c.family_tag.empty()) idx["family"] = c.family_tag;
        for (const auto& [k, v] : c.indices) idx[k] = v;
        jc["indices"] = idx;
        jc["c"] = {{"num", poly_to_json(c.c.num())}, {"den", poly_to_json(c.c.den())}};
        jc["lambda"] = {{"num", poly_to_json(c.lambda.num())}, {"den", poly_to_json(c.lambda.den())}};
        json ex = json::array();
        for (const auto& e : c.excluded)
            for (auto r : e.reasons)
                ex.push_back({{"value", e.value.str()}, {"reason", reason_name(r)}});
        jc["excluded"] = ex;
        arr.push_back(jc);
    }
    json doc;
    doc["curves"] = arr;
    return doc.dump(2) + "\n";
}

}  // namespace wtrunc::curves
