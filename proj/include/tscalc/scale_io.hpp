#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tscalc/core.hpp"
#include "tscalc/timescale.hpp"

namespace tscalc {

// Time-scale spec document:
// {"window":[a,b], "pieces":[{"type":"interval","a":..,"b":..}
//                          | {"type":"points","values":[..]}
//                          | {"type":"uniform","start":..,"step":..,"count":..}
//                          | {"type":"qgrid","q":..,"scale":..,"count":..,"include_zero":bool}]}
inline TimeScale parse_scale_json(const nlohmann::json& doc) try {
    std::vector<Piece> pieces;
    for (const auto& pj : doc.at("pieces")) {
        std::string type = pj.at("type");
        if (type == "interval") {
            pieces.push_back(Piece::interval(pj.at("a"), pj.at("b")));
        } else if (type == "points") {
            for (double v : pj.at("values")) pieces.push_back(Piece::point(v));
        } else if (type == "uniform") {
            // count = number of points
            double start = pj.at("start"), step = pj.at("step");
            int count = pj.at("count");
            for (int i = 0; i < count; ++i)
                pieces.push_back(Piece::point(start + i * step));
        } else if (type == "qgrid") {
            auto g = q_grid(pj.at("q"), pj.at("scale"), pj.at("count"),
                            pj.value("include_zero", false));
            pieces.insert(pieces.end(), g.begin(), g.end());
        } else {
            throw Error("unknown piece type '" + type + "'");
        }
    }
    if (doc.contains("window")) {
        double a = doc["window"][0], b = doc["window"][1];
        return normalize(std::move(pieces), a, b);
    }
    return normalize(std::move(pieces));
} catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed scale document: ") + e.what());
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

} // namespace detail

// Inline shorthands for scripting, in addition to JSON files:
//   uniform:start:step:count   (count steps, i.e. count+1 points)
//   qgrid:q:scale:count[:zero]
//   points:a,b,c
// Anything else is treated as a path to a JSON spec file.
inline TimeScale parse_scale_spec(const std::string& spec) {
    if (spec.rfind("uniform:", 0) == 0) {
        auto f = detail::split(spec, ':');
        if (f.size() != 4) throw Error("uniform:start:step:count expected");
        return normalize(
            uniform_grid(std::stod(f[1]), std::stod(f[2]), std::stoi(f[3])));
    }
    if (spec.rfind("qgrid:", 0) == 0) {
        auto f = detail::split(spec, ':');
        if (f.size() != 4 && f.size() != 5)
            throw Error("qgrid:q:scale:count[:zero] expected");
        return normalize(q_grid(std::stod(f[1]), std::stod(f[2]),
                                std::stoi(f[3]),
                                f.size() == 5 && f[4] == "zero"));
    }
    if (spec.rfind("points:", 0) == 0) {
        std::vector<Piece> pieces;
        for (const auto& v : detail::split(spec.substr(7), ','))
            pieces.push_back(Piece::point(std::stod(v)));
        return normalize(std::move(pieces));
    }
    std::ifstream in(spec);
    if (!in) throw Error("cannot open scale spec file '" + spec + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error("scale spec file '" + spec + "' is not valid JSON: " +
                    e.what());
    }
    return parse_scale_json(doc);
}

// Complex flag literal: `re[+imi]`, e.g. "1", "1.5+2i", "-0.5-0.3i", "0+1i".
inline Complex parse_complex(const std::string& s) {
    if (s.empty()) throw Error("empty complex literal");
    if (s.back() != 'i') return Complex(std::stod(s), 0.0);
    std::string body = s.substr(0, s.size() - 1);
    // split at the last top-level +/- (not an exponent sign, not position 0)
    for (std::size_t pos = body.size(); pos-- > 1;) {
        char c = body[pos];
        if ((c == '+' || c == '-') &&
            body[pos - 1] != 'e' && body[pos - 1] != 'E') {
            std::string im = body.substr(pos);
            if (im == "+" || im == "-") im += "1";
            return Complex(std::stod(body.substr(0, pos)), std::stod(im));
        }
    }
    return Complex(0.0, std::stod(body == "" || body == "+" ? "1"
                                  : body == "-"             ? "-1"
                                                            : body));
}

} // namespace tscalc
