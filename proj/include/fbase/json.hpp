#pragma once
// JSON wire formats for numerals, digraphs, boxes and tilings. Digit and
// coordinate values are emitted as JSON numbers and must fit 64 bits;
// decoded values are emitted as decimal strings since they routinely
// exceed that.

#include <fbase/bignum.hpp>
#include <fbase/error.hpp>
#include <fbase/hasse.hpp>
#include <fbase/hyper_box.hpp>
#include <fbase/numeral.hpp>
#include <fbase/sequence.hpp>
#include <fbase/tiling.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>

namespace fbase {

namespace detail {

inline std::uint64_t to_u64(const Nat& v, const char* what) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
        throw Error(std::string(what) + " does not fit the 64-bit JSON number range");
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace detail

// {"sequence": <spec>, "origin": k, "digits_lsb": [c0, c1, ...]}
inline nlohmann::json numeral_to_json(const Numeral& x) {
    nlohmann::json digits = nlohmann::json::array();
    for (const Nat& d : x.digits_lsb()) digits.push_back(detail::to_u64(d, "digit"));
    return nlohmann::json{{"sequence", x.sequence().spec_string()},
                          {"origin", x.origin()},
                          {"digits_lsb", std::move(digits)}};
}

inline Numeral numeral_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("sequence") || !j.contains("origin") || !j.contains("digits_lsb")) {
        throw ParseError(0, "numeral JSON needs sequence, origin and digits_lsb fields");
    }
    Sequence f = Sequence::parse_spec(j.at("sequence").get<std::string>());
    const auto origin = j.at("origin").get<std::uint64_t>();
    Digits digits;
    for (const auto& d : j.at("digits_lsb")) digits.emplace_back(d.get<std::uint64_t>());
    return Numeral(std::move(f), static_cast<std::size_t>(origin), std::move(digits));
}

// {"sequence": <spec>, "first_level": s, "levels": [{"level": s, "width": w}...],
//  "arcs": [{"from": [pos, level], "to": [pos, level]}...]}
inline nlohmann::json digraph_to_json(const LevelDigraph& g) {
    nlohmann::json levels = nlohmann::json::array();
    for (std::size_t s = g.first_level(); s <= g.last_level(); ++s) {
        levels.push_back(nlohmann::json{{"level", s}, {"width", g.width(s)}});
    }
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : g.arcs()) {
        arcs.push_back(nlohmann::json{{"from", {a.from.position, a.from.level}},
                                      {"to", {a.to.position, a.to.level}}});
    }
    return nlohmann::json{{"sequence", g.sequence().spec_string()},
                          {"first_level", g.first_level()},
                          {"levels", std::move(levels)},
                          {"arcs", std::move(arcs)}};
}

// {"sequence": <spec>, "origin": k, "end": n}
inline nlohmann::json box_to_json(const HyperBox& box) {
    return nlohmann::json{{"sequence", box.sequence().spec_string()},
                          {"origin", box.origin()},
                          {"end", box.end()}};
}

inline HyperBox box_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("sequence") || !j.contains("origin") || !j.contains("end")) {
        throw ParseError(0, "box JSON needs sequence, origin and end fields");
    }
    return HyperBox(Sequence::parse_spec(j.at("sequence").get<std::string>()),
                    static_cast<std::size_t>(j.at("origin").get<std::uint64_t>()),
                    static_cast<std::size_t>(j.at("end").get<std::uint64_t>()));
}

// {"box": <box>, "tiles": [{"sigma": [...], "subsets": [[...], ...]}, ...]}
inline nlohmann::json tiling_to_json(const Tiling& t) {
    nlohmann::json tiles = nlohmann::json::array();
    for (const Tile& tile : t.tiles) {
        tiles.push_back(nlohmann::json{{"sigma", tile.sigma}, {"subsets", tile.subsets}});
    }
    return nlohmann::json{{"box", box_to_json(t.box)}, {"tiles", std::move(tiles)}};
}

inline Tiling tiling_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("box") || !j.contains("tiles")) {
        throw ParseError(0, "tiling JSON needs box and tiles fields");
    }
    Tiling t{box_from_json(j.at("box")), {}};
    for (const auto& tile : j.at("tiles")) {
        Tile out;
        out.sigma = tile.at("sigma").get<std::vector<std::size_t>>();
        out.subsets = tile.at("subsets").get<std::vector<std::vector<std::size_t>>>();
        t.tiles.push_back(std::move(out));
    }
    return t;
}

} // namespace fbase
