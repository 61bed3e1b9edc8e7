#include "tpe/document.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "tpe/detail/overloaded.hpp"

namespace tpe {

using detail::overloaded;

namespace {

constexpr std::string_view kFormat = "tpe-document/1";

const Json& require(const Json& j, const char* key, std::string_view where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(fmt::format("{}: missing field '{}'", where, key));
    return j.at(key);
}

std::string require_string(const Json& j, std::string_view what) {
    if (!j.is_string()) throw InputError(fmt::format("{}: expected a string", what));
    return j.get<std::string>();
}

std::uint64_t require_u64(const Json& j, std::string_view what) {
    Integer n = integer_from_json(j, what);
    if (!fits_u64(n)) throw InputError(fmt::format("{}: expected a non-negative 64-bit integer", what));
    return to_u64(n);
}

TorsionCertificate certificate_from_json(const Json& j, const TowerPtr& tower) {
    const std::string type = require_string(require(j, "type", "certificate"), "certificate.type");
    if (type == "base-point") return BasePointCert{};
    if (type == "weierstrass-two-torsion") return WeierstrassTwoTorsionCert{};
    if (type == "even-model-infinity") return EvenModelInfinityCert{};
    if (type == "principal-divisor") {
        PrincipalDivisorCert c;
        const Json& v = require(j, "v", "principal-divisor");
        if (!v.is_array()) throw InputError("principal-divisor.v: expected an array");
        for (const auto& e : v) c.v.push_back(parse_element(tower, require_string(e, "principal-divisor.v[]")));
        c.m = require_u64(require(j, "m", "principal-divisor"), "principal-divisor.m");
        return c;
    }
    if (type == "cantor-checked")
        return CantorCheckedCert{require_u64(require(j, "expected_order", "cantor-checked"), "cantor-checked.expected_order")};
    throw InputError(fmt::format("unknown certificate type '{}'", type));
}

Json certificate_to_json(const TorsionCertificate& c) {
    return std::visit(overloaded{
                          [](const BasePointCert&) { return Json{{"type", "base-point"}}; },
                          [](const WeierstrassTwoTorsionCert&) { return Json{{"type", "weierstrass-two-torsion"}}; },
                          [](const EvenModelInfinityCert&) { return Json{{"type", "even-model-infinity"}}; },
                          [](const PrincipalDivisorCert& pd) {
                              Json v = Json::array();
                              for (const auto& e : pd.v) v.push_back(to_string(e));
                              Json out;
                              out["type"] = "principal-divisor";
                              out["v"] = std::move(v);
                              out["m"] = pd.m;
                              return out;
                          },
                          [](const CantorCheckedCert& cc) {
                              Json out;
                              out["type"] = "cantor-checked";
                              out["expected_order"] = cc.expected_order;
                              return out;
                          },
                      },
                      c);
}

}  // namespace

std::string certificate_name(const TorsionCertificate& c) {
    return certificate_to_json(c)["type"].get<std::string>();
}

Json integer_to_json(const Integer& n) {
    if (fits_i64(n)) return to_i64(n);
    return to_string(n);
}

Integer integer_from_json(const Json& j, std::string_view what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const InputError&) {
        }
    }
    throw InputError(fmt::format("{}: expected an integer", what));
}

Json poly_to_json(const PolyQ& f) {
    Json out = Json::array();
    for (const auto& c : f.coefficients()) {
        if (!is_integer(c)) throw DomainError("only integer coefficients are serialized");
        out.push_back(integer_to_json(c.get_num()));
    }
    return out;
}

PolyQ poly_from_json(const Json& j, std::string_view what) {
    if (!j.is_array() || j.empty()) throw InputError(fmt::format("{}: expected a non-empty integer array", what));
    std::vector<Integer> coeffs;
    for (const auto& c : j) coeffs.push_back(integer_from_json(c, what));
    return poly_q(coeffs);
}

Json tower_to_json(const TowerSpec& t, const std::string& note) {
    Json gens = Json::array();
    for (const auto& g : t.generators()) {
        Json e;
        e["name"] = g.name;
        e["relation"] = poly_to_json(g.relation);
        gens.push_back(std::move(e));
    }
    Json out;
    out["generators"] = std::move(gens);
    if (!note.empty()) out["note"] = note;
    return out;
}

TowerPtr tower_from_json(const Json& j, std::string* note) {
    const Json& gens = require(j, "generators", "tower");
    if (!gens.is_array()) throw InputError("tower.generators: expected an array");
    std::vector<Generator> out;
    for (const auto& g : gens) {
        out.push_back({require_string(require(g, "name", "tower generator"), "tower generator name"),
                       poly_from_json(require(g, "relation", "tower generator"), "tower generator relation")});
    }
    if (note) *note = j.contains("note") ? require_string(j.at("note"), "tower.note") : std::string{};
    return TowerSpec::make(std::move(out));
}

Json point_to_json(const CurvePoint& p) {
    return std::visit(overloaded{
                          [](const AffinePoint& a) {
                              Json out;
                              out["x"] = to_string(a.x);
                              out["y"] = to_string(a.y);
                              return out;
                          },
                          [](const InfinityOdd&) { return Json("infinity"); },
                          [](const InfinityEvenPlus&) { return Json("infinity+"); },
                          [](const InfinityEvenMinus&) { return Json("infinity-"); },
                      },
                      p);
}

CurvePoint point_from_json(const Json& j, const TowerPtr& tower) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "infinity") return InfinityOdd{};
        if (s == "infinity+") return InfinityEvenPlus{};
        if (s == "infinity-") return InfinityEvenMinus{};
        throw InputError(fmt::format("unknown point '{}'", s));
    }
    auto coord = [&](const char* key) -> TowerElement {
        const Json& c = require(j, key, "point");
        if (c.is_number_integer()) return {tower, Rational(integer_from_json(c, key))};
        return parse_element(tower, require_string(c, key));
    };
    return AffinePoint{coord("x"), coord("y")};
}

TpeDocument parse_document(const Json& j) {
    if (!j.is_object()) throw InputError("document: expected a JSON object");
    if (j.contains("format") && j.at("format") != kFormat)
        throw InputError(fmt::format("unsupported document format {}", j.at("format").dump()));
    TpeDocument doc;
    try {
        doc.curve = make_curve(poly_from_json(require(require(j, "curve", "document"), "f", "curve"), "curve.f"));
    } catch (const DomainError& e) {
        throw InputError(fmt::format("curve: {}", e.what()));
    }
    doc.tower = tower_from_json(require(j, "tower", "document"), &doc.tower_note);
    doc.p = require_u64(require(j, "p", "document"), "p");

    const Json& place = require(j, "place", "document");
    if (place.is_string() && place.get<std::string>() == "first") {
        doc.place = FirstCanonicalPlace{};
    } else if (place.is_object()) {
        ExplicitPlace ep;
        for (const auto& [name, r] : place.items()) {
            if (!doc.tower->index_of(name)) throw InputError(fmt::format("place: unknown generator '{}'", name));
            ep[name] = require_u64(r, "place residue");
        }
        doc.place = std::move(ep);
    } else {
        throw InputError("place: expected \"first\" or an object of residues");
    }

    doc.base_point = point_from_json(require(j, "base_point", "document"), doc.tower);

    const Json& entries = require(j, "entries", "document");
    if (!entries.is_array() || entries.empty()) throw InputError("entries: expected a non-empty array");
    for (const auto& e : entries) {
        const std::string kind = require_string(require(e, "kind", "entry"), "entry.kind");
        if (kind == "point") {
            doc.entries.emplace_back(ExplicitPointEntry{point_from_json(require(e, "point", "entry"), doc.tower),
                                                        certificate_from_json(require(e, "certificate", "entry"), doc.tower)});
        } else if (kind == "weierstrass-family") {
            doc.entries.emplace_back(WeierstrassFamilyEntry{poly_from_json(require(e, "h", "entry"), "entry.h")});
        } else {
            throw InputError(fmt::format("unknown entry kind '{}'", kind));
        }
    }

    if (j.contains("rank_assertion")) {
        const Json& r = j.at("rank_assertion");
        const Json& claimed = require(r, "claimed", "rank_assertion");
        if (!claimed.is_boolean()) throw InputError("rank_assertion.claimed: expected a boolean");
        doc.rank_assertion.claimed = claimed.get<bool>();
        if (r.contains("source")) doc.rank_assertion.source = require_string(r.at("source"), "rank_assertion.source");
    }
    return doc;
}

Json parse_json_text(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(fmt::format("{}: invalid JSON: {}", what, e.what()));
    }
}

TpeDocument parse_document_text(std::string_view text) { return parse_document(parse_json_text(text, "document")); }

Json to_json(const TpeDocument& doc) {
    Json out;
    out["format"] = kFormat;
    out["curve"] = Json{{"f", poly_to_json(doc.curve.f)}};
    out["tower"] = tower_to_json(*doc.tower, doc.tower_note);
    out["p"] = doc.p;
    out["place"] = std::visit(overloaded{
                                  [](const FirstCanonicalPlace&) { return Json("first"); },
                                  [&](const ExplicitPlace& ep) {
                                      Json o = Json::object();
                                      for (const auto& g : doc.tower->generators())
                                          if (auto it = ep.find(g.name); it != ep.end()) o[g.name] = it->second;
                                      return o;
                                  },
                              },
                              doc.place);
    out["base_point"] = point_to_json(doc.base_point);
    Json entries = Json::array();
    for (const auto& e : doc.entries) {
        entries.push_back(std::visit(overloaded{
                                         [](const ExplicitPointEntry& pe) {
                                             Json o;
                                             o["kind"] = "point";
                                             o["point"] = point_to_json(pe.point);
                                             o["certificate"] = certificate_to_json(pe.certificate);
                                             return o;
                                         },
                                         [](const WeierstrassFamilyEntry& fe) {
                                             Json o;
                                             o["kind"] = "weierstrass-family";
                                             o["h"] = poly_to_json(fe.h);
                                             return o;
                                         },
                                     },
                                     e));
    }
    out["entries"] = std::move(entries);
    Json rank;
    rank["claimed"] = doc.rank_assertion.claimed;
    rank["source"] = doc.rank_assertion.source;
    out["rank_assertion"] = std::move(rank);
    return out;
}

std::string to_canonical_string(const TpeDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(fmt::format("cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace tpe
