#pragma once

// Torsion packet envelope certificates: the document model and its JSON
// encoding.
//
// Canonical JSON (keys in this order, two-space indentation):
//
//   {
//     "format": "tpe-document/1",
//     "curve": {"f": [c0, c1, ...]},            integers, low to high degree
//     "tower": {"generators": [{"name": "s", "relation": [-15, 0, 1]}],
//               "note": "..."},                 note is optional
//     "p": 7,
//     "place": "first" | {"s": 1, ...},
//     "base_point": <point>,
//     "entries": [<entry>, ...],
//     "rank_assertion": {"claimed": true, "source": "..."}
//   }
//
//   <point>  = "infinity" | "infinity+" | "infinity-" | {"x": <elt>, "y": <elt>}
//   <elt>    = tower expression in canonical text form, e.g. "-z^2*u"
//   <entry>  = {"kind": "point", "point": <point>, "certificate": <cert>}
//            | {"kind": "weierstrass-family", "h": [c0, c1, ...]}
//   <cert>   = {"type": "base-point"} | {"type": "weierstrass-two-torsion"}
//            | {"type": "even-model-infinity"}
//            | {"type": "principal-divisor", "v": [<elt>, ...], "m": 5}
//            | {"type": "cantor-checked", "expected_order": 6}
//
// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; both spellings are accepted on input.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tpe/curve.hpp"
#include "tpe/tower.hpp"

namespace tpe {

using Json = nlohmann::ordered_json;

struct BasePointCert {};
struct WeierstrassTwoTorsionCert {};
struct EvenModelInfinityCert {};
/// div(y - v(x)) = m (P - P_inf).
struct PrincipalDivisorCert {
    std::vector<TowerElement> v;  // coefficients of v(x), low to high
    std::uint64_t m = 0;
};
struct CantorCheckedCert {
    std::uint64_t expected_order = 0;
};

using TorsionCertificate =
    std::variant<BasePointCert, WeierstrassTwoTorsionCert, EvenModelInfinityCert, PrincipalDivisorCert, CantorCheckedCert>;

std::string certificate_name(const TorsionCertificate& c);

struct ExplicitPointEntry {
    CurvePoint point;
    TorsionCertificate certificate;
};

/// The deg h Weierstrass points (alpha, 0) with h(alpha) = 0, taken over the
/// splitting field of h.
struct WeierstrassFamilyEntry {
    PolyQ h;
};

using TorsionSetEntry = std::variant<ExplicitPointEntry, WeierstrassFamilyEntry>;

struct FirstCanonicalPlace {};
/// Residue of each generator, by name.
using ExplicitPlace = std::map<std::string, std::uint64_t, std::less<>>;
using PlaceChoice = std::variant<FirstCanonicalPlace, ExplicitPlace>;

struct RankAssertion {
    bool claimed = false;
    std::string source;
};

struct TpeDocument {
    HyperellipticCurve curve;
    CurvePoint base_point;
    TowerPtr tower;
    std::string tower_note;
    std::uint64_t p = 0;
    PlaceChoice place;
    std::vector<TorsionSetEntry> entries;
    RankAssertion rank_assertion;
};

/// Throws InputError on malformed documents (including curves that fail
/// make_curve and expressions that do not parse).
TpeDocument parse_document(const Json& j);
TpeDocument parse_document_text(std::string_view text);

Json to_json(const TpeDocument& doc);
/// Canonical text: to_json(doc).dump(2) plus a trailing newline.
std::string to_canonical_string(const TpeDocument& doc);

// Building blocks shared with the CLI.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j, std::string_view what);
Json poly_to_json(const PolyQ& f);
/// Integer coefficient array, low to high.
PolyQ poly_from_json(const Json& j, std::string_view what);
Json tower_to_json(const TowerSpec& t, const std::string& note = {});
TowerPtr tower_from_json(const Json& j, std::string* note = nullptr);
Json point_to_json(const CurvePoint& p);
CurvePoint point_from_json(const Json& j, const TowerPtr& tower);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_file(const std::string& path);
Json parse_json_text(std::string_view text, std::string_view what);

}  // namespace tpe
