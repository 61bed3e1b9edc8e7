#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tpe/families.hpp"
#include "tpe/fixtures.hpp"
#include "tpe/verifier.hpp"

namespace tpe::cli {

namespace {

struct Globals {
    bool json = false;
    std::optional<std::size_t> place;
    std::optional<std::size_t> height_ceiling;
    std::optional<unsigned> seed;  // reserved for the randomized test harness

    VerifyOptions verify_options() const {
        VerifyOptions o;
        o.place_index = place;
        if (height_ceiling) o.torsion.height_ceiling_digits = *height_ceiling;
        return o;
    }
};

std::optional<std::size_t> env_height_ceiling() {
    const char* v = std::getenv("TPE_HEIGHT_CEILING");
    if (!v || !*v) return std::nullopt;
    try {
        Integer n = parse_integer(v);
        if (n < 1 || !fits_u64(n)) throw InputError("");
        return static_cast<std::size_t>(to_u64(n));
    } catch (const InputError&) {
        throw InputError(fmt::format("TPE_HEIGHT_CEILING must be a positive integer, got '{}'", v));
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError(fmt::format("cannot write '{}'", path));
    f << text;
}

std::pair<Integer, Integer> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw InputError(fmt::format("range '{}' is not of the form A..B", s));
    Integer a = parse_integer(s.substr(0, dots));
    Integer b = parse_integer(s.substr(dots + 2));
    if (a > b) throw InputError(fmt::format("range '{}' is empty", s));
    return {a, b};
}

std::uint64_t parse_prime_arg(const std::string& s) {
    Integer p = parse_integer(s);
    if (p < 2 || !fits_u64(p)) throw InputError(fmt::format("'{}' is not a usable prime", s));
    return to_u64(p);
}

CurvePoint parse_point_spec(const std::string& spec, const TowerPtr& tower) {
    if (spec == "infinity" || spec == "infinity+" || spec == "infinity-") return point_from_json(Json(spec), tower);
    const auto comma = spec.find(',');
    if (comma == std::string::npos) throw InputError(fmt::format("point '{}' is not 'X,Y' or 'infinity'", spec));
    return AffinePoint{parse_element(tower, spec.substr(0, comma)), parse_element(tower, spec.substr(comma + 1))};
}

HyperellipticCurve load_curve(const std::string& path) {
    Json j = parse_json_text(read_file(path), path);
    if (!j.is_object() || !j.contains("f")) throw InputError(fmt::format("{}: expected {{\"f\": [...]}}", path));
    try {
        return make_curve(poly_from_json(j.at("f"), "curve.f"));
    } catch (const DomainError& e) {
        throw InputError(fmt::format("{}: {}", path, e.what()));
    }
}

struct RankChoice {
    bool rank0 = false;
    std::string fixture_path;

    RankAssertion resolve(const std::string& family, const Integer& key) const {
        if (rank0) return {true, "asserted on the command line"};
        if (fixture_path.empty()) return {};
        RankFixture fx = load_rank_fixture(fixture_path);
        if (fx.family != family)
            throw InputError(fmt::format("{}: fixture is for family '{}', not '{}'", fixture_path, fx.family, family));
        if (!fx.contains(key)) return {false, ""};
        return {true, fx.source};
    }
};

int report_family(const std::string& family, const Json& params, FamilyResult fr, const RankAssertion& rank,
                  const std::string& emit, const Globals& g, std::ostream& out) {
    Json j;
    j["family"] = family;
    j["parameters"] = params;
    j["warnings"] = fr.warnings;
    j["notes"] = fr.notes;
    if (const auto* na = std::get_if<Inapplicable>(&fr.outcome)) {
        j["outcome"] = "inapplicable";
        j["reason"] = na->reason;
        j["reduced_point_count"] = na->reduced_count ? Json(*na->reduced_count) : Json(nullptr);
        if (g.json) {
            out << j.dump(2) << "\n";
        } else {
            for (const auto& w : fr.warnings) out << "warning: " << w << "\n";
            out << "inapplicable: " << na->reason << "\n";
        }
        return kInapplicable;
    }
    auto& doc = std::get<TpeDocument>(fr.outcome);
    doc.rank_assertion = rank;
    if (!emit.empty()) write_file(emit, to_canonical_string(doc));
    VerificationReport report = verify_tpe(doc, g.verify_options());
    std::optional<Conclusion> conclusion;
    if (report.passed()) conclusion = theorem_conclusion(report, doc);
    j["outcome"] = report.passed() ? "verified" : "failed";
    j["report"] = to_json(report, doc, conclusion);
    if (g.json) {
        out << j.dump(2) << "\n";
    } else {
        for (const auto& w : fr.warnings) out << "warning: " << w << "\n";
        for (const auto& n : fr.notes) out << "note: " << n << "\n";
        out << to_text(report, doc, conclusion);
    }
    return report.passed() ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verifies torsion packet envelopes of hyperelliptic curves over Q", "tpe"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_option("--place", g.place, "Use the INDEX-th place over p (0-based, canonical order)");
    app.add_option("--height-ceiling", g.height_ceiling, "Digit ceiling for exact Cantor arithmetic")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Reserved for the randomized test harness");

    std::function<int()> action;

    auto* verify = app.add_subcommand("verify", "Verify a TPE document and state its conclusion");
    std::string doc_path, emit_path;
    verify->add_option("document", doc_path, "TPE document (JSON)")->required();
    verify->add_option("--emit", emit_path, "Write the canonical form of the document to FILE");
    verify->callback([&] {
        action = [&] {
            TpeDocument doc = parse_document(parse_json_text(read_file(doc_path), doc_path));
            if (!emit_path.empty()) write_file(emit_path, to_canonical_string(doc));
            VerificationReport report = verify_tpe(doc, g.verify_options());
            std::optional<Conclusion> conclusion;
            if (report.passed()) conclusion = theorem_conclusion(report, doc);
            if (g.json)
                out << to_json(report, doc, conclusion).dump(2) << "\n";
            else
                out << to_text(report, doc, conclusion);
            return report.passed() ? kOk : kFailed;
        };
    });

    auto* family = app.add_subcommand("family", "Generate, verify and conclude for a curve family");
    family->require_subcommand(1);
    std::string d_arg, p_arg, fam_emit;
    RankChoice rank;
    auto add_rank_options = [&](CLI::App* sub) {
        auto* r0 = sub->add_flag("--rank0", rank.rank0, "Assert rank J(Q) = 0");
        sub->add_option("--rank-fixture", rank.fixture_path, "Rank fixture; asserts rank 0 for listed members")
            ->excludes(r0);
        sub->add_option("--emit", fam_emit, "Write the generated document to FILE");
    };

    auto* cd = family->add_subcommand("cd", "y^2 = x^5 + d at p = 11");
    cd->add_option("--d", d_arg, "Nonzero integer d")->required();
    add_rank_options(cd);
    cd->callback([&] {
        action = [&] {
            Integer d = parse_integer(d_arg);
            return report_family("cd", Json{{"d", integer_to_json(d)}}, generate_cd(d), rank.resolve("cd", d), fam_emit,
                                 g, out);
        };
    });

    auto* dd = family->add_subcommand("dd", "y^2 = x^(p-1) + d x^((p-1)/2) - 1, p = 3 mod 4, p | d");
    dd->add_option("--p", p_arg, "Prime p = 3 mod 4")->required();
    dd->add_option("--d", d_arg, "Multiple of p")->required();
    add_rank_options(dd);
    dd->callback([&] {
        action = [&] {
            const auto p = parse_prime_arg(p_arg);
            Integer d = parse_integer(d_arg);
            return report_family("dd", Json{{"p", p}, {"d", integer_to_json(d)}}, generate_dd(p, d),
                                 rank.resolve("dd", d), fam_emit, g, out);
        };
    });

    auto* xpx = family->add_subcommand("xpx", "y^2 = x^p - x over Q(zeta_(p-1))");
    xpx->add_option("--p", p_arg, "Prime p >= 5")->required();
    add_rank_options(xpx);
    xpx->callback([&] {
        action = [&] {
            const auto p = parse_prime_arg(p_arg);
            return report_family("xpx", Json{{"p", p}}, generate_xpx(p),
                                 rank.resolve("xpx", Integer(static_cast<unsigned long>(p))), fam_emit, g, out);
        };
    });

    auto* count = app.add_subcommand("count", "Count points of the reduction mod p");
    std::string curve_path;
    count->add_option("--curve", curve_path, "Curve JSON {\"f\": [...]}")->required();
    count->add_option("--p", p_arg, "Odd prime of good reduction")->required();
    count->callback([&] {
        action = [&] {
            HyperellipticCurve c = load_curve(curve_path);
            const auto p = parse_prime_arg(p_arg);
            const auto n = count_points_mod_p(c, p);
            if (g.json)
                out << Json{{"curve", Json{{"f", poly_to_json(c.f)}}}, {"p", p}, {"count", n}}.dump(2) << "\n";
            else
                out << fmt::format("#C~(F_{}) = {} for y^2 = {}\n", p, n, to_text(c.f));
            return kOk;
        };
    });

    auto* torsion = app.add_subcommand("torsion", "Decide whether P - P_inf is torsion");
    std::string point_spec, tower_path;
    torsion->add_option("--curve", curve_path, "Curve JSON")->required();
    torsion->add_option("--point", point_spec, "'X,Y' in tower expressions, or 'infinity'")->required();
    torsion->add_option("--tower", tower_path, "Tower JSON {\"generators\": [...]}; default Q");
    torsion->add_option("--p", p_arg, "Odd prime, split in the tower, of good reduction")->required();
    torsion->callback([&] {
        action = [&] {
            HyperellipticCurve c = load_curve(curve_path);
            TowerPtr tower = tower_path.empty() ? TowerSpec::rationals()
                                                : tower_from_json(parse_json_text(read_file(tower_path), tower_path));
            CurvePoint pt = parse_point_spec(point_spec, tower);
            const auto p = parse_prime_arg(p_arg);
            auto places = split_places(*tower, p);
            if (places.empty()) throw DomainError(fmt::format("{} does not split completely in the tower", p));
            const std::size_t idx = g.place.value_or(0);
            if (idx >= places.size()) throw InputError(fmt::format("--place {} but only {} places", idx, places.size()));
            TorsionVerdict v = torsion_decide(pt, c, tower, places[idx], g.verify_options().torsion);
            int code = std::holds_alternative<CertifiedTorsion>(v) ? kOk
                       : std::holds_alternative<NotTorsion>(v)     ? kFailed
                                                                   : kInapplicable;
            if (g.json) {
                Json j;
                j["point"] = point_to_json(pt);
                j["p"] = p;
                Json pl = Json::object();
                for (std::size_t i = 0; i < tower->size(); ++i) pl[tower->generator(i).name] = places[idx].residues[i].value();
                j["place"] = std::move(pl);
                if (const auto* t = std::get_if<CertifiedTorsion>(&v)) {
                    j["verdict"] = "certified-torsion";
                    j["order"] = t->order;
                } else if (const auto* nt = std::get_if<NotTorsion>(&v)) {
                    j["verdict"] = "not-torsion";
                    j["reduced_order"] = nt->reduced_order;
                } else {
                    j["verdict"] = "undecidable";
                    j["reason"] = std::get<Undecidable>(v).reason;
                }
                out << j.dump(2) << "\n";
            } else {
                out << fmt::format("{}: {}\n", to_string(pt), to_string(v));
            }
            return code;
        };
    });

    auto* sweep = app.add_subcommand("sweep", "Census over a range of a family");
    sweep->require_subcommand(1);
    auto* sweep_cd_cmd = sweep->add_subcommand("cd", "Census of y^2 = x^5 + d");
    std::string range_arg, fixture_path;
    sweep_cd_cmd->add_option("--range", range_arg, "A..B")->required();
    sweep_cd_cmd->add_option("--rank-fixture", fixture_path, "Rank fixture for the cd family")->required();
    sweep_cd_cmd->callback([&] {
        action = [&] {
            auto [a, b] = parse_range(range_arg);
            RankFixture fx = load_rank_fixture(fixture_path);
            if (fx.family != "cd") throw InputError(fmt::format("{}: not a cd fixture", fixture_path));
            Census c = sweep_cd(a, b, fx, g.verify_options());
            if (g.json)
                out << to_json(c).dump(2) << "\n";
            else
                out << to_text(c);
            return c.clean() ? kOk : kFailed;
        };
    });

    for (auto* sub : {verify, family, cd, dd, xpx, count, torsion, sweep, sweep_cd_cmd}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (!g.height_ceiling) g.height_ceiling = env_height_ceiling();
        return action ? action() : kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const BadReductionError& e) {
        err << "inapplicable: " << e.what() << "\n";
        return kInapplicable;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kFailed;
    }
}

}  // namespace tpe::cli
