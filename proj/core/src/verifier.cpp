#include "tpe/verifier.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "tpe/detail/overloaded.hpp"

namespace tpe {

using detail::overloaded;

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    auto n = exact_root(q.get_num(), 2);
    auto d = exact_root(q.get_den(), 2);
    if (!n || !d) return std::nullopt;
    return make_rational(*n, *d);
}

// For an even model y^2 = f with lc(f) a rational square, the h of degree
// g + 1 with deg(f - h^2) <= g. Returned only when f - h^2 is a nonzero
// constant, in which case div(y - h) = (g + 1)(P_+inf - P_-inf).
std::optional<PolyQ> square_plus_constant(const PolyQ& f) {
    const int n = f.degree();
    if (n < 2 || n % 2) return std::nullopt;
    auto lead = rational_sqrt(f.leading());
    if (!lead) return std::nullopt;
    const auto m = static_cast<std::size_t>(n / 2);
    std::vector<Rational> h(m + 1);
    h[m] = *lead;
    for (std::size_t k = m; k-- > 0;) {
        Rational acc = f[m + k];
        for (std::size_t i = k + 1; i < m; ++i) {
            const std::size_t j = m + k - i;
            if (j > k && j < m) acc -= h[i] * h[j];
        }
        h[k] = acc / (2 * h[m]);
    }
    PolyQ hp(h);
    PolyQ r = f - hp * hp;
    if (r.degree() != 0) return std::nullopt;
    return hp;
}

bool is_rational_point(const CurvePoint& p) {
    if (const auto* a = std::get_if<AffinePoint>(&p)) return a->x.as_rational() && a->y.as_rational();
    return true;
}

// Order bound for iota of a Weierstrass point (affine y = 0, or P_inf on odd
// models) relative to the document's base point.
struct BaseContext {
    std::optional<std::uint64_t> weierstrass_order;
    std::string weierstrass_problem;
    bool base_weierstrass = false;
    std::optional<std::uint64_t> infinity_difference_order;  // of P_+inf - P_-inf
};

BaseContext base_context(const TpeDocument& doc) {
    BaseContext ctx;
    const auto& c = doc.curve;
    ctx.base_weierstrass = is_weierstrass(doc.base_point, c);
    if (!c.is_odd())
        if (auto h = square_plus_constant(c.f)) ctx.infinity_difference_order = static_cast<std::uint64_t>(c.genus + 1);
    if (ctx.base_weierstrass) {
        ctx.weierstrass_order = 2;
    } else if (std::holds_alternative<InfinityEvenPlus>(doc.base_point) ||
               std::holds_alternative<InfinityEvenMinus>(doc.base_point)) {
        if (ctx.infinity_difference_order)
            ctx.weierstrass_order = 2 * *ctx.infinity_difference_order;
        else
            ctx.weierstrass_problem =
                "base point is at infinity and P_+inf - P_-inf is not certified torsion (f is not h^2 + c)";
    } else {
        ctx.weierstrass_problem = "base point is not a Weierstrass point";
    }
    return ctx;
}

CertificateResult fail(std::string detail) { return {false, std::nullopt, std::move(detail)}; }
CertificateResult pass(std::uint64_t order, std::string detail) { return {true, order, std::move(detail)}; }

CertificateResult check_family(const WeierstrassFamilyEntry& fe, const TpeDocument& doc, const BaseContext& ctx) {
    const PolyQ& h = fe.h;
    if (h.degree() < 1) return fail("h must be nonconstant");
    if (!is_squarefree(h)) return fail("h is not squarefree");
    if (!divmod(doc.curve.f, h).remainder.is_zero()) return fail("h does not divide f");
    if (!ctx.weierstrass_order) return fail(ctx.weierstrass_problem);
    return pass(*ctx.weierstrass_order, fmt::format("h | f and h squarefree: {} Weierstrass points", h.degree()));
}

CertificateResult check_principal(const AffinePoint& a, const PrincipalDivisorCert& pd, const TpeDocument& doc) {
    const auto& c = doc.curve;
    if (!std::holds_alternative<InfinityOdd>(doc.base_point)) return fail("principal-divisor needs base point P_inf");
    if (!c.is_odd()) return fail("principal-divisor needs an odd model");
    if (pd.m < 1) return fail("m must be at least 1");
    for (const auto& e : pd.v)
        if (!same_tower(e.tower(), doc.tower)) return fail("v is not over the document tower");
    TowerField k(doc.tower);
    PolyTower v(pd.v);
    if (v.degree() > c.genus) return fail(fmt::format("deg v = {} exceeds the genus {}", v.degree(), c.genus));
    if (!(v.evaluate(a.x, k.zero()) == a.y)) return fail("v(x(P)) != y(P)");
    PolyTower g = v * v - lift(c.f, doc.tower);
    if (g.degree() != static_cast<int>(pd.m))
        return fail(fmt::format("deg(v^2 - f) = {} but m = {}", g.degree(), pd.m));
    PolyTower target = g.leading() * poly::pow(k, poly::linear(k, a.x), pd.m);
    if (!(g == target)) return fail(fmt::format("v^2 - f is not c*(x - x(P))^{}", pd.m));
    return pass(pd.m, fmt::format("div(y - v(x)) = {}(P - P_inf)", pd.m));
}

CertificateResult check_point(const ExplicitPointEntry& pe, const TpeDocument& doc, const BaseContext& ctx,
                              const std::optional<ResidueAssignment>& w, const TorsionOptions& options) {
    const auto& c = doc.curve;
    const CurvePoint& pt = pe.point;
    if (const auto* a = std::get_if<AffinePoint>(&pt);
        a && (!same_tower(a->x.tower(), doc.tower) || !same_tower(a->y.tower(), doc.tower)))
        return fail("coordinates are not over the document tower");
    if (!on_curve(pt, c)) return fail(fmt::format("{} is not on the curve", to_string(pt)));

    return std::visit(
        overloaded{
            [&](const BasePointCert&) {
                if (!(pt == doc.base_point)) return fail("point is not the base point");
                return pass(1, "iota(P0) = 0");
            },
            [&](const WeierstrassTwoTorsionCert&) {
                if (!is_weierstrass(pt, c)) return fail("not a Weierstrass point");
                if (pt == doc.base_point) return pass(1, "Weierstrass base point");
                if (!ctx.weierstrass_order) return fail(ctx.weierstrass_problem);
                return pass(*ctx.weierstrass_order, "Weierstrass point");
            },
            [&](const EvenModelInfinityCert&) {
                if (c.is_odd()) return fail("even-model-infinity on an odd model");
                const bool plus = std::holds_alternative<InfinityEvenPlus>(pt);
                if (!plus && !std::holds_alternative<InfinityEvenMinus>(pt)) return fail("point is not P_+inf or P_-inf");
                if (pt == doc.base_point) return pass(1, "base point");
                if (!ctx.infinity_difference_order)
                    return fail("P_+inf - P_-inf is not certified torsion (f is not h^2 + c)");
                const std::uint64_t n = *ctx.infinity_difference_order;
                if (std::holds_alternative<InfinityEvenPlus>(doc.base_point) ||
                    std::holds_alternative<InfinityEvenMinus>(doc.base_point))
                    return pass(n, fmt::format("div(y - h) = {}(P_+inf - P_-inf)", n));
                if (ctx.base_weierstrass) return pass(2 * n, "2(P_inf - W) ~ P_+inf - P_-inf, which is torsion");
                return fail("base point is neither at infinity nor a Weierstrass point");
            },
            [&](const PrincipalDivisorCert& pd) {
                const auto* a = std::get_if<AffinePoint>(&pt);
                if (!a) return fail("principal-divisor needs an affine point");
                return check_principal(*a, pd, doc);
            },
            [&](const CantorCheckedCert& cc) {
                if (!std::holds_alternative<InfinityOdd>(doc.base_point))
                    return fail("cantor-checked needs base point P_inf");
                if (!c.is_odd()) return fail("cantor-checked needs an odd model");
                if (!w) return fail("no place available");
                TorsionVerdict v = torsion_decide(pt, c, doc.tower, *w, options);
                if (const auto* t = std::get_if<CertifiedTorsion>(&v); t && t->order == cc.expected_order)
                    return pass(t->order, to_string(v));
                return fail(fmt::format("expected certified torsion of order {}, got {}", cc.expected_order,
                                        to_string(v)));
            },
        },
        pe.certificate);
}

CertificateResult check_entry(const TorsionSetEntry& entry, const TpeDocument& doc, const BaseContext& ctx,
                              const std::optional<ResidueAssignment>& w, const TorsionOptions& options) {
    try {
        return std::visit(overloaded{
                              [&](const ExplicitPointEntry& pe) { return check_point(pe, doc, ctx, w, options); },
                              [&](const WeierstrassFamilyEntry& fe) { return check_family(fe, doc, ctx); },
                          },
                          entry);
    } catch (const Error& e) {
        return fail(e.what());
    }
}

std::string place_text(const TowerSpec& t, const ResidueAssignment& w) {
    if (t.size() == 0) return "no tower generators";
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i)
        out += fmt::format("{}{} -> {}", i ? ", " : "", t.generator(i).name, w.residues[i].value());
    return out;
}

PolyQ primitive_integral(const PolyQ& f) {
    Integer den = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer content = 0;
    std::vector<Integer> ints;
    for (const auto& c : f.coefficients()) {
        ints.push_back(c.get_num() * (den / c.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (content != 0)
        for (auto& i : ints) i /= content;
    return poly_q(ints);
}

ConditionResult& condition(VerificationReport& r, int n) { return r.conditions[static_cast<std::size_t>(n - 1)]; }

std::string join_points(const std::vector<RationalPoint>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? ", " : "") + to_string(pts[i]);
    return out + "}";
}

}  // namespace

bool VerificationReport::passed() const {
    return conditions.size() == 5 &&
           std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; }) && consistent;
}

CertificateResult verify_certificate(const TorsionSetEntry& entry, const TpeDocument& doc,
                                     const std::optional<ResidueAssignment>& w, const TorsionOptions& options) {
    return check_entry(entry, doc, base_context(doc), w, options);
}

VerificationReport verify_tpe(const TpeDocument& doc, const VerifyOptions& options) {
    VerificationReport r;
    r.conditions = {
        {1, "F is a finite extension of Q", false, {}},
        {2, "p is odd and completely split in F", false, {}},
        {3, "C has good reduction at p", false, {}},
        {4, "iota(T) is contained in J(F)_tors", false, {}},
        {5, "#T >= #C~(F_w)", false, {}},
    };
    const auto& c = doc.curve;
    const TowerSpec& tower = *doc.tower;
    if (c.low_genus_warning) r.warnings.push_back("curve has genus below 2");

    // (1)
    if (auto problem = tower.well_formedness_problem()) {
        condition(r, 1).detail = *problem;
    } else {
        condition(r, 1).passed = true;
        condition(r, 1).detail =
            fmt::format("{} generator(s), dimension {} over Q", tower.size(), tower.dimension());
        if (!doc.tower_note.empty()) condition(r, 1).detail += "; " + doc.tower_note;
    }

    // (2)
    const bool p_ok = doc.p != 2 && is_prime_u64(doc.p);
    std::vector<PolyQ> families;
    for (const auto& e : doc.entries)
        if (const auto* fe = std::get_if<WeierstrassFamilyEntry>(&e)) families.push_back(fe->h);
    try {
        if (!p_ok) throw DomainError(fmt::format("p = {} is not an odd prime", doc.p));
        auto places = split_places(tower, doc.p);
        if (places.empty()) throw DomainError(fmt::format("{} does not split completely in the tower", doc.p));
        for (const auto& h : families)
            if (h.degree() >= 1 && !splits_completely_mod_p(h, doc.p))
                throw DomainError(fmt::format("{} does not split into distinct linear factors mod {}", to_text(h), doc.p));
        ResidueAssignment w;
        std::string how;
        if (options.place_index) {
            if (*options.place_index >= places.size())
                throw DomainError(fmt::format("place index {} out of range ({} places)", *options.place_index,
                                              places.size()));
            w = places[*options.place_index];
            how = fmt::format("place {} of {}", *options.place_index, places.size());
        } else if (const auto* ep = std::get_if<ExplicitPlace>(&doc.place)) {
            w.p = doc.p;
            for (const auto& g : tower.generators()) {
                auto it = ep->find(g.name);
                if (it == ep->end()) throw DomainError(fmt::format("place has no residue for '{}'", g.name));
                w.residues.push_back(FpElt{it->second % doc.p, doc.p});
            }
            check_assignment(tower, w);
            how = fmt::format("explicit place, one of {}", places.size());
        } else {
            w = places.front();
            how = fmt::format("first canonical place of {}", places.size());
        }
        r.place = w;
        condition(r, 2).passed = true;
        condition(r, 2).detail = fmt::format("{}; {}", place_text(tower, w), how);
        if (!families.empty()) condition(r, 2).detail += "; family polynomials split mod p";
    } catch (const Error& e) {
        condition(r, 2).detail = e.what();
    }

    // (3)
    if (!p_ok) {
        condition(r, 3).detail = fmt::format("p = {} is not an odd prime", doc.p);
    } else {
        try {
            condition(r, 3).passed = has_good_reduction(c, doc.p);
            condition(r, 3).detail = condition(r, 3).passed ? fmt::format("p does not divide lc(f) disc(f)")
                                                            : fmt::format("p divides lc(f) disc(f) or f is not p-integral");
        } catch (const Error& e) {
            condition(r, 3).detail = e.what();
        }
    }
    const bool good = condition(r, 3).passed;
    if (good) r.reduced_count = count_points_mod_p(c, doc.p);

    // (4)
    const BaseContext ctx = base_context(doc);
    std::string base_problem;
    if (!on_curve(doc.base_point, c))
        base_problem = "base point is not on the curve";
    else if (!is_rational_point(doc.base_point))
        base_problem = "base point is not rational";
    const std::optional<ResidueAssignment> w = good ? r.place : std::nullopt;

    PolyQ family_lcm = poly_q({1});
    std::vector<CurvePoint> explicit_points;
    std::vector<ReducedPoint> reductions;
    bool reductions_ok = w.has_value();
    std::string reduction_problem;

    for (std::size_t i = 0; i < doc.entries.size(); ++i) {
        const auto& e = doc.entries[i];
        EntryResult er;
        er.index = i;
        CertificateResult cr = check_entry(e, doc, ctx, w, options.torsion);
        er.passed = cr.passed;
        er.order_divides = cr.order_divides;
        er.detail = cr.detail;
        if (const auto* fe = std::get_if<WeierstrassFamilyEntry>(&e)) {
            er.subject = fmt::format("roots of {}", to_text(fe->h));
            er.certificate = "weierstrass-family";
            if (fe->h.degree() >= 1) {
                PolyQ before = family_lcm;
                family_lcm = divmod(family_lcm * fe->h, gcd(family_lcm, fe->h)).quotient;
                family_lcm = poly::monic(RationalField{}, family_lcm);
                er.members = static_cast<std::size_t>(family_lcm.degree() - before.degree());
            }
        }
        r.entries.push_back(std::move(er));
    }

    for (std::size_t i = 0; i < doc.entries.size(); ++i) {
        const auto* pe = std::get_if<ExplicitPointEntry>(&doc.entries[i]);
        if (!pe) continue;
        EntryResult& er = r.entries[i];
        er.subject = to_string(pe->point);
        er.certificate = certificate_name(pe->certificate);
        bool duplicate = std::find(explicit_points.begin(), explicit_points.end(), pe->point) != explicit_points.end();
        if (const auto* a = std::get_if<AffinePoint>(&pe->point); a && !duplicate && family_lcm.degree() > 0 &&
                                                                   same_tower(a->x.tower(), doc.tower)) {
            if (lift(family_lcm, doc.tower).evaluate(a->x, zero_like(a->x)).is_zero() && a->y.is_zero()) {
                duplicate = true;
                er.detail += "; already a member of a Weierstrass family";
            }
        }
        if (duplicate) continue;
        explicit_points.push_back(pe->point);
        er.members = 1;
        if (!w) continue;
        try {
            ReducedPoint rp = reduce_point(pe->point, c, *w);
            er.reductions.push_back(to_string(rp));
            reductions.push_back(rp);
        } catch (const Error& ex) {
            reductions_ok = false;
            reduction_problem = fmt::format("entry {}: {}", i, ex.what());
        }
    }

    if (w && family_lcm.degree() > 0) {
        try {
            PrimeField k(w->p);
            auto roots = roots_mod_p(reduce_mod_p(primitive_integral(family_lcm), k), k);
            if (roots.size() != static_cast<std::size_t>(family_lcm.degree())) {
                reductions_ok = false;
                reduction_problem = fmt::format("{} family roots reduce to only {} residues", family_lcm.degree(),
                                                roots.size());
            }
            for (const auto& root : roots) reductions.push_back(ReducedAffine{root, FpElt{0, w->p}});
            for (auto& er : r.entries) {
                if (er.certificate != "weierstrass-family") continue;
                const auto& h = std::get<WeierstrassFamilyEntry>(doc.entries[er.index]).h;
                if (h.degree() < 1) continue;
                for (const auto& root : roots_mod_p(reduce_mod_p(primitive_integral(h), k), k))
                    er.reductions.push_back(to_string(ReducedPoint{ReducedAffine{root, FpElt{0, w->p}}}));
            }
        } catch (const Error& ex) {
            reductions_ok = false;
            reduction_problem = ex.what();
        }
    }

    r.torsion_packet_size = explicit_points.size() + static_cast<std::size_t>(std::max(0, family_lcm.degree()));

    auto& c4 = condition(r, 4);
    const auto failed = std::count_if(r.entries.begin(), r.entries.end(), [](const auto& e) { return !e.passed; });
    if (!base_problem.empty()) {
        c4.detail = base_problem;
    } else if (failed > 0) {
        c4.detail = fmt::format("{} of {} certificate(s) failed", failed, r.entries.size());
    } else {
        std::uint64_t exponent = 1;
        for (const auto& e : r.entries) exponent = std::lcm(exponent, e.order_divides.value_or(1));
        c4.passed = true;
        c4.detail = fmt::format("all {} certificate(s) verified; iota(T) is killed by {}", r.entries.size(), exponent);
    }

    // (5)
    auto& c5 = condition(r, 5);
    if (!r.reduced_count) {
        c5.detail = "no point count without good reduction";
    } else {
        c5.passed = r.torsion_packet_size >= *r.reduced_count;
        c5.detail = fmt::format("#T = {}, #C~(F_w) = {}", r.torsion_packet_size, *r.reduced_count);
    }

    // Consequence of the theorem: T injects into C~(F_w) and fills it.
    if (!w || !r.reduced_count) {
        r.consistency_detail = "not checked: no place of good reduction";
    } else if (!reductions_ok) {
        r.consistency_detail = "inconsistent certificates: " + reduction_problem;
    } else {
        std::sort(reductions.begin(), reductions.end(), reduced_less);
        auto dup = std::adjacent_find(reductions.begin(), reductions.end(),
                                      [](const auto& a, const auto& b) { return !reduced_less(a, b) && !reduced_less(b, a); });
        if (dup != reductions.end())
            r.consistency_detail = fmt::format("inconsistent certificates: two members of T reduce to {}", to_string(*dup));
        else if (r.torsion_packet_size != *r.reduced_count)
            r.consistency_detail = fmt::format("inconsistent certificates: #T = {} but #C~(F_w) = {}",
                                               r.torsion_packet_size, *r.reduced_count);
        else {
            r.consistent = true;
            r.consistency_detail = "reductions of T are distinct and #T = #C~(F_w)";
        }
    }
    return r;
}

std::string to_string(const RationalPoint& p) {
    return std::visit(overloaded{
                          [](const RationalAffine& a) { return fmt::format("({}, {})", to_string(a.x), to_string(a.y)); },
                          [](const InfinityOdd&) { return std::string("P_inf"); },
                          [](const InfinityEvenPlus&) { return std::string("P_+inf"); },
                          [](const InfinityEvenMinus&) { return std::string("P_-inf"); },
                      },
                      p);
}

bool rational_less(const RationalPoint& a, const RationalPoint& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* pa = std::get_if<RationalAffine>(&a)) {
        const auto& pb = std::get<RationalAffine>(b);
        if (pa->x != pb.x) return pa->x < pb.x;
        return pa->y < pb.y;
    }
    return false;
}

void sort_points(std::vector<RationalPoint>& pts) {
    std::sort(pts.begin(), pts.end(), rational_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

Json point_to_json(const RationalPoint& p) {
    return std::visit(overloaded{
                          [](const RationalAffine& a) {
                              Json o;
                              o["x"] = to_string(a.x);
                              o["y"] = to_string(a.y);
                              return o;
                          },
                          [](const InfinityOdd&) { return Json("infinity"); },
                          [](const InfinityEvenPlus&) { return Json("infinity+"); },
                          [](const InfinityEvenMinus&) { return Json("infinity-"); },
                      },
                      p);
}

Conclusion theorem_conclusion(const VerificationReport& report, const TpeDocument& doc) {
    if (!report.passed()) throw DomainError("no conclusion: the envelope did not verify");
    const auto& f = doc.curve.f;
    Conclusion out;
    for (const auto& e : doc.entries) {
        std::visit(overloaded{
                       [&](const ExplicitPointEntry& pe) {
                           std::visit(overloaded{
                                          [&](const AffinePoint& a) {
                                              auto x = a.x.as_rational();
                                              auto y = a.y.as_rational();
                                              if (x && y) out.rational_torsion_points.push_back(RationalAffine{*x, *y});
                                          },
                                          [&](const auto& inf) { out.rational_torsion_points.push_back(inf); },
                                      },
                                      pe.point);
                       },
                       [&](const WeierstrassFamilyEntry& fe) {
                           for (const auto& r : rational_roots(fe.h))
                               out.rational_torsion_points.push_back(RationalAffine{r, Rational(0)});
                       },
                   },
                   e);
    }
    sort_points(out.rational_torsion_points);
    for (const auto& p : out.rational_torsion_points)
        if (const auto* a = std::get_if<RationalAffine>(&p); a && a->y * a->y != evaluate(f, a->x))
            throw Error(fmt::format("internal: {} is not on the curve", to_string(p)));

    const std::string set = join_points(out.rational_torsion_points);
    out.statements.push_back(fmt::format("C(Q) ∩ J(Q)_tors ⊆ T, #T = {}", report.torsion_packet_size));
    out.statements.push_back(fmt::format("C(Q) ∩ J(Q)_tors = {}", set));
    if (doc.rank_assertion.claimed) {
        out.rank_source = doc.rank_assertion.source;
        if (doc.curve.is_odd()) {
            out.rank = RankConclusion::Equality;
            out.statements.push_back(fmt::format("C(Q) = {}  [external rank input: rank J(Q) = 0]", set));
        } else {
            out.rank = RankConclusion::Inclusion;
            out.statements.push_back(fmt::format("C(Q) ⊆ {}  [external rank input: rank J(Q) = 0]", set));
        }
    }
    return out;
}

Json to_json(const Conclusion& c) {
    Json pts = Json::array();
    for (const auto& p : c.rational_torsion_points) pts.push_back(point_to_json(p));
    Json out;
    out["rational_torsion_points"] = std::move(pts);
    switch (c.rank) {
    case RankConclusion::None: out["rational_points"] = nullptr; break;
    case RankConclusion::Equality: out["rational_points"] = "equal"; break;
    case RankConclusion::Inclusion: out["rational_points"] = "subset"; break;
    }
    if (c.rank != RankConclusion::None) {
        out["rank_provenance"] = "external rank input";
        out["rank_source"] = c.rank_source;
    }
    out["statements"] = c.statements;
    return out;
}

Json to_json(const VerificationReport& r, const TpeDocument& doc, const std::optional<Conclusion>& conclusion) {
    Json out;
    out["format"] = "tpe-report/1";
    out["verified"] = r.passed();
    out["curve"] = Json{{"f", poly_to_json(doc.curve.f)}};
    out["p"] = doc.p;
    if (r.place) {
        Json pl = Json::object();
        for (std::size_t i = 0; i < doc.tower->size(); ++i) pl[doc.tower->generator(i).name] = r.place->residues[i].value();
        out["place"] = std::move(pl);
    } else {
        out["place"] = nullptr;
    }
    Json conds = Json::array();
    for (const auto& c : r.conditions) {
        Json j;
        j["condition"] = c.number;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        conds.push_back(std::move(j));
    }
    out["conditions"] = std::move(conds);
    out["consistency"] = Json{{"passed", r.consistent}, {"detail", r.consistency_detail}};
    out["torsion_packet_size"] = r.torsion_packet_size;
    out["reduced_point_count"] = r.reduced_count ? Json(*r.reduced_count) : Json(nullptr);
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json j;
        j["index"] = e.index;
        j["subject"] = e.subject;
        j["certificate"] = e.certificate;
        j["passed"] = e.passed;
        j["order_divides"] = e.order_divides ? Json(*e.order_divides) : Json(nullptr);
        j["members"] = e.members;
        j["reductions"] = e.reductions;
        j["detail"] = e.detail;
        entries.push_back(std::move(j));
    }
    out["entries"] = std::move(entries);
    out["warnings"] = r.warnings;
    out["conclusion"] = conclusion ? to_json(*conclusion) : Json(nullptr);
    return out;
}

std::string to_text(const VerificationReport& r, const TpeDocument& doc, const std::optional<Conclusion>& conclusion) {
    std::string out;
    out += fmt::format("curve    y^2 = {}\n", to_text(doc.curve.f));
    out += fmt::format("prime    p = {}{}\n", doc.p, r.place && doc.tower->size() > 0 ? fmt::format(", place {}", place_text(*doc.tower, *r.place)) : "");
    for (const auto& c : r.conditions)
        out += fmt::format("[{}] ({}) {}: {}\n", c.passed ? "pass" : "FAIL", c.number, c.name, c.detail);
    out += fmt::format("[{}] {}\n", r.consistent ? "pass" : "FAIL", r.consistency_detail);
    out += "entries\n";
    for (const auto& e : r.entries) {
        std::string reds;
        for (const auto& s : e.reductions) reds += (reds.empty() ? "" : " ") + s;
        out += fmt::format("  {:>2}  {:<4} {:<24} {:<24} {}{}\n", e.index, e.passed ? "ok" : "FAIL", e.subject,
                           e.certificate, e.order_divides ? fmt::format("order | {}", *e.order_divides) : "",
                           reds.empty() ? "" : "  -> " + reds);
        if (!e.passed && !e.detail.empty()) out += fmt::format("        {}\n", e.detail);
    }
    for (const auto& wmsg : r.warnings) out += fmt::format("warning: {}\n", wmsg);
    out += fmt::format("verdict  {}\n", r.passed() ? "verified" : "not verified");
    if (conclusion)
        for (const auto& s : conclusion->statements) out += fmt::format("  {}\n", s);
    return out;
}

}  // namespace tpe
