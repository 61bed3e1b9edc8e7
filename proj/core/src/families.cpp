#include "tpe/families.hpp"

#include <fmt/format.h>

namespace tpe {

namespace {

constexpr std::uint64_t kCdPrime = 11;

std::uint64_t residue_mod(const Integer& d, std::uint64_t m) { return reduce_mod(d, m); }

PolyQ x5_plus(const Integer& d) {
    std::vector<Integer> c(6, 0);
    c[0] = d;
    c[5] = 1;
    return poly_q(c);
}

ExplicitPointEntry point_entry(CurvePoint p, TorsionCertificate cert) { return {std::move(p), std::move(cert)}; }

TpeDocument base_document(PolyQ f, TowerPtr tower, std::uint64_t p, CurvePoint base) {
    TpeDocument doc;
    doc.curve = make_curve(f);
    doc.tower = std::move(tower);
    doc.p = p;
    doc.place = FirstCanonicalPlace{};
    doc.base_point = std::move(base);
    return doc;
}

// (0, y) and (0, -y) with div(y -/+ v) = 5 (P - P_inf).
void add_sqrt_points(TpeDocument& doc, const TowerElement& root) {
    for (const TowerElement& y : {root, -root})
        doc.entries.emplace_back(point_entry(AffinePoint{zero_like(y), y}, PrincipalDivisorCert{{y}, 5}));
}

}  // namespace

FamilyResult generate_cd(const Integer& d) {
    if (d == 0) throw DomainError("d must be nonzero");
    FamilyResult out;
    const PowerClassification cls = integer_power_classification(d);
    if (!cls.tenth_power_free) out.warnings.push_back(fmt::format("d = {} is not tenth-power-free", to_string(d)));

    const std::uint64_t r = residue_mod(d, kCdPrime);
    const PolyQ f = x5_plus(d);
    if (r == 0) {
        out.outcome = Inapplicable{"11 divides d: bad reduction at 11", std::nullopt};
        return out;
    }
    if (r != 1 && r != 7 && r != 9) {
        const auto n = count_points_mod_p(make_curve(f), kCdPrime);
        out.outcome = Inapplicable{
            fmt::format("#C~(F_11) = {} >= 11: T would need at least 11 points of a torsion packet, "
                        "more than Coleman's bound of 10 allows; the theorem can not be applied",
                        n),
            n};
        return out;
    }

    TpeDocument doc;
    if (r == 7) {
        doc = base_document(f, TowerSpec::rationals(), kCdPrime, InfinityOdd{});
        doc.entries.emplace_back(point_entry(InfinityOdd{}, BasePointCert{}));
    } else if (r == 9) {
        TowerPtr tower = TowerSpec::rationals();
        if (!cls.perfect_square) tower = TowerSpec::make({{"s", poly_q({0, 0, 1}) - PolyQ({Rational(d)})}});
        doc = base_document(f, tower, kCdPrime, InfinityOdd{});
        doc.entries.emplace_back(point_entry(InfinityOdd{}, BasePointCert{}));
        add_sqrt_points(doc, cls.perfect_square ? TowerElement(tower, Rational(*exact_root(d, 2)))
                                                : TowerElement::generator(tower, "s"));
    } else {
        std::vector<Generator> gens{{"z", cyclotomic(5)}};
        if (!cls.perfect_square) gens.push_back({"s", poly_q({0, 0, 1}) - PolyQ({Rational(d)})});
        if (!cls.perfect_fifth_power) gens.push_back({"u", poly_q({0, 0, 0, 0, 0, 1}) - PolyQ({Rational(d)})});
        TowerPtr tower = TowerSpec::make(std::move(gens));
        doc = base_document(f, tower, kCdPrime, InfinityOdd{});
        doc.entries.emplace_back(point_entry(InfinityOdd{}, BasePointCert{}));
        add_sqrt_points(doc, cls.perfect_square ? TowerElement(tower, Rational(*exact_root(d, 2)))
                                                : TowerElement::generator(tower, "s"));
        const TowerElement u = cls.perfect_fifth_power ? TowerElement(tower, Rational(*exact_root(d, 5)))
                                                       : TowerElement::generator(tower, "u");
        const TowerElement z = TowerElement::generator(tower, "z");
        TowerElement zi(tower, Rational(1));
        for (int i = 0; i < 5; ++i, zi *= z)
            doc.entries.emplace_back(point_entry(AffinePoint{-(zi * u), zero_like(u)}, WeierstrassTwoTorsionCert{}));
        if (cls.perfect_square && cls.perfect_fifth_power)
            out.warnings.push_back(
                "d is both a square and a fifth power, a case outside the case table; the verified T is reported");
    }
    out.outcome = std::move(doc);
    return out;
}

DdDiscriminant dd_discriminant(std::uint64_t p, const Integer& d) {
    const std::size_t n = p - 1;
    std::vector<Integer> c(n + 1, 0);
    c[0] = -1;
    c[n / 2] = d;
    c[n] = 1;
    DdDiscriminant out;
    const Rational disc = discriminant(poly_q(c));
    out.discriminant = disc.get_num();
    Integer half = static_cast<unsigned long>(n / 2);
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), half.get_mpz_t(), n);
    Integer four_d2 = 4 + d * d;
    mpz_pow_ui(b.get_mpz_t(), four_d2.get_mpz_t(), n / 2);
    out.closed_form = a * b;
    out.residue = reduce_mod(out.discriminant, p);
    return out;
}

FamilyResult generate_dd(std::uint64_t p, const Integer& d) {
    if (p < 3 || !is_prime_u64(p)) throw DomainError(fmt::format("p = {} is not an odd prime", p));
    if (p % 4 != 3) throw DomainError(fmt::format("p = {} is not 3 mod 4", p));
    if (residue_mod(d, p) != 0) throw DomainError(fmt::format("p = {} does not divide d = {}", p, to_string(d)));
    if (p < 7) throw DomainError("p = 3 gives a curve of genus 0");
    const std::size_t n = p - 1;
    std::vector<Integer> c(n + 1, 0);
    c[0] = -1;
    c[n / 2] = d;
    c[n] = 1;
    const PolyQ f = poly_q(c);
    if (!is_squarefree(f)) throw DomainError("f is not squarefree");

    FamilyResult out;
    const DdDiscriminant dc = dd_discriminant(p, d);
    if (abs(dc.discriminant) != dc.closed_form)
        throw Error(fmt::format("discriminant {} disagrees with the closed form {}", to_string(dc.discriminant),
                                to_string(dc.closed_form)));
    if (dc.residue != 1) throw Error(fmt::format("discriminant is {} mod {}, expected 1", dc.residue, p));
    out.notes.push_back(fmt::format("disc(f) = {}{}", sgn(dc.discriminant) < 0 ? "-" : "",
                                    "((p-1)/2)^(p-1) (4 + d^2)^((p-1)/2)"));
    out.notes.push_back(fmt::format("disc(f) = 1 mod {}", p));

    TpeDocument doc = base_document(f, TowerSpec::rationals(), p, InfinityEvenPlus{});
    doc.tower_note = "splitting field of f, certified split at p";
    doc.entries.emplace_back(WeierstrassFamilyEntry{f});
    doc.entries.emplace_back(point_entry(InfinityEvenPlus{}, EvenModelInfinityCert{}));
    doc.entries.emplace_back(point_entry(InfinityEvenMinus{}, EvenModelInfinityCert{}));
    out.outcome = std::move(doc);
    return out;
}

FamilyResult generate_xpx(std::uint64_t p) {
    if (p < 5 || !is_prime_u64(p)) throw DomainError(fmt::format("p = {} must be a prime >= 5", p));
    std::vector<Integer> c(p + 1, 0);
    c[1] = -1;
    c[p] = 1;
    std::vector<Integer> h(p, 0);
    h[0] = -1;
    h[p - 1] = 1;
    TowerPtr tower = TowerSpec::make({{"z", cyclotomic(static_cast<unsigned>(p - 1))}});
    TpeDocument doc = base_document(poly_q(c), tower, p, InfinityOdd{});
    doc.entries.emplace_back(point_entry(InfinityOdd{}, BasePointCert{}));
    doc.entries.emplace_back(WeierstrassFamilyEntry{poly_q(h)});
    doc.entries.emplace_back(
        point_entry(AffinePoint{TowerElement(tower, Rational(0)), TowerElement(tower, Rational(0))},
                    WeierstrassTwoTorsionCert{}));
    FamilyResult out;
    out.outcome = std::move(doc);
    return out;
}

CaseAnalysis corollary_case_analysis(const Integer& d, bool rank0) {
    if (d == 0) throw DomainError("d must be nonzero");
    const std::uint64_t r = residue_mod(d, kCdPrime);
    if (r != 1 && r != 7 && r != 9) throw DomainError(fmt::format("d = {} is {} mod 11, outside 1, 7, 9", to_string(d), r));
    const PowerClassification cls = integer_power_classification(d);
    if (!cls.tenth_power_free) throw DomainError(fmt::format("d = {} is not tenth-power-free", to_string(d)));
    (void)rank0;  // every listed point is torsion, so both readings give the same set

    CaseAnalysis out;
    out.points.push_back(InfinityOdd{});
    auto add_sqrt = [&] {
        const Rational s(*exact_root(d, 2));
        out.points.push_back(RationalAffine{0, s});
        out.points.push_back(RationalAffine{0, -s});
    };
    if (r == 7) {
        out.case_label = "d = 7 mod 11";
    } else if (r == 9) {
        out.case_label = cls.perfect_square ? "d = 9 mod 11, square" : "d = 9 mod 11, not a square";
        if (cls.perfect_square) add_sqrt();
    } else if (cls.perfect_square && !cls.perfect_fifth_power) {
        out.case_label = "d = 1 mod 11, square, not a fifth power";
        add_sqrt();
    } else if (!cls.perfect_square && cls.perfect_fifth_power) {
        out.case_label = "d = 1 mod 11, fifth power, not a square";
        out.points.push_back(RationalAffine{Rational(-*exact_root(d, 5)), 0});
    } else if (!cls.perfect_square) {
        out.case_label = "d = 1 mod 11, neither a square nor a fifth power";
    } else {
        out.case_label = "d = 1 mod 11, square and fifth power";
        out.warning = "d is both a square and a fifth power, which the case table omits";
        add_sqrt();
        out.points.push_back(RationalAffine{Rational(-*exact_root(d, 5)), 0});
    }
    sort_points(out.points);
    return out;
}

}  // namespace tpe
