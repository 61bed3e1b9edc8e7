#include "tpe/jacobian.hpp"

#include <algorithm>
#include <cmath>

#include "tpe/detail/overloaded.hpp"

namespace tpe {

using detail::overloaded;

FpJacobian reduced_jacobian(const HyperellipticCurve& c, std::uint64_t p) {
    PrimeField k(p);
    return {k, reduce_mod_p(c.f, k)};
}

TowerJacobian tower_jacobian(const HyperellipticCurve& c, const TowerPtr& tower) {
    return {TowerField(tower), lift(c.f, tower)};
}

TowerDivisor embed_point(const TowerJacobian& jac, const CurvePoint& p) {
    return std::visit(overloaded{
                          [&](const AffinePoint& a) { return jac.point(a.x, a.y); },
                          [&](const InfinityOdd&) { return jac.identity(); },
                          [](const auto&) -> TowerDivisor {
                              throw DomainError("even-model points have no Cantor embedding");
                          },
                      },
                      p);
}

FpDivisor embed_point(const FpJacobian& jac, const ReducedPoint& p) {
    return std::visit(overloaded{
                          [&](const ReducedAffine& a) { return jac.point(a.x, a.y); },
                          [&](const InfinityOdd&) { return jac.identity(); },
                          [](const auto&) -> FpDivisor {
                              throw DomainError("even-model points have no Cantor embedding");
                          },
                      },
                      p);
}

FpDivisor reduce_divisor(const TowerDivisor& d, const ResidueAssignment& w) {
    auto red = [&](const TowerElement& e) { return reduce_element(e, w); };
    return {poly::map<FpElt>(d.u, red), poly::map<FpElt>(d.v, red)};
}

std::uint64_t hasse_weil_bound(std::uint64_t p, int genus) {
    long double b = std::pow(std::sqrt(static_cast<long double>(p)) + 1.0L, 2.0L * genus);
    if (b > 1e18L) throw DomainError("Hasse-Weil bound does not fit in 64 bits");
    return static_cast<std::uint64_t>(std::ceil(b));
}

std::uint64_t order_of_reduced(const FpJacobian& jac, const FpDivisor& d) {
    const std::uint64_t bound = hasse_weil_bound(jac.field().modulus(), jac.genus());
    FpDivisor acc = d;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (jac.is_identity(acc)) return n;
        acc = jac.add(acc, d);
    }
    throw Error(fmt::format("no multiple of the divisor vanished below the bound {}", bound));
}

std::string to_string(const TorsionVerdict& v) {
    return std::visit(overloaded{
                          [](const CertifiedTorsion& t) { return fmt::format("certified torsion of order {}", t.order); },
                          [](const NotTorsion& t) {
                              return fmt::format("not torsion (reduction has order {}, exact multiple nonzero)",
                                                 t.reduced_order);
                          },
                          [](const Undecidable& u) { return fmt::format("undecidable: {}", u.reason); },
                      },
                      v);
}

TorsionVerdict torsion_decide(const CurvePoint& p, const HyperellipticCurve& c, const TowerPtr& tower,
                              const ResidueAssignment& w, const TorsionOptions& options) {
    PrimeField k(w.p);  // odd prime check
    check_assignment(*tower, w);
    auto places = split_places(*tower, w.p);
    if (places.empty()) throw DomainError(fmt::format("{} does not split completely in the tower", w.p));
    if (!has_good_reduction(c, w.p)) throw BadReductionError(fmt::format("curve has bad reduction at {}", w.p));
    if (const auto* a = std::get_if<AffinePoint>(&p); a && !same_tower(a->x.tower(), tower))
        throw DomainError("point coordinates live in a different tower");
    if (!on_curve(p, c)) throw DomainError(fmt::format("{} is not on the curve", to_string(p)));

    if (!c.is_odd()) return Undecidable{"even-degree model: Cantor arithmetic is only implemented for odd models"};
    if (tower->size() > 1) return Undecidable{"exact arithmetic needs a tower with at most one generator"};
    if (std::holds_alternative<InfinityOdd>(p)) return CertifiedTorsion{1};

    const ReducedPoint reduced = reduce_point(p, c, w);
    const FpJacobian jac_p = reduced_jacobian(c, w.p);
    const std::uint64_t n = order_of_reduced(jac_p, embed_point(jac_p, reduced));

    try {
        const TowerJacobian jac = tower_jacobian(c, tower);
        const TowerDivisor d = embed_point(jac, p);
        auto guard = [&](const TowerDivisor& step) {
            std::size_t h = 0;
            for (const auto& e : step.u.coefficients()) h = std::max(h, e.height_digits());
            for (const auto& e : step.v.coefficients()) h = std::max(h, e.height_digits());
            if (h > options.height_ceiling_digits)
                throw HeightExceeded(fmt::format("coefficient height {} digits exceeds ceiling {}", h,
                                                 options.height_ceiling_digits));
        };
        const TowerDivisor multiple = jac.scalar_mul(Integer(static_cast<unsigned long>(n)), d, guard);
        if (jac.is_identity(multiple)) return CertifiedTorsion{n};
        return NotTorsion{n};
    } catch (const ZeroDivisorError& e) {
        return Undecidable{fmt::format("zero divisor in the tower ring: {}", e.what())};
    } catch (const HeightExceeded& e) {
        return Undecidable{e.what()};
    }
}

}  // namespace tpe
