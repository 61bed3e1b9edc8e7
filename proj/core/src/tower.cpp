#include "tpe/tower.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <fmt/format.h>

namespace tpe {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Reduced powers t^0 .. t^(2d-2) of a root of the monic relation m.
std::vector<std::vector<Rational>> power_table(const PolyQ& m) {
    const auto d = static_cast<std::size_t>(m.degree());
    std::vector<std::vector<Rational>> table;
    std::vector<Rational> cur(d, Rational(0));
    cur[0] = 1;
    if (d == 1) {
        table.push_back(cur);
        return table;
    }
    for (std::size_t n = 0; n <= 2 * d - 2; ++n) {
        table.push_back(cur);
        // multiply by t: shift up, fold t^d = -(m_0 + ... + m_(d-1) t^(d-1))
        Rational top = cur[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (!is_zero(top))
            for (std::size_t i = 0; i < d; ++i) cur[i] -= top * m[i];
    }
    return table;
}

}  // namespace

TowerSpec::TowerSpec(std::vector<Generator> generators) : gens_(std::move(generators)) {
    std::set<std::string, std::less<>> names;
    for (const auto& g : gens_) {
        if (!is_identifier(g.name)) throw InputError(fmt::format("invalid generator name '{}'", g.name));
        if (!names.insert(g.name).second) throw InputError(fmt::format("duplicate generator name '{}'", g.name));
        if (g.relation.degree() < 1)
            throw InputError(fmt::format("relation for '{}' must have degree >= 1", g.name));
        if (g.relation.leading() != 1) throw InputError(fmt::format("relation for '{}' is not monic", g.name));
    }
    strides_.assign(gens_.size(), 1);
    for (std::size_t i = gens_.size(); i-- > 0;) {
        strides_[i] = dim_;
        dim_ *= degree(i);
    }
    exps_.resize(dim_);
    for (std::size_t idx = 0; idx < dim_; ++idx) {
        std::vector<std::uint32_t> e(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i)
            e[i] = static_cast<std::uint32_t>((idx / strides_[i]) % degree(i));
        exps_[idx] = std::move(e);
    }
    for (const auto& g : gens_) powers_.push_back(power_table(g.relation));
}

TowerPtr TowerSpec::make(std::vector<Generator> generators) {
    return std::make_shared<const TowerSpec>(std::move(generators));
}

TowerPtr TowerSpec::rationals() {
    static const TowerPtr q = make({});
    return q;
}

std::optional<std::size_t> TowerSpec::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

std::size_t TowerSpec::index(const std::vector<std::uint32_t>& exponents) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) idx += exponents[i] * strides_[i];
    return idx;
}

std::optional<std::string> TowerSpec::well_formedness_problem() const {
    for (const auto& g : gens_)
        if (!is_squarefree(g.relation)) return fmt::format("relation for '{}' is not squarefree", g.name);
    return std::nullopt;
}

bool operator==(const TowerSpec& a, const TowerSpec& b) {
    if (a.gens_.size() != b.gens_.size()) return false;
    for (std::size_t i = 0; i < a.gens_.size(); ++i)
        if (a.gens_[i].name != b.gens_[i].name || !(a.gens_[i].relation == b.gens_[i].relation)) return false;
    return true;
}

bool same_tower(const TowerPtr& a, const TowerPtr& b) { return a == b || (a && b && *a == *b); }

TowerElement::TowerElement(TowerPtr tower, const Rational& constant) : tower_(std::move(tower)) {
    if (!tower_) throw DomainError("tower element without a tower");
    c_.assign(tower_->dimension(), Rational(0));
    c_[0] = constant;
}

TowerElement::TowerElement(TowerPtr tower, std::vector<Rational> dense) : tower_(std::move(tower)), c_(std::move(dense)) {
    if (!tower_) throw DomainError("tower element without a tower");
    if (c_.size() != tower_->dimension())
        throw DomainError(fmt::format("expected {} coefficients, got {}", tower_->dimension(), c_.size()));
}

TowerElement TowerElement::generator(const TowerPtr& tower, std::size_t i) {
    TowerElement e(tower, Rational(0));
    std::vector<std::uint32_t> exps(tower->size(), 0);
    if (tower->degree(i) == 1) {
        // relation t - c: the generator is the rational c
        e.c_[0] = -tower->generator(i).relation[0];
        return e;
    }
    exps[i] = 1;
    e.c_[tower->index(exps)] = 1;
    return e;
}

TowerElement TowerElement::generator(const TowerPtr& tower, std::string_view name) {
    auto i = tower->index_of(name);
    if (!i) throw InputError(fmt::format("unknown generator '{}'", name));
    return generator(tower, *i);
}

void TowerElement::check_same(const TowerElement& b) const {
    if (!same_tower(tower_, b.tower_)) throw DomainError("tower mismatch");
}

bool TowerElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return tpe::is_zero(q); });
}

std::optional<Rational> TowerElement::as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!tpe::is_zero(c_[i])) return std::nullopt;
    return c_[0];
}

TowerElement TowerElement::operator-() const {
    TowerElement r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

TowerElement& TowerElement::operator+=(const TowerElement& b) {
    check_same(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& b) {
    check_same(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
}

TowerElement& TowerElement::operator*=(const TowerElement& b) { return *this = *this * b; }

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    a.check_same(b);
    const TowerSpec& t = *a.tower_;
    const std::size_t k = t.size();
    std::vector<Rational> out(t.dimension(), Rational(0));

    std::vector<std::size_t> nz_a, nz_b;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!is_zero(a.c_[i])) nz_a.push_back(i);
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        if (!is_zero(b.c_[i])) nz_b.push_back(i);

    if (k == 0) {
        if (!nz_a.empty() && !nz_b.empty()) out[0] = a.c_[0] * b.c_[0];
        return {a.tower_, std::move(out)};
    }

    std::vector<std::pair<std::size_t, Rational>> terms, next;
    for (std::size_t ia : nz_a) {
        const auto& ea = t.exponents(ia);
        for (std::size_t ib : nz_b) {
            const auto& eb = t.exponents(ib);
            terms.clear();
            terms.emplace_back(0, a.c_[ia] * b.c_[ib]);
            for (std::size_t g = 0; g < k; ++g) {
                const auto& red = t.reduced_power(g, ea[g] + eb[g]);
                next.clear();
                for (const auto& [idx, coef] : terms)
                    for (std::size_t e = 0; e < red.size(); ++e)
                        if (!is_zero(red[e])) next.emplace_back(idx + e * t.stride(g), coef * red[e]);
                std::swap(terms, next);
            }
            for (const auto& [idx, coef] : terms) out[idx] += coef;
        }
    }
    return {a.tower_, std::move(out)};
}

bool operator==(const TowerElement& a, const TowerElement& b) {
    if (!same_tower(a.tower_, b.tower_)) return false;
    return a.c_ == b.c_;
}

TowerElement TowerElement::pow(std::uint64_t e) const {
    TowerElement r(tower_, Rational(1)), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

TowerElement TowerElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in a tower ring");
    if (auto q = as_rational()) return {tower_, 1 / *q};
    if (tower_->size() > 1) throw DomainError("exact inversion supports at most one generator");

    const RationalField q;
    const PolyQ& m = tower_->generator(0).relation;
    PolyQ a(c_);
    auto eg = poly::xgcd(q, a, m);
    if (eg.g.degree() != 0)
        throw ZeroDivisorError(fmt::format("element shares a factor with the relation of '{}'",
                                           tower_->generator(0).name));
    PolyQ inv = poly::rem(q, eg.s, m);
    std::vector<Rational> dense(tower_->dimension(), Rational(0));
    for (std::size_t i = 0; i < inv.size(); ++i) dense[i] = inv[i];
    return {tower_, std::move(dense)};
}

std::size_t TowerElement::height_digits() const {
    std::size_t h = 0;
    for (const auto& q : c_) h = std::max(h, tpe::height_digits(q));
    return h;
}

std::string to_string(const TowerElement& a) {
    const TowerSpec& t = *a.tower();
    std::string out;
    for (std::size_t idx = 0; idx < a.coefficients().size(); ++idx) {
        const Rational& c = a.coefficients()[idx];
        if (is_zero(c)) continue;
        std::string mono;
        const auto& e = t.exponents(idx);
        for (std::size_t g = 0; g < e.size(); ++g) {
            if (e[g] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += t.generator(g).name;
            if (e[g] > 1) mono += fmt::format("^{}", e[g]);
        }
        const bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        std::string body;
        if (mono.empty())
            body = to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = to_string(mag) + "*" + mono;
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const TowerElement& a) { return os << to_string(a); }

namespace {

class ExprParser {
public:
    ExprParser(const TowerPtr& tower, std::string_view text) : tower_(tower), s_(text) {}

    TowerElement parse() {
        TowerElement v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(std::string_view why) const {
        throw InputError(fmt::format("cannot parse '{}' at offset {}: {}", s_, pos_, why));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    TowerElement expr() {
        TowerElement v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    TowerElement term() {
        TowerElement v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                TowerElement d = unary();
                if (d.is_zero()) fail("division by zero");
                if (auto q = d.as_rational())
                    v = v * TowerElement(tower_, 1 / *q);
                else
                    v *= d.inverse();
            } else {
                return v;
            }
        }
    }

    TowerElement unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    TowerElement power() {
        TowerElement base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            Integer e = parse_integer(s_.substr(start, pos_ - start));
            if (!fits_u64(e) || e > 100000) fail("exponent too large");
            return base.pow(to_u64(e));
        }
        return base;
    }

    TowerElement atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            TowerElement v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {tower_, Rational(parse_integer(s_.substr(start, pos_ - start)))};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            auto name = s_.substr(start, pos_ - start);
            if (!tower_->index_of(name)) fail(fmt::format("unknown generator '{}'", name));
            return TowerElement::generator(tower_, name);
        }
        fail("unexpected character");
    }

    const TowerPtr& tower_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

TowerElement parse_element(const TowerPtr& tower, std::string_view text) { return ExprParser(tower, text).parse(); }

std::vector<ResidueAssignment> split_places(const TowerSpec& tower, std::uint64_t p) {
    if (p == 2) throw DomainError("p = 2 is not allowed for a split place");
    PrimeField k(p);
    std::vector<std::vector<FpElt>> choices;
    for (const auto& g : tower.generators()) {
        if (g.relation.degree() >= 2) {
            Rational disc = discriminant(g.relation);
            if (!is_p_integral(disc, p) || k.from_rational(disc).is_zero())
                throw DomainError(fmt::format("{} divides the discriminant of the relation for '{}'", p, g.name));
        }
        PolyFp red = reduce_mod_p(g.relation, k);
        if (!splits_completely(red, k)) return {};
        choices.push_back(roots_mod_p(red, k));
    }
    std::vector<ResidueAssignment> out{{p, {}}};
    for (const auto& roots : choices) {
        std::vector<ResidueAssignment> grown;
        grown.reserve(out.size() * roots.size());
        for (const auto& w : out)
            for (const auto& r : roots) {
                ResidueAssignment ext = w;
                ext.residues.push_back(r);
                grown.push_back(std::move(ext));
            }
        out = std::move(grown);
    }
    return out;
}

void check_assignment(const TowerSpec& tower, const ResidueAssignment& w) {
    if (w.residues.size() != tower.size())
        throw DomainError(fmt::format("place assigns {} residues to {} generators", w.residues.size(), tower.size()));
    PrimeField k(w.p);
    for (std::size_t i = 0; i < tower.size(); ++i) {
        const auto& r = w.residues[i];
        if (r.modulus() != w.p) throw DomainError("residue modulus differs from the place's prime");
        if (!reduce_mod_p(tower.generator(i).relation, k).evaluate(r, k.zero()).is_zero())
            throw DomainError(fmt::format("{} is not a root of the relation for '{}' mod {}", r.value(),
                                          tower.generator(i).name, w.p));
    }
}

FpElt reduce_element(const TowerElement& a, const ResidueAssignment& w) {
    const TowerSpec& t = *a.tower();
    if (w.residues.size() != t.size()) throw DomainError("place does not match the tower");
    PrimeField k(w.p);
    // powers of each residue
    std::vector<std::vector<FpElt>> rpow(t.size());
    for (std::size_t g = 0; g < t.size(); ++g) {
        FpElt cur = k.one();
        for (std::size_t e = 0; e < t.degree(g); ++e) {
            rpow[g].push_back(cur);
            cur *= w.residues[g];
        }
    }
    FpElt acc = k.zero();
    for (std::size_t idx = 0; idx < a.coefficients().size(); ++idx) {
        const Rational& c = a.coefficients()[idx];
        if (is_zero(c)) continue;
        FpElt term = k.from_rational(c);
        const auto& e = t.exponents(idx);
        for (std::size_t g = 0; g < t.size(); ++g) term *= rpow[g][e[g]];
        acc += term;
    }
    return acc;
}

PolyTower lift(const PolyQ& f, const TowerPtr& tower) {
    return poly::map<TowerElement>(f, [&](const Rational& c) { return TowerElement(tower, c); });
}

}  // namespace tpe
