#include "tpe/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include <fmt/format.h>

namespace tpe {

namespace {
const RationalField kQ;
}

PolyQ poly_q(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return PolyQ(std::move(v));
}

PolyQ poly_q(const std::vector<Integer>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return PolyQ(std::move(v));
}

PolyQ derivative(const PolyQ& f) { return poly::derivative(kQ, f); }
PolyQ gcd(const PolyQ& a, const PolyQ& b) { return poly::gcd(kQ, a, b); }
DivMod<Rational> divmod(const PolyQ& a, const PolyQ& b) { return poly::divmod(kQ, a, b); }
Rational evaluate(const PolyQ& f, const Rational& at) { return f.evaluate(at, Rational(0)); }

Rational resultant(const PolyQ& a_in, const PolyQ& b_in) {
    if (a_in.is_zero() || b_in.is_zero()) return 0;
    PolyQ a = a_in, b = b_in;
    Rational sign_and_scale = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() * b.degree()) % 2) sign_and_scale = -sign_and_scale;
        std::swap(a, b);
    }
    for (;;) {
        const int m = a.degree(), n = b.degree();
        if (n == 0) {
            Rational lead_pow = 1;
            for (int i = 0; i < m; ++i) lead_pow *= b.leading();
            return sign_and_scale * lead_pow;
        }
        PolyQ r = poly::rem(kQ, a, b);
        if (r.is_zero()) return 0;
        const int deg_r = r.degree();
        if ((m * n) % 2) sign_and_scale = -sign_and_scale;
        for (int i = 0; i < m - deg_r; ++i) sign_and_scale *= b.leading();
        a = std::move(b);
        b = std::move(r);
    }
}

Rational discriminant(const PolyQ& f) {
    const int n = f.degree();
    if (n < 2) throw DomainError(fmt::format("discriminant needs degree >= 2, got {}", n));
    Rational d = resultant(f, derivative(f)) / f.leading();
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

bool is_squarefree(const PolyQ& f) {
    if (f.is_zero()) throw DomainError("squarefree test on the zero polynomial");
    return gcd(f, derivative(f)).degree() == 0;
}

PolyFp reduce_mod_p(const PolyQ& f, const PrimeField& field) {
    return poly::map<FpElt>(f, [&](const Rational& c) { return field.from_rational(c); });
}

bool splits_completely(const PolyFp& g_in, const PrimeField& k) {
    if (g_in.degree() < 1) throw DomainError("splitting test needs degree >= 1");
    PolyFp g = poly::monic(k, g_in);
    if (poly::gcd(k, g, poly::derivative(k, g)).degree() != 0) return false;
    PolyFp x = poly::x(k);
    Integer p = static_cast<unsigned long>(k.modulus());
    return poly::powmod(k, x, p, g) == poly::rem(k, x, g);
}

bool splits_completely_mod_p(const PolyQ& g, std::uint64_t p) {
    PrimeField k(p);
    if (g.degree() < 1) throw DomainError("splitting test needs degree >= 1");
    if (!is_p_integral(g.leading(), p) || k.from_rational(g.leading()).is_zero())
        throw DomainError(fmt::format("leading coefficient of relation vanishes mod {}", p));
    return splits_completely(reduce_mod_p(g, k), k);
}

std::vector<FpElt> roots_mod_p(const PolyFp& g, const PrimeField& k) {
    if (g.degree() < 1) throw DomainError("root enumeration needs degree >= 1");
    std::vector<FpElt> out;
    for (std::uint64_t r = 0; r < k.modulus(); ++r) {
        FpElt x{r, k.modulus()};
        if (g.evaluate(x, k.zero()).is_zero()) out.push_back(x);
    }
    return out;
}

PowerClassification integer_power_classification(const Integer& d) {
    if (d == 0) throw DomainError("power classification of 0");
    PowerClassification c;
    c.perfect_square = sgn(d) > 0 && mpz_perfect_square_p(d.get_mpz_t()) != 0;
    c.perfect_fifth_power = exact_root(d, 5).has_value();
    c.tenth_power_free = true;
    Integer mag = abs(d);
    for (Integer m = 2;; ++m) {
        Integer m10;
        mpz_pow_ui(m10.get_mpz_t(), m.get_mpz_t(), 10);
        if (m10 > mag) break;
        if (mpz_divisible_p(mag.get_mpz_t(), m10.get_mpz_t())) {
            c.tenth_power_free = false;
            break;
        }
    }
    return c;
}

PolyQ cyclotomic(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic polynomial of index 0");
    static std::mutex mu;
    static std::map<unsigned, PolyQ> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    PolyQ num = poly::monomial(kQ, Rational(1), n) - poly_q({1});
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = poly::exact_div(kQ, num, cyclotomic(d));
    std::lock_guard lock(mu);
    return memo.emplace(n, std::move(num)).first->second;
}

std::vector<Integer> positive_divisors(const Integer& n_in) {
    if (n_in == 0) throw DomainError("divisors of 0");
    Integer n = abs(n_in);
    std::vector<std::pair<Integer, unsigned>> factors;
    std::uint64_t steps = 0;
    for (Integer q = 2; q * q <= n; ++q) {
        if (++steps > 50'000'000) throw DomainError("integer too large for trial-division factoring");
        if (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
            unsigned e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
                n /= q;
                ++e;
            }
            factors.emplace_back(q, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<Integer> divs{1};
    for (const auto& [q, e] : factors) {
        const std::size_t base = divs.size();
        Integer power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<Rational> rational_roots(const PolyQ& h_in) {
    if (h_in.is_zero()) throw DomainError("rational roots of the zero polynomial");
    Integer den_lcm = 1;
    for (const auto& c : h_in.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    for (const auto& c : h_in.coefficients()) ints.push_back(c.get_num() * (den_lcm / c.get_den()));

    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    ints.erase(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(low));
    PolyQ h = poly_q(ints);
    if (h.degree() >= 1) {
        for (const auto& a : positive_divisors(ints.front()))
            for (const auto& b : positive_divisors(ints.back()))
                for (int sign : {1, -1}) {
                    Rational cand = make_rational(sign * a, b);
                    if (is_zero(evaluate(h, cand))) roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::string to_text(const PolyQ& f, std::string_view var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const Rational& c = f[static_cast<std::size_t>(i)];
        if (is_zero(c)) continue;
        Rational a = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        std::string mono = i == 0 ? "" : i == 1 ? std::string(var) : fmt::format("{}^{}", var, i);
        if (mono.empty())
            out += to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_string(a) + "*" + mono;
    }
    return out;
}

}  // namespace tpe
