#include "ses/polyring.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "ses/config.hpp"

namespace ses {

UniPoly poly_add(const UniPoly& a, const UniPoly& b, const FieldSpec& F) {
    std::vector<Scalar> c(std::max(a.coeffs.size(), b.coeffs.size()), Scalar{0});
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(a.coeff(i), b.coeff(i));
    return UniPoly(std::move(c));
}

UniPoly poly_sub(const UniPoly& a, const UniPoly& b, const FieldSpec& F) {
    std::vector<Scalar> c(std::max(a.coeffs.size(), b.coeffs.size()), Scalar{0});
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.sub(a.coeff(i), b.coeff(i));
    return UniPoly(std::move(c));
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b, const FieldSpec& F) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Scalar> c(a.coeffs.size() + b.coeffs.size() - 1, Scalar{0});
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].v == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
    return UniPoly(std::move(c));
}

UniPoly poly_scale(const UniPoly& a, Scalar s, const FieldSpec& F) {
    std::vector<Scalar> c = a.coeffs;
    for (auto& x : c) x = F.mul(x, s);
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b,
                                        const FieldSpec& F) {
    if (b.is_zero()) throw ZeroPolynomial("poly_divmod: division by zero");
    UniPoly r = a;
    if (r.degree() < b.degree()) return {UniPoly(), r};
    std::vector<Scalar> q(r.degree() - b.degree() + 1, Scalar{0});
    Scalar lead_inv = F.inv(b.lead());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = r.degree() - b.degree();
        Scalar f = F.mul(r.lead(), lead_inv);
        q[shift] = f;
        for (std::size_t i = 0; i < b.coeffs.size(); ++i)
            r.coeffs[i + shift] = F.sub(r.coeffs[i + shift], F.mul(f, b.coeffs[i]));
        r.trim();
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly poly_mod(const UniPoly& a, const UniPoly& m, const FieldSpec& F) {
    return poly_divmod(a, m, F).second;
}

UniPoly poly_gcd(UniPoly a, UniPoly b, const FieldSpec& F) {
    while (!b.is_zero()) {
        UniPoly r = poly_mod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : monic(a, F);
}

UniPoly poly_pow(const UniPoly& a, unsigned e, const FieldSpec& F) {
    UniPoly r(std::vector<Scalar>{F.one()});
    UniPoly base = a;
    while (e) {
        if (e & 1) r = poly_mul(r, base, F);
        base = poly_mul(base, base, F);
        e >>= 1;
    }
    return r;
}

UniPoly poly_powmod(const UniPoly& a, std::uint64_t e, const UniPoly& m,
                    const FieldSpec& F) {
    UniPoly r(std::vector<Scalar>{F.one()});
    UniPoly base = poly_mod(a, m, F);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, F), m, F);
        base = poly_mod(poly_mul(base, base, F), m, F);
        e >>= 1;
    }
    return r;
}

UniPoly monic(const UniPoly& a, const FieldSpec& F) {
    if (a.is_zero()) return a;
    return poly_scale(a, F.inv(a.lead()), F);
}

Scalar poly_eval(const UniPoly& a, Scalar x, const FieldSpec& F) {
    Scalar r{0};
    for (std::size_t i = a.coeffs.size(); i-- > 0;)
        r = F.add(F.mul(r, x), a.coeffs[i]);
    return r;
}

UniPoly poly_x() { return UniPoly({Scalar{0}, Scalar{1}}); }

bool is_irreducible(const UniPoly& f0, const FieldSpec& F) {
    if (f0.degree() < 1) throw ConstantPolynomial("is_irreducible: degree < 1");
    const UniPoly f = monic(f0, F);
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    const UniPoly x = poly_x();
    // x^(q^n) == x mod f
    UniPoly t = x;
    for (unsigned i = 0; i < n; ++i) t = poly_powmod(t, F.q(), f, F);
    if (poly_sub(t, x, F).is_zero() == false) return false;
    for (unsigned r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime_u64(r)) continue;
        UniPoly u = x;
        for (unsigned i = 0; i < n / r; ++i) u = poly_powmod(u, F.q(), f, F);
        UniPoly g = poly_gcd(poly_sub(u, x, F), f, F);
        if (g.degree() != 0) return false;
    }
    return true;
}

namespace {

std::int64_t moebius_mu(unsigned n) {
    std::int64_t mu = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

using IrrKey = std::tuple<std::uint64_t, unsigned, std::vector<std::uint64_t>, unsigned>;
std::map<IrrKey, std::vector<UniPoly>> g_irr_cache;
std::mutex g_irr_mutex;

}  // namespace

std::uint64_t count_monic_irreducibles(std::uint64_t q, unsigned n) {
    std::int64_t total = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        total += moebius_mu(d) * static_cast<std::int64_t>(upow(q, n / d));
    }
    return static_cast<std::uint64_t>(total) / n;
}

const std::vector<UniPoly>& enumerate_monic_irreducibles(const FieldSpec& F,
                                                         unsigned n) {
    if (n < 1) throw InvalidInput("enumerate_monic_irreducibles: n >= 1");
    IrrKey key{F.p(), F.k(), F.modulus(), n};
    std::lock_guard<std::mutex> lock(g_irr_mutex);
    auto it = g_irr_cache.find(key);
    if (it != g_irr_cache.end()) return it->second;

    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) {
        total *= F.q();
        if (total > max_enum())
            throw BoundExceeded("enumerate_monic_irreducibles: q^n over cap");
    }
    std::vector<UniPoly> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Scalar> c(n + 1);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < n; ++i) {
            c[i] = F.element(v % F.q());
            v /= F.q();
        }
        c[n] = F.one();
        UniPoly f(std::move(c));
        if (is_irreducible(f, F)) out.push_back(std::move(f));
    }
    return g_irr_cache.emplace(std::move(key), std::move(out)).first->second;
}

std::vector<std::pair<UniPoly, unsigned>> factor(const UniPoly& f,
                                                 const FieldSpec& F) {
    if (f.is_zero()) throw ZeroPolynomial("factor: zero polynomial");
    std::vector<std::pair<UniPoly, unsigned>> out;
    UniPoly rem = monic(f, F);
    for (unsigned d = 1; rem.degree() >= static_cast<int>(2 * d); ++d) {
        for (const UniPoly& g : enumerate_monic_irreducibles(F, d)) {
            if (rem.degree() < static_cast<int>(2 * d)) break;
            unsigned mult = 0;
            for (;;) {
                auto [q, r] = poly_divmod(rem, g, F);
                if (!r.is_zero()) break;
                rem = q;
                ++mult;
            }
            if (mult) out.emplace_back(g, mult);
        }
    }
    if (rem.degree() >= 1) out.emplace_back(rem, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<PrimaryDecomposition> primary_part(const UniPoly& f,
                                                 const FieldSpec& F) {
    if (f.is_zero()) throw ZeroPolynomial("primary_part: zero polynomial");
    if (f.degree() < 1) throw ConstantPolynomial("primary_part: degree < 1");
    auto fac = factor(f, F);
    if (fac.size() != 1) return std::nullopt;
    return PrimaryDecomposition{fac[0].first, fac[0].second};
}

// --- HomForm -------------------------------------------------------------

HomForm::HomForm(unsigned nv, unsigned deg, TermMap t)
    : nvars(nv), degree(deg), terms(std::move(t)) {
    for (const auto& [e, c] : terms) {
        if (e.size() != nvars) throw InvalidInput("HomForm: tuple arity");
        unsigned s = 0;
        for (unsigned x : e) s += x;
        if (s != degree) throw InvalidInput("HomForm: tuple degree mismatch");
        if (c.v == 0) throw InvalidInput("HomForm: stored zero coefficient");
    }
}

HomForm form_add(const HomForm& a, const HomForm& b, const FieldSpec& F) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.nvars != b.nvars || a.degree != b.degree)
        throw DimensionMismatch("form_add: mixed shapes");
    HomForm out(a.nvars, a.degree);
    out.terms = a.terms;
    for (const auto& [e, c] : b.terms) out.set(e, F.add(out.coeff(e), c));
    return out;
}

HomForm form_sub(const HomForm& a, const HomForm& b, const FieldSpec& F) {
    return form_add(a, form_scale(b, F.from_int(-1), F), F);
}

HomForm form_mul(const HomForm& a, const HomForm& b, const FieldSpec& F) {
    if (a.is_zero() || b.is_zero())
        return HomForm(std::max(a.nvars, b.nvars), 0);
    if (a.nvars != b.nvars) throw DimensionMismatch("form_mul: arity");
    HomForm out(a.nvars, a.degree + b.degree);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            ExpTuple e(a.nvars);
            for (unsigned i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            out.set(e, F.add(out.coeff(e), F.mul(ca, cb)));
        }
    return out;
}

HomForm form_scale(const HomForm& a, Scalar s, const FieldSpec& F) {
    HomForm out(a.nvars, a.degree);
    if (s.v == 0) return out;
    for (const auto& [e, c] : a.terms) out.set(e, F.mul(c, s));
    return out;
}

Scalar form_eval(const HomForm& a, const std::vector<Scalar>& x,
                 const FieldSpec& F) {
    if (x.size() != a.nvars) throw DimensionMismatch("form_eval: point arity");
    Scalar acc{0};
    for (const auto& [e, c] : a.terms) {
        Scalar t = c;
        for (unsigned i = 0; i < a.nvars; ++i)
            if (e[i]) t = F.mul(t, F.pow(x[i], e[i]));
        acc = F.add(acc, t);
    }
    return acc;
}

HomForm form_substitute(const HomForm& a, const Mat& t, const FieldSpec& F) {
    if (t.rows != a.nvars || t.cols != a.nvars)
        throw DimensionMismatch("form_substitute: matrix shape");
    // images of the variables as degree-1 forms
    std::vector<HomForm> image(a.nvars);
    for (unsigned i = 0; i < a.nvars; ++i) {
        HomForm lin(a.nvars, 1);
        for (unsigned j = 0; j < a.nvars; ++j) {
            if (t.at(i, j).v == 0) continue;
            ExpTuple e(a.nvars, 0);
            e[j] = 1;
            lin.set(e, t.at(i, j));
        }
        image[i] = lin;
    }
    HomForm out(a.nvars, a.degree);
    for (const auto& [e, c] : a.terms) {
        HomForm term(a.nvars, 0);
        ExpTuple zero(a.nvars, 0);
        term.set(zero, c);
        for (unsigned i = 0; i < a.nvars; ++i)
            for (unsigned rep = 0; rep < e[i]; ++rep)
                term = form_mul(term, image[i], F);
        out = form_add(out, term, F);
    }
    return out;
}

HomForm form_frobenius(const HomForm& a, unsigned j, const FieldSpec& F) {
    HomForm out(a.nvars, a.degree);
    for (const auto& [e, c] : a.terms) out.set(e, F.frobenius(c, j));
    return out;
}

HomForm form_normalize(const HomForm& a, const FieldSpec& F) {
    if (a.is_zero()) return a;
    Scalar lead = a.terms.begin()->second;
    return form_scale(a, F.inv(lead), F);
}

HomForm homogenize(const UniPoly& f, const FieldSpec& F) {
    if (f.is_zero()) throw ZeroPolynomial("homogenize: zero polynomial");
    unsigned n = static_cast<unsigned>(f.degree());
    HomForm out(2, n);
    for (unsigned i = 0; i <= n; ++i) {
        Scalar c = f.coeff(i);
        if (c.v == 0) continue;
        out.set({i, n - i}, c);
    }
    (void)F;
    return out;
}

UniPoly dehomogenize(const HomForm& f, unsigned var_index, const FieldSpec& F) {
    if (f.nvars != 2) throw NotBivariate("dehomogenize: nvars != 2");
    if (var_index > 1) throw InvalidInput("dehomogenize: bad variable index");
    unsigned keep = 1 - var_index;
    std::vector<Scalar> c(f.degree + 1, Scalar{0});
    for (const auto& [e, coef] : f.terms) c[e[keep]] = coef;
    (void)F;
    return UniPoly(std::move(c));
}

namespace {

TermMap map_mul(const TermMap& a, const TermMap& b, const FieldSpec& F) {
    TermMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExpTuple e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Scalar s = F.mul(ca, cb);
            auto it = out.find(e);
            Scalar acc = it == out.end() ? s : F.add(it->second, s);
            if (acc.v == 0)
                out.erase(e);
            else
                out[e] = acc;
        }
    return out;
}

TermMap map_sub(const TermMap& a, const TermMap& b, const FieldSpec& F) {
    TermMap out = a;
    for (const auto& [e, c] : b) {
        auto it = out.find(e);
        Scalar acc = it == out.end() ? F.neg(c) : F.sub(it->second, c);
        if (acc.v == 0)
            out.erase(e);
        else
            out[e] = acc;
    }
    return out;
}

TermMap map_scale(const TermMap& a, Scalar s, const FieldSpec& F) {
    TermMap out;
    if (s.v == 0) return out;
    for (const auto& [e, c] : a) out[e] = F.mul(c, s);
    return out;
}

// Exact division in the sparse polynomial ring (lex elimination); nullopt
// when not exact.
std::optional<TermMap> map_exact_div(TermMap rem, const TermMap& b,
                                     const FieldSpec& F) {
    if (b.empty()) return std::nullopt;
    const auto& [eb, cb] = *b.begin();
    Scalar cb_inv = F.inv(cb);
    TermMap q;
    while (!rem.empty()) {
        const auto& [ea, ca] = *rem.begin();
        ExpTuple e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (ea[i] < eb[i]) return std::nullopt;
            e[i] = ea[i] - eb[i];
        }
        Scalar c = F.mul(ca, cb_inv);
        q[e] = c;
        TermMap t;
        t[e] = c;
        rem = map_sub(rem, map_mul(t, b, F), F);
    }
    return q;
}

// Exact square root in odd characteristic, processing variables in order.
std::optional<TermMap> map_sqrt_rec(const TermMap& f, unsigned v, unsigned nvars,
                                    const FieldSpec& F) {
    if (f.empty()) return TermMap{};
    if (v == nvars) {
        // constant
        if (f.size() != 1) return std::nullopt;
        const auto& [e, c] = *f.begin();
        for (unsigned x : e)
            if (x != 0) return std::nullopt;
        auto s = F.sqrt(c);
        if (!s) return std::nullopt;
        TermMap out;
        out[e] = *s;
        return out;
    }
    unsigned m2 = 0;
    for (const auto& [e, c] : f) m2 = std::max(m2, e[v]);
    if (m2 == 0) return map_sqrt_rec(f, v + 1, nvars, F);
    if (m2 % 2 != 0) return std::nullopt;
    unsigned m = m2 / 2;
    // slices by x_v-exponent, with x_v zeroed out
    std::vector<TermMap> slice(m2 + 1);
    for (const auto& [e, c] : f) {
        ExpTuple r = e;
        unsigned ev = r[v];
        r[v] = 0;
        slice[m2 - ev][r] = c;  // slice[j] is the coefficient of x_v^(2m-j)
    }
    auto g0 = map_sqrt_rec(slice[0], v + 1, nvars, F);
    if (!g0) return std::nullopt;
    std::vector<TermMap> g(m + 1);
    g[0] = *g0;
    TermMap twice_g0 = map_scale(g[0], F.from_int(2), F);
    for (unsigned j = 1; j <= m; ++j) {
        TermMap acc = slice[j];
        for (unsigned i = 1; i < j; ++i)
            acc = map_sub(acc, map_mul(g[i], g[j - i], F), F);
        auto gj = map_exact_div(acc, twice_g0, F);
        if (!gj) return std::nullopt;
        g[j] = *gj;
    }
    TermMap out;
    for (unsigned j = 0; j <= m; ++j) {
        for (const auto& [e, c] : g[j]) {
            ExpTuple r = e;
            r[v] = m - j;
            out[r] = c;  // slices occupy distinct x_v-degrees
        }
    }
    return out;
}

}  // namespace

std::optional<HomForm> form_sqrt(const HomForm& f, const FieldSpec& F) {
    if (f.is_zero()) return HomForm(f.nvars, f.degree / 2);
    if (f.degree % 2 != 0) return std::nullopt;
    if (F.p() == 2) {
        HomForm out(f.nvars, f.degree / 2);
        for (const auto& [e, c] : f.terms) {
            ExpTuple h(f.nvars);
            for (unsigned i = 0; i < f.nvars; ++i) {
                if (e[i] % 2 != 0) return std::nullopt;
                h[i] = e[i] / 2;
            }
            out.set(h, *F.sqrt(c));
        }
        return out.is_zero() ? out : form_normalize(out, F);
    }
    auto g = map_sqrt_rec(f.terms, 0, f.nvars, F);
    if (!g) return std::nullopt;
    if (map_sub(map_mul(*g, *g, F), f.terms, F) != TermMap{}) return std::nullopt;
    return form_normalize(HomForm(f.nvars, f.degree / 2, *g), F);
}

}  // namespace ses
