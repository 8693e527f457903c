#include "ses/moebius.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "ses/config.hpp"

namespace ses {

SemiLin2 SemiLin2::identity() {
    SemiLin2 m;
    m.mat = Mat::identity(2);
    return m;
}

SemiLin2 make_semilin(Mat m, unsigned frob, const FieldSpec& F) {
    if (m.rows != 2 || m.cols != 2) throw DimensionMismatch("make_semilin: need 2x2");
    Scalar det = F.sub(F.mul(m.at(0, 0), m.at(1, 1)), F.mul(m.at(0, 1), m.at(1, 0)));
    if (det.v == 0) throw InvalidInput("make_semilin: singular matrix");
    return SemiLin2{std::move(m), frob % F.k()};
}

SemiLin2 semilin_compose(const SemiLin2& m, const SemiLin2& n, const FieldSpec& F) {
    Mat mt = m.mat;
    for (auto& e : mt.entries) e = F.frobenius(e, n.frob);
    return SemiLin2{mat_mul(mt, n.mat, F), (m.frob + n.frob) % F.k()};
}

FormIdeal FormIdeal::from_form(const HomForm& f, const FieldSpec& F) {
    if (f.nvars != 2) throw NotBivariate("FormIdeal: need a binary form");
    if (f.is_zero() || f.degree < 1)
        throw InvalidInput("FormIdeal: need a nonzero form of degree >= 1");
    FormIdeal out;
    out.coeffs.assign(f.degree + 1, Scalar{0});
    for (const auto& [e, c] : f.terms) out.coeffs[e[1]] = c;
    std::size_t first = 0;
    while (out.coeffs[first].v == 0) ++first;
    Scalar inv = F.inv(out.coeffs[first]);
    for (auto& c : out.coeffs) c = F.mul(c, inv);
    return out;
}

FormIdeal FormIdeal::from_poly(const UniPoly& f, const FieldSpec& F) {
    return from_form(homogenize(f, F), F);
}

HomForm FormIdeal::to_form() const {
    unsigned n = degree();
    HomForm out(2, n);
    for (unsigned i = 0; i <= n; ++i)
        if (coeffs[i].v != 0) out.set({n - i, i}, coeffs[i]);
    return out;
}

namespace {

using Dense = std::vector<Scalar>;  // d[j] multiplies X^(deg-j) Y^j

Dense dense_mul(const Dense& a, const Dense& b, const FieldSpec& F) {
    Dense c(a.size() + b.size() - 1, Scalar{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    return c;
}

}  // namespace

FormIdeal act(const FormIdeal& f, const SemiLin2& m, const FieldSpec& F) {
    unsigned n = f.degree();
    Scalar a = m.mat.at(0, 0), b = m.mat.at(0, 1);
    Scalar c = m.mat.at(1, 0), d = m.mat.at(1, 1);
    // powers of the two image linear forms
    std::vector<Dense> pow_x(n + 1), pow_y(n + 1);
    pow_x[0] = {F.one()};
    pow_y[0] = {F.one()};
    Dense lx = {a, b}, ly = {c, d};
    for (unsigned t = 1; t <= n; ++t) {
        pow_x[t] = dense_mul(pow_x[t - 1], lx, F);
        pow_y[t] = dense_mul(pow_y[t - 1], ly, F);
    }
    Dense out(n + 1, Scalar{0});
    for (unsigned i = 0; i <= n; ++i) {
        Scalar ci = f.coeffs[i];
        if (ci.v == 0) continue;
        ci = F.frobenius(ci, m.frob);
        Dense term = dense_mul(pow_x[n - i], pow_y[i], F);
        for (unsigned j = 0; j <= n; ++j)
            if (term[j].v != 0) out[j] = F.add(out[j], F.mul(ci, term[j]));
    }
    std::size_t first = 0;
    while (first <= n && out[first].v == 0) ++first;
    if (first > n) throw Error("act: form collapsed (singular substitution?)");
    Scalar inv = F.inv(out[first]);
    for (auto& x : out) x = F.mul(x, inv);
    FormIdeal r;
    r.coeffs = std::move(out);
    return r;
}

std::vector<SemiLin2> group_generators(const FieldSpec& F, GroupKind kind) {
    std::vector<SemiLin2> gens;
    Scalar g = F.generator();
    {
        Mat diag = Mat::identity(2);
        diag.at(0, 0) = g;
        gens.push_back(SemiLin2{diag, 0});
    }
    {
        Mat trans = Mat::identity(2);
        trans.at(0, 1) = F.one();
        gens.push_back(SemiLin2{trans, 0});
    }
    {
        Mat weyl(2, 2);
        weyl.at(0, 1) = F.one();
        weyl.at(1, 0) = F.one();
        gens.push_back(SemiLin2{weyl, 0});
    }
    if (kind == GroupKind::GammaL && F.k() > 1)
        gens.push_back(SemiLin2{Mat::identity(2), 1});
    return gens;
}

std::vector<FormIdeal> orbit_of(const FormIdeal& f, GroupKind kind,
                                const FieldSpec& F) {
    auto gens = group_generators(F, kind);
    std::set<FormIdeal> seen{f};
    std::vector<FormIdeal> frontier{f};
    while (!frontier.empty()) {
        std::vector<FormIdeal> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                FormIdeal y = act(x, g, F);
                if (seen.insert(y).second) {
                    if (seen.size() > max_enum())
                        throw BoundExceeded("orbit_of: orbit over cap");
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::vector<FormIdeal> enumerate_form_family(const FieldSpec& F, unsigned n,
                                             FormFamily family) {
    if (n < 1) throw InvalidInput("enumerate_form_family: n >= 1");
    std::vector<FormIdeal> out;
    switch (family) {
        case FormFamily::Irreducible: {
            for (const auto& f : enumerate_monic_irreducibles(F, n))
                out.push_back(FormIdeal::from_poly(f, F));
            if (n == 1) {
                // the ideal (Y): the one linear form missed by monic univariates
                FormIdeal y;
                y.coeffs = {Scalar{0}, F.one()};
                out.push_back(y);
            }
            break;
        }
        case FormFamily::PrimaryNoLinearBase: {
            for (unsigned d = 2; d <= n; ++d) {
                if (n % d != 0) continue;
                unsigned c = n / d;
                for (const auto& a : enumerate_monic_irreducibles(F, d))
                    out.push_back(FormIdeal::from_poly(poly_pow(a, c, F), F));
            }
            break;
        }
        case FormFamily::All: {
            std::uint64_t count = 1, q = F.q();
            for (unsigned i = 0; i <= n; ++i) {
                count *= q;
                if (count > max_enum() * q)
                    throw BoundExceeded("enumerate_form_family: family over cap");
            }
            // dense vectors with first nonzero coefficient = 1
            for (unsigned lead = 0; lead <= n; ++lead) {
                std::uint64_t free_count = 1;
                for (unsigned i = lead + 1; i <= n; ++i) free_count *= q;
                for (std::uint64_t idx = 0; idx < free_count; ++idx) {
                    FormIdeal f;
                    f.coeffs.assign(n + 1, Scalar{0});
                    f.coeffs[lead] = F.one();
                    std::uint64_t v = idx;
                    for (unsigned i = lead + 1; i <= n; ++i) {
                        f.coeffs[i] = F.element(v % q);
                        v /= q;
                    }
                    out.push_back(std::move(f));
                }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_orbits(const FieldSpec& F, unsigned n, FormFamily family) {
    auto fam = enumerate_form_family(F, n, family);
    if (fam.size() > max_enum()) throw BoundExceeded("count_orbits: family over cap");
    std::set<FormIdeal> visited;
    std::uint64_t orbits = 0;
    for (const auto& f : fam) {
        if (visited.count(f)) continue;
        ++orbits;
        for (auto& x : orbit_of(f, GroupKind::GammaL, F)) visited.insert(std::move(x));
    }
    return orbits;
}

std::vector<Mat> stabilizer_gl(const FormIdeal& f, const FieldSpec& F) {
    std::uint64_t q = F.q();
    if (q * q * q * q > max_enum() * 16)
        throw BoundExceeded("stabilizer_gl: q^4 over cap");
    std::vector<Mat> out;
    for (std::uint64_t e0 = 0; e0 < q; ++e0)
        for (std::uint64_t e1 = 0; e1 < q; ++e1)
            for (std::uint64_t e2 = 0; e2 < q; ++e2)
                for (std::uint64_t e3 = 0; e3 < q; ++e3) {
                    Mat m(2, 2);
                    m.at(0, 0) = Scalar{e0};
                    m.at(0, 1) = Scalar{e1};
                    m.at(1, 0) = Scalar{e2};
                    m.at(1, 1) = Scalar{e3};
                    Scalar det = F.sub(F.mul(m.at(0, 0), m.at(1, 1)),
                                       F.mul(m.at(0, 1), m.at(1, 0)));
                    if (det.v == 0) continue;
                    if (act(f, SemiLin2{m, 0}, F) == f) out.push_back(std::move(m));
                }
    return out;
}

Mat PglElem::to_mat() const {
    Mat m(2, 2);
    m.at(0, 0) = Scalar{e[0]};
    m.at(0, 1) = Scalar{e[1]};
    m.at(1, 0) = Scalar{e[2]};
    m.at(1, 1) = Scalar{e[3]};
    return m;
}

PglElem pgl_canon(const Mat& m, const FieldSpec& F) {
    std::array<Scalar, 4> v{m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
    std::size_t first = 0;
    while (first < 4 && v[first].v == 0) ++first;
    if (first == 4) throw InvalidInput("pgl_canon: zero matrix");
    Scalar inv = F.inv(v[first]);
    PglElem out;
    for (std::size_t i = 0; i < 4; ++i) out.e[i] = F.mul(v[i], inv).v;
    return out;
}

PglElem pgl_mul(const PglElem& a, const PglElem& b, const FieldSpec& F) {
    return pgl_canon(mat_mul(a.to_mat(), b.to_mat(), F), F);
}

PglElem pgl_inv(const PglElem& a, const FieldSpec& F) {
    Mat m = a.to_mat();
    Mat adj(2, 2);  // adjugate; scalar factor is irrelevant in PGL
    adj.at(0, 0) = m.at(1, 1);
    adj.at(0, 1) = F.neg(m.at(0, 1));
    adj.at(1, 0) = F.neg(m.at(1, 0));
    adj.at(1, 1) = m.at(0, 0);
    return pgl_canon(adj, F);
}

PglElem pgl_identity() { return PglElem{{1, 0, 0, 1}}; }

namespace {
using PglKey = std::tuple<std::uint64_t, unsigned, std::vector<std::uint64_t>>;
std::map<PglKey, std::vector<PglElem>> g_pgl_cache;
std::mutex g_pgl_mutex;
}  // namespace

const std::vector<PglElem>& pgl_elements(const FieldSpec& F) {
    PglKey key{F.p(), F.k(), F.modulus()};
    std::lock_guard<std::mutex> lock(g_pgl_mutex);
    auto it = g_pgl_cache.find(key);
    if (it != g_pgl_cache.end()) return it->second;
    std::uint64_t q = F.q();
    if (q * q * q > max_enum()) throw BoundExceeded("pgl_elements: q^3 over cap");
    std::vector<PglElem> out;
    for (std::uint64_t e0 = 0; e0 < q; ++e0)
        for (std::uint64_t e1 = 0; e1 < q; ++e1)
            for (std::uint64_t e2 = 0; e2 < q; ++e2)
                for (std::uint64_t e3 = 0; e3 < q; ++e3) {
                    PglElem g{{e0, e1, e2, e3}};
                    // canonical: first nonzero entry is 1
                    std::size_t first = 0;
                    while (first < 4 && g.e[first] == 0) ++first;
                    if (first == 4 || g.e[first] != 1) continue;
                    Scalar det = F.sub(F.mul(Scalar{e0}, Scalar{e3}),
                                       F.mul(Scalar{e1}, Scalar{e2}));
                    if (det.v == 0) continue;
                    out.push_back(g);
                }
    std::sort(out.begin(), out.end());
    return g_pgl_cache.emplace(std::move(key), std::move(out)).first->second;
}

PglSubgroup PglSubgroup::from_elements(std::vector<PglElem> e, const FieldSpec& F) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    PglSubgroup s{std::move(e)};
    for (const auto& a : s.elems) {
        if (!s.contains(pgl_inv(a, F)))
            throw InvalidInput("PglSubgroup: not inverse-closed");
        for (const auto& b : s.elems)
            if (!s.contains(pgl_mul(a, b, F)))
                throw InvalidInput("PglSubgroup: not product-closed");
    }
    return s;
}

bool PglSubgroup::contains(const PglElem& g) const {
    return std::binary_search(elems.begin(), elems.end(), g);
}

PglSubgroup stabilizer_pgl(const FormIdeal& f, const FieldSpec& F) {
    std::vector<PglElem> elems;
    for (const auto& g : pgl_elements(F))
        if (act(f, SemiLin2{g.to_mat(), 0}, F) == f) elems.push_back(g);
    return PglSubgroup::from_elements(std::move(elems), F);
}

PglSubgroup conjugate_subgroup(const PglSubgroup& s, const PglElem& g,
                               const FieldSpec& F) {
    PglElem ginv = pgl_inv(g, F);
    std::vector<PglElem> elems;
    elems.reserve(s.elems.size());
    for (const auto& x : s.elems)
        elems.push_back(pgl_mul(pgl_mul(ginv, x, F), g, F));
    std::sort(elems.begin(), elems.end());
    return PglSubgroup{std::move(elems)};
}

namespace {

std::vector<PglSubgroup> maximal_dihedral_family(const FieldSpec& F) {
    std::vector<PglSubgroup> delta;
    for (const auto& quad : enumerate_monic_irreducibles(F, 2))
        delta.push_back(stabilizer_pgl(FormIdeal::from_poly(quad, F), F));
    std::sort(delta.begin(), delta.end());
    delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
    return delta;
}

}  // namespace

DihedralCensus dihedral_census(std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw InvalidInput("dihedral_census: p must be an odd prime");
    FieldSpec F = FieldSpec::prime(p);
    auto delta = maximal_dihedral_family(F);
    DihedralCensus out;
    out.delta_size = delta.size();
    const PglSubgroup& d = delta.front();
    std::set<PglSubgroup> unvisited(delta.begin() + 1, delta.end());
    while (!unvisited.empty()) {
        ++out.orbit_count;
        std::vector<PglSubgroup> frontier{*unvisited.begin()};
        unvisited.erase(unvisited.begin());
        while (!frontier.empty()) {
            std::vector<PglSubgroup> next;
            for (const auto& s : frontier)
                for (const auto& g : d.elems) {
                    PglSubgroup t = conjugate_subgroup(s, g, F);
                    auto it = unvisited.find(t);
                    if (it != unvisited.end()) {
                        unvisited.erase(it);
                        next.push_back(std::move(t));
                    }
                }
            frontier = std::move(next);
        }
    }
    return out;
}

bool sylow3_bijection_check(std::uint64_t p) {
    if (!is_prime_u64(p)) throw InvalidInput("sylow3_bijection_check: p not prime");
    if (p % 3 != 2) throw WrongResidue("sylow3_bijection_check: need p = 2 mod 3");
    FieldSpec F = FieldSpec::prime(p);
    std::uint64_t order = p * p * p - p;
    std::uint64_t s3 = 1;
    while (order % 3 == 0) {
        s3 *= 3;
        order /= 3;
    }
    // Sylow 3-subgroups (cyclic here: the 3-part divides p+1)
    std::set<std::vector<PglElem>> sylows;
    for (const auto& g : pgl_elements(F)) {
        // order of g
        std::uint64_t n = 1;
        PglElem x = g;
        PglElem id = pgl_identity();
        while (x != id) {
            x = pgl_mul(x, g, F);
            ++n;
        }
        if (n != s3) continue;
        std::vector<PglElem> cyc;
        x = id;
        for (std::uint64_t i = 0; i < s3; ++i) {
            cyc.push_back(x);
            x = pgl_mul(x, g, F);
        }
        std::sort(cyc.begin(), cyc.end());
        sylows.insert(std::move(cyc));
    }
    auto delta = maximal_dihedral_family(F);
    if (sylows.size() != delta.size()) return false;
    std::set<std::vector<PglElem>> covered;
    for (const auto& d : delta) {
        std::size_t inside = 0;
        const std::vector<PglElem>* found = nullptr;
        for (const auto& s : sylows) {
            bool sub = std::all_of(s.begin(), s.end(),
                                   [&](const PglElem& x) { return d.contains(x); });
            if (sub) {
                ++inside;
                found = &s;
            }
        }
        if (inside != 1) return false;
        if (!covered.insert(*found).second) return false;  // not injective
    }
    return covered.size() == sylows.size();
}

namespace {

std::vector<FormIdeal> sorted_multiset(std::vector<FormIdeal> a) {
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<FormIdeal> act_multiset(const std::vector<FormIdeal>& a,
                                    const SemiLin2& g, const FieldSpec& F) {
    std::vector<FormIdeal> out;
    out.reserve(a.size());
    for (const auto& f : a) out.push_back(act(f, g, F));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

MultisetEquivalence multiset_equivalent(std::vector<FormIdeal> a,
                                        std::vector<FormIdeal> b,
                                        GroupKind kind, const FieldSpec& F) {
    MultisetEquivalence out;
    if (a.size() != b.size()) return out;
    a = sorted_multiset(std::move(a));
    b = sorted_multiset(std::move(b));
    auto gens = group_generators(F, kind);
    std::map<std::vector<FormIdeal>, SemiLin2> seen;
    seen.emplace(a, SemiLin2::identity());
    std::vector<std::vector<FormIdeal>> frontier{a};
    while (!frontier.empty()) {
        std::vector<std::vector<FormIdeal>> next;
        for (const auto& state : frontier) {
            const SemiLin2& w = seen.at(state);
            for (const auto& g : gens) {
                auto y = act_multiset(state, g, F);
                if (seen.count(y)) continue;
                SemiLin2 wy = semilin_compose(w, g, F);
                seen.emplace(y, wy);
                if (seen.size() > max_enum())
                    throw BoundExceeded("multiset_equivalent: orbit over cap");
                next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    auto it = seen.find(b);
    if (it == seen.end()) return out;
    // verify the witness by re-application
    if (act_multiset(a, it->second, F) != b)
        throw Error("multiset_equivalent: witness failed verification");
    out.equivalent = true;
    out.witness = it->second;
    return out;
}

std::vector<FormIdeal> multiset_canonical(std::vector<FormIdeal> a,
                                          GroupKind kind, const FieldSpec& F) {
    a = sorted_multiset(std::move(a));
    auto gens = group_generators(F, kind);
    std::set<std::vector<FormIdeal>> seen{a};
    std::vector<std::vector<FormIdeal>> frontier{a};
    while (!frontier.empty()) {
        std::vector<std::vector<FormIdeal>> next;
        for (const auto& state : frontier)
            for (const auto& g : gens) {
                auto y = act_multiset(state, g, F);
                if (seen.insert(y).second) {
                    if (seen.size() > max_enum())
                        throw BoundExceeded("multiset_canonical: orbit over cap");
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    return *seen.begin();
}

}  // namespace ses
