#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ses/galois.hpp"

namespace ses {

/// Univariate polynomial, coefficients low-to-high, trailing zeros trimmed.
struct UniPoly {
    std::vector<Scalar> coeffs;

    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back().v == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Scalar coeff(std::size_t i) const {
        return i < coeffs.size() ? coeffs[i] : Scalar{0};
    }
    Scalar lead() const { return coeffs.empty() ? Scalar{0} : coeffs.back(); }

    auto operator<=>(const UniPoly&) const = default;
};

UniPoly poly_add(const UniPoly& a, const UniPoly& b, const FieldSpec& F);
UniPoly poly_sub(const UniPoly& a, const UniPoly& b, const FieldSpec& F);
UniPoly poly_mul(const UniPoly& a, const UniPoly& b, const FieldSpec& F);
UniPoly poly_scale(const UniPoly& a, Scalar s, const FieldSpec& F);
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b,
                                        const FieldSpec& F);
UniPoly poly_gcd(UniPoly a, UniPoly b, const FieldSpec& F);
UniPoly poly_pow(const UniPoly& a, unsigned e, const FieldSpec& F);
UniPoly poly_mod(const UniPoly& a, const UniPoly& m, const FieldSpec& F);
UniPoly poly_powmod(const UniPoly& a, std::uint64_t e, const UniPoly& m,
                    const FieldSpec& F);
UniPoly monic(const UniPoly& a, const FieldSpec& F);
Scalar poly_eval(const UniPoly& a, Scalar x, const FieldSpec& F);
UniPoly poly_x();  // the polynomial x

/// Monic irreducibility over the coefficient field (Rabin's criterion).
bool is_irreducible(const UniPoly& f, const FieldSpec& F);

/// All monic irreducibles of degree n, ordered by ascending coefficient
/// encoding (c_0 least significant).  Cached per (field, n).
const std::vector<UniPoly>& enumerate_monic_irreducibles(const FieldSpec& F,
                                                         unsigned n);

/// Necklace count (1/n) sum_{d|n} mu(d) q^{n/d}.
std::uint64_t count_monic_irreducibles(std::uint64_t q, unsigned n);

/// Factorization into monic irreducibles with multiplicities, sorted.
std::vector<std::pair<UniPoly, unsigned>> factor(const UniPoly& f,
                                                 const FieldSpec& F);

struct PrimaryDecomposition {
    UniPoly base;       // monic irreducible
    unsigned exponent;  // >= 1
    bool operator==(const PrimaryDecomposition&) const = default;
};

std::optional<PrimaryDecomposition> primary_part(const UniPoly& f,
                                                 const FieldSpec& F);

// --- Homogeneous multivariate forms -------------------------------------

using ExpTuple = std::vector<unsigned>;
// Lex-descending term order: begin() is the leading term.
using TermMap = std::map<ExpTuple, Scalar, std::greater<ExpTuple>>;

/// Homogeneous form: every stored exponent tuple sums to `degree`, no zero
/// coefficients stored.  Zero form has empty terms.
struct HomForm {
    unsigned nvars = 0;
    unsigned degree = 0;
    TermMap terms;

    HomForm() = default;
    HomForm(unsigned nv, unsigned deg) : nvars(nv), degree(deg) {}
    HomForm(unsigned nv, unsigned deg, TermMap t);

    bool is_zero() const { return terms.empty(); }
    Scalar coeff(const ExpTuple& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Scalar{0} : it->second;
    }
    void set(const ExpTuple& e, Scalar c) {
        if (c.v == 0)
            terms.erase(e);
        else
            terms[e] = c;
    }
    // zero forms are equal regardless of the degree tag they carry
    bool operator==(const HomForm& o) const {
        if (is_zero() && o.is_zero()) return true;
        return nvars == o.nvars && degree == o.degree && terms == o.terms;
    }
};

HomForm form_add(const HomForm& a, const HomForm& b, const FieldSpec& F);
HomForm form_sub(const HomForm& a, const HomForm& b, const FieldSpec& F);
HomForm form_mul(const HomForm& a, const HomForm& b, const FieldSpec& F);
HomForm form_scale(const HomForm& a, Scalar s, const FieldSpec& F);
Scalar form_eval(const HomForm& a, const std::vector<Scalar>& x,
                 const FieldSpec& F);
/// Substitution x_i -> sum_j T(i,j) x_j for a square matrix T.
HomForm form_substitute(const HomForm& a, const Mat& t, const FieldSpec& F);
/// Entrywise Frobenius a -> a^(p^j) on the coefficients.
HomForm form_frobenius(const HomForm& a, unsigned j, const FieldSpec& F);
/// Scale so the lex-first (greatest) nonzero coefficient is 1.
HomForm form_normalize(const HomForm& a, const FieldSpec& F);

HomForm homogenize(const UniPoly& f, const FieldSpec& F);
/// Set variable `var_index` of a 2-variable form to 1.
UniPoly dehomogenize(const HomForm& f, unsigned var_index, const FieldSpec& F);

/// Exact polynomial square root of a homogeneous form of even degree;
/// returns the normalized root, nullopt when the form is not a perfect
/// square.  Zero maps to zero.
std::optional<HomForm> form_sqrt(const HomForm& f, const FieldSpec& F);

}  // namespace ses
