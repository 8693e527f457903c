#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ses/polyring.hpp"

namespace ses {

/// Element of GammaL(2,q): invertible 2x2 matrix plus Frobenius exponent.
struct SemiLin2 {
    Mat mat;           // 2x2, det != 0
    unsigned frob = 0; // in [0, k)

    static SemiLin2 identity();
    bool operator==(const SemiLin2&) const = default;
};

SemiLin2 make_semilin(Mat m, unsigned frob, const FieldSpec& F);  // checks det
/// Composition law matching the right action: act(act(f,M),N) = act(f, compose(M,N)).
SemiLin2 semilin_compose(const SemiLin2& m, const SemiLin2& n, const FieldSpec& F);

/// Principal ideal of a nonzero binary form, identified by the normalized
/// dense coefficient vector: coeffs[i] multiplies X^(n-i) Y^i, first nonzero
/// coefficient is 1.
struct FormIdeal {
    std::vector<Scalar> coeffs;

    static FormIdeal from_form(const HomForm& f, const FieldSpec& F);
    static FormIdeal from_poly(const UniPoly& f, const FieldSpec& F);
    HomForm to_form() const;
    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }

    auto operator<=>(const FormIdeal&) const = default;
};

/// Substitution action f^M(x,y) = f^sigma(ax+by, cx+dy), renormalized.
FormIdeal act(const FormIdeal& f, const SemiLin2& m, const FieldSpec& F);

enum class GroupKind { GL, GammaL };

/// Generator set: diagonal, transvection, Weyl element (+ Frobenius for GammaL).
std::vector<SemiLin2> group_generators(const FieldSpec& F, GroupKind kind);

/// Full orbit under generator-closure BFS, sorted.
std::vector<FormIdeal> orbit_of(const FormIdeal& f, GroupKind kind,
                                const FieldSpec& F);

enum class FormFamily { Irreducible, PrimaryNoLinearBase, All };

std::vector<FormIdeal> enumerate_form_family(const FieldSpec& F, unsigned n,
                                             FormFamily family);

/// Number of GammaL(2,q)-orbits on the selected family of degree-n ideals.
std::uint64_t count_orbits(const FieldSpec& F, unsigned n, FormFamily family);

/// Elements of Stab_{GL(2,q)}((f)); order is the vector size.
std::vector<Mat> stabilizer_gl(const FormIdeal& f, const FieldSpec& F);

/// PGL(2,q) element: 2x2 matrix scaled so the first nonzero entry
/// (row-major scan) is 1, packed for ordering.
struct PglElem {
    std::array<std::uint64_t, 4> e{};
    auto operator<=>(const PglElem&) const = default;

    Mat to_mat() const;
};

PglElem pgl_canon(const Mat& m, const FieldSpec& F);
PglElem pgl_mul(const PglElem& a, const PglElem& b, const FieldSpec& F);
PglElem pgl_inv(const PglElem& a, const FieldSpec& F);
PglElem pgl_identity();

/// All q^3 - q elements of PGL(2,q).
const std::vector<PglElem>& pgl_elements(const FieldSpec& F);

/// Explicit subgroup: sorted element list, closure verified at construction.
struct PglSubgroup {
    std::vector<PglElem> elems;

    static PglSubgroup from_elements(std::vector<PglElem> e, const FieldSpec& F);
    std::size_t order() const { return elems.size(); }
    bool contains(const PglElem& g) const;
    auto operator<=>(const PglSubgroup&) const = default;
};

PglSubgroup stabilizer_pgl(const FormIdeal& f, const FieldSpec& F);
PglSubgroup conjugate_subgroup(const PglSubgroup& s, const PglElem& g,
                               const FieldSpec& F);

struct DihedralCensus {
    std::uint64_t delta_size = 0;   // |Delta| = (p^2-p)/2
    std::uint64_t orbit_count = 0;  // D-orbits on Delta - D
};

/// Builds Delta via quadratic-ideal stabilizers and counts the conjugation
/// orbits of a fixed member on the rest.
DihedralCensus dihedral_census(std::uint64_t p);

/// True iff Sylow 3-subgroups of PGL(2,p) biject with the maximal dihedral
/// subgroups of order 2(p+1) by inclusion.  Requires p = 2 mod 3.
bool sylow3_bijection_check(std::uint64_t p);

struct MultisetEquivalence {
    bool equivalent = false;
    std::optional<SemiLin2> witness;  // maps A onto B when equivalent
};

MultisetEquivalence multiset_equivalent(std::vector<FormIdeal> a,
                                        std::vector<FormIdeal> b,
                                        GroupKind kind, const FieldSpec& F);

/// Lexicographically least element of the multiset orbit (census canonical form).
std::vector<FormIdeal> multiset_canonical(std::vector<FormIdeal> a,
                                          GroupKind kind, const FieldSpec& F);

}  // namespace ses
