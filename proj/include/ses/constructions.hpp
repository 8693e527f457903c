#pragma once

#include "ses/pencils.hpp"

namespace ses {

/// Local algebra A = K[x]/(a(x)^c) on the monomial basis 1, x, ..., x^(cd-1),
/// held as multiplication structure matrices: mult[w][s][t] is the
/// basis-w coordinate of x^s * x^t.
struct LocalAlgebra {
    FieldSpec F;      // K
    UniPoly base;     // a, monic irreducible
    unsigned c = 1;
    UniPoly modpoly;  // a^c
    std::size_t dim = 0;
    std::vector<Mat> mult;  // dim matrices, each dim x dim
};

LocalAlgebra make_local_algebra(FieldSpec F, UniPoly a, unsigned c);

/// Element arithmetic on coordinate vectors.
std::vector<Scalar> algebra_mul(const LocalAlgebra& A,
                                const std::vector<Scalar>& u,
                                const std::vector<Scalar>& v);
/// Matrix of multiplication by u.
Mat algebra_mult_matrix(const LocalAlgebra& A, const std::vector<Scalar>& u);
/// Inverse of a unit; nullopt for non-units.
std::optional<std::vector<Scalar>> algebra_inv(const LocalAlgebra& A,
                                               const std::vector<Scalar>& u);

/// Subspace in reduced echelon form.
struct SubspaceBasis {
    std::size_t ambient = 0;
    std::vector<std::vector<Scalar>> basis;  // echelon rows
    std::size_t dim() const { return basis.size(); }
};

/// Echelonizes the rows; throws InvalidInput when they are dependent.
SubspaceBasis make_subspace(const FieldSpec& F, std::size_t ambient,
                            std::vector<std::vector<Scalar>> rows);

/// Commutator pencil of the Heisenberg group over A:
/// (u1,u2) o (v1,v2) = u1 v2 - u2 v1 in A.
AltPencil heisenberg_pencil(const LocalAlgebra& A);

/// Commutator pencil of H(A)/N(S): codomain projected to A/S along the
/// complement spanned by standard vectors at S's pivot-free coordinates.
AltPencil quotient_pencil(const LocalAlgebra& A, const SubspaceBasis& S);

/// A = S + (a^(c-1)), the semi-extraspecial criterion for the quotient.
bool check_complement_condition(const LocalAlgebra& A, const SubspaceBasis& S);

/// True when A is a cyclic K[h]-module for h = f^(-1) g with primary minimal
/// polynomial of non-linear base; f must be a unit.
bool irreducible_module_check(const LocalAlgebra& A,
                              const std::vector<Scalar>& f,
                              const std::vector<Scalar>& g);

/// The flat genus-2 pencil: double of the two m x (m+1) shift bimaps.
/// Its domain has odd dimension 2m+1, so the Pfaffian vanishes.
AltPencil hflat_pencil(FieldSpec F, std::size_t m);

/// The 2cd x 2cd pencil ([[0,I],[-I,0]], [[0,-C],[C^T,0]]) for C the
/// companion matrix of a^c; its Pfaffian is the homogenized a^c.
AltPencil companion_pencil(const UniPoly& a, unsigned c, const FieldSpec& F);

/// Heisenberg pencil of the dot product K^n x K^n -> K written over the
/// prime field; centroid is K, genus 1.
AltPencil genus1_pencil(const FieldSpec& K, std::size_t n);

}  // namespace ses
