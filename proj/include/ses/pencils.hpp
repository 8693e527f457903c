#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ses/polyring.hpp"

namespace ses {

/// Alternating bimap pencil V x V -> W given by structure matrices: the w-th
/// coordinate of u o v is u^T M_w v.  Every M_w is skew-symmetric with zero
/// diagonal (the diagonal condition matters in characteristic 2).
struct AltPencil {
    FieldSpec F;
    std::size_t dimV = 0;
    std::size_t dimW = 0;
    std::vector<Mat> mats;  // dimW matrices, each dimV x dimV

    bool operator==(const AltPencil&) const = default;
};

/// Validates shape and the alternating property.
AltPencil make_pencil(FieldSpec F, std::vector<Mat> mats);

/// Radical: {u : u o V = 0}, returned as basis rows.
std::vector<std::vector<Scalar>> radical(const AltPencil& P);

/// True when the bimap values span W, i.e. the structure matrices are
/// linearly independent.
bool is_full(const AltPencil& P);

/// det(sum_w x_w M_w) as a form of degree dimV in dimW variables.
HomForm discriminant(const AltPencil& P);

/// Combinatorial Pfaffian of sum_w x_w M_w, unnormalized; its square is the
/// discriminant in every characteristic.  Zero when dimV is odd.
HomForm pfaffian_raw(const AltPencil& P);

/// Normalized Pfaffian (lex-leading coefficient 1); zero stays zero.
HomForm pfaffian(const AltPencil& P);

/// Basis of the centroid: pairs (X, Z) with X^T M_w = M_w X and
/// M_w X = sum_t Z[w][t] M_t for all w.
struct CentroidBasis {
    std::vector<Mat> xs;  // dimV x dimV
    std::vector<Mat> zs;  // dimW x dimW
    std::size_t dim() const { return xs.size(); }
};

CentroidBasis centroid(const AltPencil& P);

/// True when the centroid is a (commutative) field; checked exhaustively
/// over all q^dim elements, so throws BoundExceeded past the cap.
bool centroid_is_field(const AltPencil& P, const CentroidBasis& C);

/// dim_K(W) for K the centroid; requires the centroid to be a field whose
/// degree divides dimW, else throws CentroidNotField.
std::size_t genus(const AltPencil& P);

/// Alternating double [[0, M],[-M^T, 0]] of arbitrary rectangular matrices.
AltPencil heisenberg_double(FieldSpec F, const std::vector<Mat>& mats);

/// Block-diagonal sum; the pencils must share field and dimW.
AltPencil direct_sum(const AltPencil& A, const AltPencil& B);

/// Surjectivity of v -> u o v for every nonzero u, checked on projective
/// representatives.
bool is_ses_direct(const AltPencil& P);

/// Pfaffian criterion: Pf != 0 and Pf vanishes nowhere on P^(dimW-1)(F_q).
bool is_ses_pfaffian(const AltPencil& P);

/// Number of totally isotropic k-dimensional subspaces of V.
std::uint64_t count_totally_isotropic(const AltPencil& P, std::size_t k);

/// Calls fn on one representative (first nonzero coordinate 1) of every
/// point of P^(n-1)(F_q); throws BoundExceeded past the cap.
void for_each_projective(const FieldSpec& F, std::size_t n,
                         const std::function<void(const std::vector<Scalar>&)>& fn);

}  // namespace ses
