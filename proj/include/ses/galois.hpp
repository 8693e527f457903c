#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "ses/errors.hpp"

namespace ses {

/// Element of a finite field, stored as the base-p digit encoding of its
/// canonical residue vector (low-to-high).  Only meaningful together with
/// the FieldSpec it came from.
struct Scalar {
    std::uint64_t v = 0;
    auto operator<=>(const Scalar&) const = default;
};

/// F_{p^k} with exact arithmetic.  k = 1 needs no modulus; extension fields
/// are built from an explicitly supplied monic irreducible modulus over F_p
/// (low-to-high coefficients, length k+1).  A small default table covers
/// F_4, F_9 and F_25 for the worked examples.
class FieldSpec {
public:
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec ext(std::uint64_t p, std::vector<std::uint64_t> modulus);
    // k = 1 for any prime; k = 2 only for p in {2, 3, 5} (the default table).
    static FieldSpec make(std::uint64_t p, unsigned k);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    Scalar zero() const { return {0}; }
    Scalar one() const { return {1}; }
    bool is_zero(Scalar a) const { return a.v == 0; }

    Scalar from_int(std::int64_t n) const;       // constant embedding of Z
    Scalar from_residues(const std::vector<std::uint64_t>& c) const;
    std::vector<std::uint64_t> residues(Scalar a) const;
    Scalar element(std::uint64_t index) const;   // index in [0, q)

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar inv(Scalar a) const;  // throws ZeroInverse on 0
    Scalar pow(Scalar a, std::uint64_t e) const;
    Scalar frobenius(Scalar a, unsigned j) const;  // a^(p^j)
    std::optional<Scalar> sqrt(Scalar a) const;
    Scalar generator() const;  // a multiplicative generator of F_q^x

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

private:
    FieldSpec(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

    std::uint64_t p_ = 0;
    unsigned k_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;  // empty when k = 1
};

bool is_prime_u64(std::uint64_t n);

/// Dense row-major matrix of Scalars.  Field is passed to the operations,
/// not stored.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> entries;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Scalar& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    Scalar at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static Mat identity(std::size_t n);
    bool operator==(const Mat&) const = default;
};

Mat mat_add(const Mat& a, const Mat& b, const FieldSpec& F);
Mat mat_mul(const Mat& a, const Mat& b, const FieldSpec& F);
Mat mat_scale(const Mat& a, Scalar s, const FieldSpec& F);
Mat mat_neg(const Mat& a, const FieldSpec& F);
Mat transpose(const Mat& a);
bool is_zero_mat(const Mat& a);

std::size_t mat_rank(Mat m, const FieldSpec& F);
std::optional<Mat> mat_inverse(const Mat& m, const FieldSpec& F);

/// Row-reduce in place; returns pivot column indices.
std::vector<std::size_t> rref(Mat& m, const FieldSpec& F);

/// Basis of the right kernel {x : M x = 0}, as rows of a matrix.
std::vector<std::vector<Scalar>> kernel_basis(const Mat& m, const FieldSpec& F);

struct LinearSolution {
    bool consistent = false;
    std::vector<Scalar> particular;                // empty when inconsistent
    std::vector<std::vector<Scalar>> kernel;       // basis of homogeneous part
};

LinearSolution solve_linear(const Mat& a, const std::vector<Scalar>& b,
                            const FieldSpec& F);

std::vector<Scalar> mat_vec(const Mat& a, const std::vector<Scalar>& x,
                            const FieldSpec& F);
std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const Mat& a,
                            const FieldSpec& F);

}  // namespace ses
