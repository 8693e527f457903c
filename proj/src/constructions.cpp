#include "ses/constructions.hpp"

#include <algorithm>

namespace ses {

LocalAlgebra make_local_algebra(FieldSpec F, UniPoly a, unsigned c) {
    if (c < 1) throw InvalidInput("make_local_algebra: c >= 1");
    if (a.is_zero() || a.degree() < 1)
        throw ConstantPolynomial("make_local_algebra: constant base");
    if (a.lead().v != 1) throw InvalidInput("make_local_algebra: base not monic");
    if (!is_irreducible(a, F))
        throw NotIrreducible("make_local_algebra: base is reducible");
    LocalAlgebra A{F, a, c, poly_pow(a, c, F), 0, {}};
    A.dim = static_cast<std::size_t>(A.modpoly.degree());
    A.mult.assign(A.dim, Mat(A.dim, A.dim));
    // x^e mod a^c for e up to 2(dim-1)
    std::vector<UniPoly> xpow(2 * A.dim - 1);
    UniPoly cur(std::vector<Scalar>{F.one()});
    for (std::size_t e = 0; e < xpow.size(); ++e) {
        xpow[e] = poly_mod(cur, A.modpoly, F);
        cur = poly_mul(cur, poly_x(), F);
    }
    for (std::size_t s = 0; s < A.dim; ++s)
        for (std::size_t t = 0; t < A.dim; ++t)
            for (std::size_t w = 0; w < A.dim; ++w)
                A.mult[w].at(s, t) = xpow[s + t].coeff(w);
    return A;
}

std::vector<Scalar> algebra_mul(const LocalAlgebra& A,
                                const std::vector<Scalar>& u,
                                const std::vector<Scalar>& v) {
    if (u.size() != A.dim || v.size() != A.dim)
        throw DimensionMismatch("algebra_mul: wrong coordinate length");
    std::vector<Scalar> out(A.dim);
    for (std::size_t w = 0; w < A.dim; ++w) {
        Scalar s{0};
        for (std::size_t i = 0; i < A.dim; ++i) {
            if (u[i].v == 0) continue;
            for (std::size_t j = 0; j < A.dim; ++j)
                s = A.F.add(s, A.F.mul(A.F.mul(u[i], v[j]), A.mult[w].at(i, j)));
        }
        out[w] = s;
    }
    return out;
}

Mat algebra_mult_matrix(const LocalAlgebra& A, const std::vector<Scalar>& u) {
    // column j = coordinates of u * x^j
    Mat m(A.dim, A.dim);
    std::vector<Scalar> ej(A.dim);
    for (std::size_t j = 0; j < A.dim; ++j) {
        std::fill(ej.begin(), ej.end(), Scalar{0});
        ej[j] = A.F.one();
        auto col = algebra_mul(A, u, ej);
        for (std::size_t i = 0; i < A.dim; ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::optional<std::vector<Scalar>> algebra_inv(const LocalAlgebra& A,
                                               const std::vector<Scalar>& u) {
    auto minv = mat_inverse(algebra_mult_matrix(A, u), A.F);
    if (!minv) return std::nullopt;
    std::vector<Scalar> one(A.dim);
    one[0] = A.F.one();
    return mat_vec(*minv, one, A.F);
}

SubspaceBasis make_subspace(const FieldSpec& F, std::size_t ambient,
                            std::vector<std::vector<Scalar>> rows) {
    for (const auto& r : rows)
        if (r.size() != ambient)
            throw DimensionMismatch("make_subspace: wrong vector length");
    Mat m(rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = rows[i][j];
    auto pivots = rref(m, F);
    if (pivots.size() != rows.size())
        throw InvalidInput("make_subspace: dependent rows");
    SubspaceBasis S{ambient, {}};
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Scalar> r(ambient);
        for (std::size_t j = 0; j < ambient; ++j) r[j] = m.at(i, j);
        S.basis.push_back(std::move(r));
    }
    return S;
}

AltPencil heisenberg_pencil(const LocalAlgebra& A) {
    return heisenberg_double(A.F, A.mult);
}

AltPencil quotient_pencil(const LocalAlgebra& A, const SubspaceBasis& S) {
    if (S.ambient != A.dim)
        throw DimensionMismatch("quotient_pencil: subspace of wrong ambient");
    if (S.dim() == A.dim) throw NotProper("quotient_pencil: S must be proper");
    const FieldSpec& F = A.F;
    std::size_t s = S.dim(), cod = A.dim - s;
    // completed basis: S rows, then standard vectors at pivot-free coordinates
    std::vector<bool> is_piv(A.dim, false);
    for (const auto& r : S.basis) {
        std::size_t p = 0;
        while (r[p].v == 0) ++p;
        is_piv[p] = true;
    }
    Mat T(A.dim, A.dim);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) T.at(i, j) = S.basis[i][j];
    std::size_t row = s;
    for (std::size_t j = 0; j < A.dim; ++j)
        if (!is_piv[j]) T.at(row++, j) = F.one();
    auto Tinv = mat_inverse(T, F);
    if (!Tinv) throw Error("quotient_pencil: completion not invertible");
    // W-coordinates of h: last cod entries of h T^{-1}
    std::vector<Mat> q(cod, Mat(A.dim, A.dim));
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            std::vector<Scalar> prod(A.dim);
            for (std::size_t w = 0; w < A.dim; ++w) prod[w] = A.mult[w].at(i, j);
            auto y = vec_mat(prod, *Tinv, F);
            for (std::size_t w = 0; w < cod; ++w) q[w].at(i, j) = y[s + w];
        }
    return heisenberg_double(F, q);
}

bool check_complement_condition(const LocalAlgebra& A, const SubspaceBasis& S) {
    if (S.ambient != A.dim)
        throw DimensionMismatch("check_complement_condition: wrong ambient");
    const FieldSpec& F = A.F;
    std::size_t d = static_cast<std::size_t>(A.base.degree());
    // ideal (a^(c-1)): spanned by x^j a^(c-1) for j < d
    UniPoly gen = poly_pow(A.base, A.c - 1, F);
    Mat m(S.dim() + d, A.dim);
    for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < A.dim; ++j) m.at(i, j) = S.basis[i][j];
    UniPoly cur = gen;
    for (std::size_t i = 0; i < d; ++i) {
        UniPoly red = poly_mod(cur, A.modpoly, F);
        for (std::size_t j = 0; j < A.dim; ++j)
            m.at(S.dim() + i, j) = red.coeff(j);
        cur = poly_mul(cur, poly_x(), F);
    }
    return mat_rank(std::move(m), F) == A.dim;
}

bool irreducible_module_check(const LocalAlgebra& A,
                              const std::vector<Scalar>& f,
                              const std::vector<Scalar>& g) {
    auto finv = algebra_inv(A, f);
    if (!finv) throw InvalidInput("irreducible_module_check: f is not a unit");
    std::vector<Scalar> h = algebra_mul(A, *finv, g);
    // minimal polynomial of the element h: first dependence among its powers
    const FieldSpec& F = A.F;
    std::vector<std::vector<Scalar>> pows;
    std::vector<Scalar> cur(A.dim);
    cur[0] = F.one();
    for (std::size_t e = 0; e <= A.dim; ++e) {
        pows.push_back(cur);
        Mat m(pows.size(), A.dim);
        for (std::size_t i = 0; i < pows.size(); ++i)
            for (std::size_t j = 0; j < A.dim; ++j) m.at(i, j) = pows[i][j];
        if (mat_rank(std::move(m), F) < pows.size()) break;
        cur = algebra_mul(A, cur, h);
    }
    std::size_t deg = pows.size() - 1;  // degree of the minimal polynomial
    if (deg != A.dim) return false;     // not a cyclic K[h]-module
    // solve h^deg = sum_i c_i h^i to recover the minimal polynomial
    Mat m(A.dim, deg);
    for (std::size_t i = 0; i < deg; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) m.at(j, i) = pows[i][j];
    auto sol = solve_linear(m, pows[deg], F);
    if (!sol.consistent) throw Error("irreducible_module_check: bad dependence");
    std::vector<Scalar> coeffs(deg + 1);
    for (std::size_t i = 0; i < deg; ++i) coeffs[i] = F.neg(sol.particular[i]);
    coeffs[deg] = F.one();
    auto pd = primary_part(UniPoly(std::move(coeffs)), F);
    return pd && pd->base.degree() >= 2;
}

AltPencil hflat_pencil(FieldSpec F, std::size_t m) {
    if (m < 1) throw InvalidInput("hflat_pencil: m >= 1");
    Mat m1(m, m + 1), m2(m, m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        m1.at(i, i) = F.one();
        m2.at(i, i + 1) = F.one();
    }
    return heisenberg_double(std::move(F), {m1, m2});
}

AltPencil companion_pencil(const UniPoly& a, unsigned c, const FieldSpec& F) {
    if (a.is_zero() || a.degree() < 1)
        throw ConstantPolynomial("companion_pencil: constant base");
    if (a.lead().v != 1) throw InvalidInput("companion_pencil: base not monic");
    if (!is_irreducible(a, F))
        throw NotIrreducible("companion_pencil: base is reducible");
    if (c < 1) throw InvalidInput("companion_pencil: c >= 1");
    UniPoly ac = poly_pow(a, c, F);
    std::size_t n = static_cast<std::size_t>(ac.degree());
    Mat C(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) C.at(i + 1, i) = F.one();
    for (std::size_t i = 0; i < n; ++i) C.at(i, n - 1) = F.neg(ac.coeff(i));
    Mat mx(2 * n, 2 * n), my(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        mx.at(i, n + i) = F.one();
        mx.at(n + i, i) = F.neg(F.one());
        for (std::size_t j = 0; j < n; ++j) {
            my.at(i, n + j) = F.neg(C.at(i, j));
            my.at(n + j, i) = C.at(i, j);
        }
    }
    return make_pencil(F, {mx, my});
}

AltPencil genus1_pencil(const FieldSpec& K, std::size_t n) {
    if (n < 1) throw InvalidInput("genus1_pencil: n >= 1");
    FieldSpec Fp = FieldSpec::prime(K.p());
    std::size_t k = K.k(), nk = n * k;
    // dot product K^n x K^n -> K in prime-field coordinates
    std::vector<Mat> mats(k, Mat(nk, nk));
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t) {
            std::uint64_t ps = 1, pt = 1;
            for (std::size_t i = 0; i < s; ++i) ps *= K.p();
            for (std::size_t i = 0; i < t; ++i) pt *= K.p();
            auto res = K.residues(K.mul(Scalar{ps}, Scalar{pt}));
            for (std::size_t w = 0; w < k; ++w) {
                if (res[w] == 0) continue;
                for (std::size_t i = 0; i < n; ++i)
                    mats[w].at(i * k + s, i * k + t) = Scalar{res[w]};
            }
        }
    return heisenberg_double(std::move(Fp), mats);
}

}  // namespace ses
