#include "ses/pencils.hpp"

#include <algorithm>
#include <map>

#include "ses/config.hpp"

namespace ses {

namespace {

// Projective scan with early exit; fn returns false to stop.  Returns false
// when stopped early.
bool scan_projective(const FieldSpec& F, std::size_t n,
                     const std::function<bool(const std::vector<Scalar>&)>& fn) {
    std::uint64_t q = F.q();
    std::uint64_t points = 0, pw = 1;
    for (std::size_t i = 0; i < n; ++i) {
        points += pw;
        pw *= q;
    }
    if (points > max_enum())
        throw BoundExceeded("projective scan: point count over cap");
    std::vector<Scalar> u(n, Scalar{0});
    // lead = index of the first nonzero coordinate, fixed to 1
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::fill(u.begin(), u.end(), Scalar{0});
        u[lead] = F.one();
        std::size_t free_count = n - lead - 1;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free_count; ++i) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = lead + 1; i < n; ++i) {
                u[i] = F.element(v % q);
                v /= q;
            }
            if (!fn(u)) return false;
        }
    }
    return true;
}

HomForm entry_form(const AltPencil& P, std::size_t i, std::size_t j) {
    HomForm f(static_cast<unsigned>(P.dimW), 1);
    for (std::size_t w = 0; w < P.dimW; ++w) {
        Scalar c = P.mats[w].at(i, j);
        if (c.v == 0) continue;
        ExpTuple e(P.dimW, 0);
        e[w] = 1;
        f.set(e, c);
    }
    return f;
}

}  // namespace

void for_each_projective(const FieldSpec& F, std::size_t n,
                         const std::function<void(const std::vector<Scalar>&)>& fn) {
    scan_projective(F, n, [&](const std::vector<Scalar>& u) {
        fn(u);
        return true;
    });
}

AltPencil make_pencil(FieldSpec F, std::vector<Mat> mats) {
    if (mats.empty()) throw InvalidInput("make_pencil: no structure matrices");
    std::size_t n = mats.front().rows;
    for (const auto& m : mats) {
        if (m.rows != n || m.cols != n)
            throw DimensionMismatch("make_pencil: matrices must be square, same size");
        for (std::size_t i = 0; i < n; ++i) {
            if (m.at(i, i).v != 0)
                throw InvalidInput("make_pencil: nonzero diagonal");
            for (std::size_t j = i + 1; j < n; ++j)
                if (m.at(i, j) != F.neg(m.at(j, i)))
                    throw InvalidInput("make_pencil: not skew-symmetric");
        }
    }
    AltPencil P{std::move(F), n, mats.size(), std::move(mats)};
    return P;
}

std::vector<std::vector<Scalar>> radical(const AltPencil& P) {
    // u o V = 0 iff M_w^T u = 0 for all w
    Mat stacked(P.dimW * P.dimV, P.dimV);
    for (std::size_t w = 0; w < P.dimW; ++w)
        for (std::size_t i = 0; i < P.dimV; ++i)
            for (std::size_t j = 0; j < P.dimV; ++j)
                stacked.at(w * P.dimV + i, j) = P.mats[w].at(j, i);
    return kernel_basis(stacked, P.F);
}

bool is_full(const AltPencil& P) {
    Mat flat(P.dimW, P.dimV * P.dimV);
    for (std::size_t w = 0; w < P.dimW; ++w)
        for (std::size_t e = 0; e < P.dimV * P.dimV; ++e)
            flat.at(w, e) = P.mats[w].entries[e];
    return mat_rank(flat, P.F) == P.dimW;
}

HomForm discriminant(const AltPencil& P) {
    std::size_t n = P.dimV;
    if (n > 24) throw BoundExceeded("discriminant: dimension too large");
    const FieldSpec& F = P.F;
    // minor expansion along rows, memoized on the remaining-column mask
    std::map<std::uint64_t, HomForm> memo;
    std::function<HomForm(std::uint64_t)> det = [&](std::uint64_t mask) -> HomForm {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t rem = static_cast<std::size_t>(__builtin_popcountll(mask));
        std::size_t row = n - rem;
        HomForm acc(static_cast<unsigned>(P.dimW),
                    static_cast<unsigned>(rem));
        if (rem == 0) {
            acc = HomForm(static_cast<unsigned>(P.dimW), 0);
            acc.set(ExpTuple(P.dimW, 0), F.one());
        } else {
            bool flip = false;
            for (std::size_t c = 0; c < n; ++c) {
                if (!(mask >> c & 1)) continue;
                HomForm e = entry_form(P, row, c);
                if (!e.is_zero()) {
                    HomForm term = form_mul(e, det(mask & ~(1ull << c)), F);
                    acc = flip ? form_sub(acc, term, F) : form_add(acc, term, F);
                }
                flip = !flip;
            }
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return det(n == 64 ? ~0ull : (1ull << n) - 1);
}

HomForm pfaffian_raw(const AltPencil& P) {
    std::size_t n = P.dimV;
    if (n % 2 != 0)  // odd alternating matrices are singular
        return HomForm(static_cast<unsigned>(P.dimW), 0);
    if (n > 24) throw BoundExceeded("pfaffian: dimension too large");
    const FieldSpec& F = P.F;
    std::map<std::uint64_t, HomForm> memo;
    std::function<HomForm(std::uint64_t)> pf = [&](std::uint64_t mask) -> HomForm {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t rem = static_cast<std::size_t>(__builtin_popcountll(mask));
        HomForm acc(static_cast<unsigned>(P.dimW),
                    static_cast<unsigned>(rem / 2));
        if (rem == 0) {
            acc = HomForm(static_cast<unsigned>(P.dimW), 0);
            acc.set(ExpTuple(P.dimW, 0), F.one());
        } else {
            std::size_t s0 = static_cast<std::size_t>(__builtin_ctzll(mask));
            bool flip = false;  // sign (-1)^(t-1) over the remaining partners
            for (std::size_t t = s0 + 1; t < n; ++t) {
                if (!(mask >> t & 1)) continue;
                HomForm e = entry_form(P, s0, t);
                if (!e.is_zero()) {
                    HomForm term =
                        form_mul(e, pf(mask & ~(1ull << s0) & ~(1ull << t)), F);
                    acc = flip ? form_sub(acc, term, F) : form_add(acc, term, F);
                }
                flip = !flip;
            }
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return pf(n == 64 ? ~0ull : (1ull << n) - 1);
}

HomForm pfaffian(const AltPencil& P) {
    return form_normalize(pfaffian_raw(P), P.F);
}

CentroidBasis centroid(const AltPencil& P) {
    const FieldSpec& F = P.F;
    std::size_t n = P.dimV, d = P.dimW;
    std::size_t nx = n * n, nz = d * d;
    // unknowns: X row-major, then Z row-major
    Mat sys(2 * d * n * n, nx + nz);
    std::size_t eq = 0;
    for (std::size_t w = 0; w < d; ++w) {
        const Mat& M = P.mats[w];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                // sum_r X[r][a] M[r][b] - sum_r M[a][r] X[r][b] = 0
                for (std::size_t r = 0; r < n; ++r) {
                    sys.at(eq, r * n + a) =
                        F.add(sys.at(eq, r * n + a), M.at(r, b));
                    sys.at(eq, r * n + b) =
                        F.sub(sys.at(eq, r * n + b), M.at(a, r));
                }
                ++eq;
                // sum_r M[a][r] X[r][b] - sum_t M_t[a][b] Z[w][t] = 0
                for (std::size_t r = 0; r < n; ++r)
                    sys.at(eq, r * n + b) =
                        F.add(sys.at(eq, r * n + b), M.at(a, r));
                for (std::size_t t = 0; t < d; ++t)
                    sys.at(eq, nx + w * d + t) =
                        F.sub(sys.at(eq, nx + w * d + t), P.mats[t].at(a, b));
                ++eq;
            }
    }
    CentroidBasis C;
    for (const auto& vec : kernel_basis(sys, F)) {
        Mat X(n, n), Z(d, d);
        std::copy(vec.begin(), vec.begin() + nx, X.entries.begin());
        std::copy(vec.begin() + nx, vec.end(), Z.entries.begin());
        C.xs.push_back(std::move(X));
        C.zs.push_back(std::move(Z));
    }
    // self-check: composition of solutions must solve the system again
    auto solves = [&](const Mat& X, const Mat& Z) {
        std::vector<Scalar> v(nx + nz);
        std::copy(X.entries.begin(), X.entries.end(), v.begin());
        std::copy(Z.entries.begin(), Z.entries.end(), v.begin() + nx);
        for (std::size_t i = 0; i < sys.rows; ++i) {
            Scalar s{0};
            for (std::size_t j = 0; j < sys.cols; ++j)
                s = F.add(s, F.mul(sys.at(i, j), v[j]));
            if (s.v != 0) return false;
        }
        return true;
    };
    if (!solves(Mat::identity(n), Mat::identity(d)))
        throw Error("centroid: identity pair is not a solution");
    for (std::size_t i = 0; i < C.dim(); ++i)
        for (std::size_t j = 0; j < C.dim(); ++j)
            if (!solves(mat_mul(C.xs[i], C.xs[j], F),
                        mat_mul(C.zs[i], C.zs[j], F)))
                throw Error("centroid: not closed under composition");
    return C;
}

bool centroid_is_field(const AltPencil& P, const CentroidBasis& C) {
    const FieldSpec& F = P.F;
    std::size_t e = C.dim();
    if (e == 0) return false;
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = i + 1; j < e; ++j)
            if (mat_mul(C.xs[i], C.xs[j], F) != mat_mul(C.xs[j], C.xs[i], F))
                return false;
    std::uint64_t q = F.q(), total = 1;
    for (std::size_t i = 0; i < e; ++i) {
        total *= q;
        if (total > max_enum())
            throw BoundExceeded("centroid_is_field: element count over cap");
    }
    std::size_t n = P.dimV;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Mat X(n, n);
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < e; ++i) {
            Scalar c = F.element(v % q);
            v /= q;
            if (c.v != 0) X = mat_add(X, mat_scale(C.xs[i], c, F), F);
        }
        if (is_zero_mat(X) || !mat_inverse(X, F)) return false;
    }
    return true;
}

std::size_t genus(const AltPencil& P) {
    CentroidBasis C = centroid(P);
    if (!centroid_is_field(P, C))
        throw CentroidNotField("genus: centroid is not a field");
    std::size_t e = C.dim();
    if (P.dimW % e != 0)
        throw CentroidNotField("genus: centroid degree does not divide dim W");
    return P.dimW / e;
}

AltPencil heisenberg_double(FieldSpec F, const std::vector<Mat>& mats) {
    if (mats.empty()) throw InvalidInput("heisenberg_double: no matrices");
    std::size_t r = mats.front().rows, c = mats.front().cols;
    std::vector<Mat> out;
    for (const auto& m : mats) {
        if (m.rows != r || m.cols != c)
            throw DimensionMismatch("heisenberg_double: mixed shapes");
        Mat d(r + c, r + c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                d.at(i, r + j) = m.at(i, j);
                d.at(r + j, i) = F.neg(m.at(i, j));
            }
        out.push_back(std::move(d));
    }
    return make_pencil(std::move(F), std::move(out));
}

AltPencil direct_sum(const AltPencil& A, const AltPencil& B) {
    if (!(A.F == B.F)) throw MixedCodomain("direct_sum: different base fields");
    if (A.dimW != B.dimW) throw MixedCodomain("direct_sum: different codomains");
    std::size_t n = A.dimV + B.dimV;
    std::vector<Mat> out;
    for (std::size_t w = 0; w < A.dimW; ++w) {
        Mat m(n, n);
        for (std::size_t i = 0; i < A.dimV; ++i)
            for (std::size_t j = 0; j < A.dimV; ++j)
                m.at(i, j) = A.mats[w].at(i, j);
        for (std::size_t i = 0; i < B.dimV; ++i)
            for (std::size_t j = 0; j < B.dimV; ++j)
                m.at(A.dimV + i, A.dimV + j) = B.mats[w].at(i, j);
        out.push_back(std::move(m));
    }
    return make_pencil(A.F, std::move(out));
}

bool is_ses_direct(const AltPencil& P) {
    const FieldSpec& F = P.F;
    return scan_projective(F, P.dimV, [&](const std::vector<Scalar>& u) {
        Mat L(P.dimW, P.dimV);
        for (std::size_t w = 0; w < P.dimW; ++w) {
            auto row = vec_mat(u, P.mats[w], F);
            for (std::size_t j = 0; j < P.dimV; ++j) L.at(w, j) = row[j];
        }
        return mat_rank(std::move(L), F) == P.dimW;
    });
}

bool is_ses_pfaffian(const AltPencil& P) {
    HomForm pf = pfaffian(P);
    if (pf.is_zero()) return false;
    return scan_projective(P.F, P.dimW, [&](const std::vector<Scalar>& x) {
        return form_eval(pf, x, P.F).v != 0;
    });
}

std::uint64_t count_totally_isotropic(const AltPencil& P, std::size_t k) {
    const FieldSpec& F = P.F;
    std::size_t n = P.dimV;
    if (k > n) return 0;
    if (k == 0) return 1;
    std::uint64_t q = F.q();
    // Gaussian binomial g[i][j] = g[i-1][j-1] + q^j g[i-1][j] as the bound
    std::vector<std::vector<std::uint64_t>> g(n + 1,
                                              std::vector<std::uint64_t>(k + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) g[i][0] = 1;
    for (std::size_t j = 1; j <= k; ++j) {
        std::uint64_t qj = 1;
        for (std::size_t t = 0; t < j; ++t) qj *= q;
        for (std::size_t i = j; i <= n; ++i)
            g[i][j] = g[i - 1][j - 1] + qj * g[i - 1][j];
    }
    if (g[n][k] > max_enum())
        throw BoundExceeded("count_totally_isotropic: subspace count over cap");

    std::uint64_t count = 0;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    auto advance = [&]() {
        std::size_t i = k;
        while (i-- > 0) {
            if (piv[i] < n - (k - i)) {
                ++piv[i];
                for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    std::vector<std::vector<Scalar>> basis(k, std::vector<Scalar>(n));
    do {
        // free positions of the reduced echelon pattern
        std::vector<std::pair<std::size_t, std::size_t>> freepos;
        std::vector<bool> is_piv(n, false);
        for (auto c : piv) is_piv[c] = true;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = piv[i] + 1; c < n; ++c)
                if (!is_piv[c]) freepos.emplace_back(i, c);
        std::uint64_t total = 1;
        for (std::size_t t = 0; t < freepos.size(); ++t) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            for (auto& row : basis) std::fill(row.begin(), row.end(), Scalar{0});
            for (std::size_t i = 0; i < k; ++i) basis[i][piv[i]] = F.one();
            std::uint64_t v = idx;
            for (auto [r, c] : freepos) {
                basis[r][c] = F.element(v % q);
                v /= q;
            }
            bool iso = true;
            for (std::size_t i = 0; iso && i < k; ++i)
                for (std::size_t j = i + 1; iso && j < k; ++j)
                    for (std::size_t w = 0; w < P.dimW; ++w) {
                        auto row = vec_mat(basis[i], P.mats[w], F);
                        Scalar s{0};
                        for (std::size_t c = 0; c < n; ++c)
                            s = F.add(s, F.mul(row[c], basis[j][c]));
                        if (s.v != 0) {
                            iso = false;
                            break;
                        }
                    }
            if (iso) ++count;
        }
    } while (advance());
    return count;
}

}  // namespace ses
