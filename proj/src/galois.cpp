#include "ses/galois.hpp"

#include <algorithm>
#include <cstdlib>

#include "ses/config.hpp"

namespace ses {

namespace {

std::uint64_t g_max_enum_cache = 0;
bool g_max_enum_loaded = false;

}  // namespace

std::uint64_t max_enum() {
    if (!g_max_enum_loaded) {
        g_max_enum_cache = 1000000;
        if (const char* env = std::getenv("SES_MAX_ENUM")) {
            char* end = nullptr;
            std::uint64_t v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) g_max_enum_cache = v;
        }
        g_max_enum_loaded = true;
    }
    return g_max_enum_cache;
}

void set_max_enum(std::uint64_t cap) {
    g_max_enum_cache = cap;
    g_max_enum_loaded = true;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // over F_p, low-to-high

void trim(Poly& f, std::uint64_t) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // mod is monic of degree m
    std::size_t m = mod.size() - 1;
    for (std::size_t i = c.size(); i-- > m;) {
        std::uint64_t coef = c[i];
        if (coef == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::uint64_t sub = (coef * mod[j]) % p;
            c[i - m + j] = (c[i - m + j] + p - sub) % p;
        }
    }
    c.resize(m);
    trim(c, p);
    return c;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::uint64_t p) {
    Poly r = {1};
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a, p);
    trim(b, p);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = 1;
        {  // inverse of b's leading coefficient mod p
            std::uint64_t lb = b.back();
            for (std::uint64_t x = 1; x < p; ++x)
                if ((lb * x) % p == 1) { lead_inv = x; break; }
        }
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t f = (a.back() * lead_inv) % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = (a[i + shift] + p - (f * b[i]) % p) % p;
            trim(a, p);
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin irreducibility test for a monic polynomial over F_p.
bool poly_irreducible(const Poly& f, std::uint64_t p) {
    std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    Poly x = {0, 1};
    // x^(p^n) == x mod f
    Poly t = x;
    for (std::size_t i = 0; i < n; ++i) t = poly_powmod(t, p, f, p);
    Poly diff = t;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff, p);
    if (!diff.empty()) return false;
    // gcd(x^(p^(n/r)) - x, f) == 1 for every prime r | n
    for (std::size_t r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool rp = true;
        for (std::size_t d = 2; d * d <= r; ++d)
            if (r % d == 0) { rp = false; break; }
        if (!rp) continue;
        Poly u = x;
        for (std::size_t i = 0; i < n / r; ++i) u = poly_powmod(u, p, f, p);
        Poly du = u;
        du.resize(std::max<std::size_t>(du.size(), 2), 0);
        du[1] = (du[1] + p - 1) % p;
        trim(du, p);
        Poly g = poly_gcd(du, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldSpec::FieldSpec(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (!is_prime_u64(p_)) throw InvalidInput("FieldSpec: p is not prime");
    if (k_ < 1) throw InvalidInput("FieldSpec: k must be >= 1");
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) {
        q_ *= p_;
        if (q_ > kMaxFieldOrder) throw BoundExceeded("FieldSpec: q exceeds field-order cap");
    }
    if (k_ == 1) {
        if (!modulus_.empty()) throw InvalidInput("FieldSpec: modulus given for prime field");
    } else {
        if (modulus_.size() != k_ + 1)
            throw InvalidInput("FieldSpec: modulus must have degree k");
        for (auto& c : modulus_) c %= p_;
        if (modulus_.back() != 1)
            throw InvalidInput("FieldSpec: modulus must be monic");
        if (!poly_irreducible(modulus_, p_))
            throw NotIrreducible("FieldSpec: modulus is reducible");
    }
}

FieldSpec FieldSpec::prime(std::uint64_t p) { return FieldSpec(p, 1, {}); }

FieldSpec FieldSpec::ext(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (modulus.size() < 2) throw InvalidInput("FieldSpec::ext: modulus too short");
    auto deg = static_cast<unsigned>(modulus.size() - 1);
    return FieldSpec(p, deg, std::move(modulus));
}

FieldSpec FieldSpec::make(std::uint64_t p, unsigned k) {
    if (k == 1) return prime(p);
    if (k == 2 && p == 2) return ext(2, {1, 1, 1});   // x^2+x+1
    if (k == 2 && p == 3) return ext(3, {1, 0, 1});   // x^2+1
    if (k == 2 && p == 5) return ext(5, {2, 0, 1});   // x^2+2
    throw InvalidInput("FieldSpec::make: no default modulus for this field; supply one");
}

Scalar FieldSpec::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(r)};
}

Scalar FieldSpec::from_residues(const std::vector<std::uint64_t>& c) const {
    if (c.size() > k_) throw InvalidInput("from_residues: too many coordinates");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw InvalidInput("from_residues: residue out of range");
        v = v * p_ + c[i];
    }
    return {v};
}

std::vector<std::uint64_t> FieldSpec::residues(Scalar a) const {
    std::vector<std::uint64_t> c(k_);
    std::uint64_t v = a.v;
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Scalar FieldSpec::element(std::uint64_t index) const {
    if (index >= q_) throw InvalidInput("element: index out of range");
    return {index};
}

Scalar FieldSpec::add(Scalar a, Scalar b) const {
    if (k_ == 1) return {(a.v + b.v) % p_};
    std::uint64_t v = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t da = a.v % p_, db = b.v % p_;
        a.v /= p_;
        b.v /= p_;
        v += ((da + db) % p_) * mul;
        mul *= p_;
    }
    return {v};
}

Scalar FieldSpec::neg(Scalar a) const {
    if (k_ == 1) return {(p_ - a.v) % p_};
    std::uint64_t v = 0, mul = 1;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t d = a.v % p_;
        a.v /= p_;
        v += ((p_ - d) % p_) * mul;
        mul *= p_;
    }
    return {v};
}

Scalar FieldSpec::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar FieldSpec::mul(Scalar a, Scalar b) const {
    if (k_ == 1) return {(a.v * b.v) % p_};
    auto da = residues(a);
    auto db = residues(b);
    std::vector<std::uint64_t> c(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
    }
    for (std::size_t i = c.size(); i-- > k_;) {
        std::uint64_t coef = c[i];
        if (coef == 0) continue;
        c[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
            c[i - k_ + j] = (c[i - k_ + j] + p_ * p_ - (coef * modulus_[j]) % p_) % p_;
    }
    c.resize(k_);
    return from_residues(c);
}

Scalar FieldSpec::pow(Scalar a, std::uint64_t e) const {
    Scalar r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Scalar FieldSpec::inv(Scalar a) const {
    if (a.v == 0) throw ZeroInverse("inv of zero");
    return pow(a, q_ - 2);
}

Scalar FieldSpec::frobenius(Scalar a, unsigned j) const {
    Scalar r = a;
    for (unsigned i = 0; i < j % k_; ++i) r = pow(r, p_);
    return r;
}

std::optional<Scalar> FieldSpec::sqrt(Scalar a) const {
    if (a.v == 0) return zero();
    if (p_ == 2) return pow(a, q_ / 2);  // inverse Frobenius
    if (pow(a, (q_ - 1) / 2) != one()) return std::nullopt;
    for (std::uint64_t x = 1; x < q_; ++x) {
        Scalar s{x};
        if (mul(s, s) == a) return s;
    }
    return std::nullopt;  // unreachable
}

Scalar FieldSpec::generator() const {
    // factor q - 1
    std::vector<std::uint64_t> primes;
    std::uint64_t m = q_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) primes.push_back(m);
    for (std::uint64_t x = 1; x < q_; ++x) {
        Scalar g{x};
        bool ok = true;
        for (std::uint64_t r : primes)
            if (pow(g, (q_ - 1) / r) == one()) { ok = false; break; }
        if (ok) return g;
    }
    throw Error("generator: not found");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar{1};
    return m;
}

Mat mat_add(const Mat& a, const Mat& b, const FieldSpec& F) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw DimensionMismatch("mat_add: shape mismatch");
    Mat c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        c.entries[i] = F.add(a.entries[i], b.entries[i]);
    return c;
}

Mat mat_mul(const Mat& a, const Mat& b, const FieldSpec& F) {
    if (a.cols != b.rows) throw DimensionMismatch("mat_mul: shape mismatch");
    Mat c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t t = 0; t < a.cols; ++t) {
            Scalar av = a.at(i, t);
            if (F.is_zero(av)) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.at(i, j) = F.add(c.at(i, j), F.mul(av, b.at(t, j)));
        }
    return c;
}

Mat mat_scale(const Mat& a, Scalar s, const FieldSpec& F) {
    Mat c = a;
    for (auto& e : c.entries) e = F.mul(e, s);
    return c;
}

Mat mat_neg(const Mat& a, const FieldSpec& F) {
    Mat c = a;
    for (auto& e : c.entries) e = F.neg(e);
    return c;
}

Mat transpose(const Mat& a) {
    Mat c(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) c.at(j, i) = a.at(i, j);
    return c;
}

bool is_zero_mat(const Mat& a) {
    return std::all_of(a.entries.begin(), a.entries.end(),
                       [](Scalar s) { return s.v == 0; });
}

std::vector<std::size_t> rref(Mat& m, const FieldSpec& F) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && F.is_zero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            std::swap(m.at(row, j), m.at(piv, j));
        Scalar inv = F.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(row, j) = F.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || F.is_zero(m.at(i, col))) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t mat_rank(Mat m, const FieldSpec& F) { return rref(m, F).size(); }

std::optional<Mat> mat_inverse(const Mat& m, const FieldSpec& F) {
    if (m.rows != m.cols) throw DimensionMismatch("mat_inverse: not square");
    std::size_t n = m.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar{1};
    }
    auto piv = rref(aug, F);
    if (piv.size() != n || piv.back() != n - 1) return std::nullopt;
    Mat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const Mat& m, const FieldSpec& F) {
    Mat r = m;
    auto pivots = rref(r, F);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols, Scalar{0});
        v[free_col] = Scalar{1};
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.neg(r.at(i, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const Mat& a, const std::vector<Scalar>& b,
                            const FieldSpec& F) {
    if (b.size() != a.rows) throw DimensionMismatch("solve_linear: rhs size");
    Mat aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto pivots = rref(aug, F);
    LinearSolution sol;
    if (!pivots.empty() && pivots.back() == a.cols) return sol;  // inconsistent
    sol.consistent = true;
    sol.particular.assign(a.cols, Scalar{0});
    for (std::size_t i = 0; i < pivots.size(); ++i)
        sol.particular[pivots[i]] = aug.at(i, a.cols);
    Mat coeff = a;
    sol.kernel = kernel_basis(coeff, F);
    return sol;
}

std::vector<Scalar> mat_vec(const Mat& a, const std::vector<Scalar>& x,
                            const FieldSpec& F) {
    if (x.size() != a.cols) throw DimensionMismatch("mat_vec: size");
    std::vector<Scalar> y(a.rows, Scalar{0});
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            y[i] = F.add(y[i], F.mul(a.at(i, j), x[j]));
    return y;
}

std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const Mat& a,
                            const FieldSpec& F) {
    if (x.size() != a.rows) throw DimensionMismatch("vec_mat: size");
    std::vector<Scalar> y(a.cols, Scalar{0});
    for (std::size_t j = 0; j < a.cols; ++j)
        for (std::size_t i = 0; i < a.rows; ++i)
            y[j] = F.add(y[j], F.mul(x[i], a.at(i, j)));
    return y;
}

}  // namespace ses
