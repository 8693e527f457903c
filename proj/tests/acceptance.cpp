// End-to-end acceptance run: one line per criterion, nonzero exit on failure.
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "ses/census.hpp"
#include "ses/constructions.hpp"
#include "ses/io.hpp"

using namespace ses;

namespace {

int failures = 0;

void report(int num, const char* what, bool ok) {
    std::printf("criterion %2d %s: %s\n", num, ok ? "pass" : "FAIL", what);
    if (!ok) ++failures;
}

bool orbit_formulas() {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        FieldSpec F = FieldSpec::prime(p);
        for (unsigned n = 2; n <= 4; ++n)
            if (count_orbits(F, n, FormFamily::Irreducible) != N_closed(p, n))
                return false;
    }
    for (std::uint64_t p : {2, 3, 5, 7}) {
        FieldSpec F = FieldSpec::prime(p);
        if (count_orbits(F, 5, FormFamily::Irreducible) != N_closed(p, 5))
            return false;
    }
    return true;
}

bool single_class_orders() {
    for (std::uint64_t p : {2, 3, 5, 7})
        for (unsigned e : {6u, 8u})
            if (classes_bruteforce(p, e).brute_force != 1) return false;
    return true;
}

bool order_p10() {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        ClassCountReport r = classes_bruteforce(p, 10);
        if (r.brute_force != p + 3 - std::gcd<std::uint64_t>(2, p)) return false;
        if (r.breakdown.size() != 3) return false;
        if (r.breakdown[0].count != N_closed(p, 4) + N_closed(p, 2)) return false;
        if (r.breakdown[1].count != (p == 2 ? 0 : (p - 1) / 2)) return false;
        if (r.breakdown[2].count != 1) return false;
    }
    return true;
}

bool order_p12() {
    std::uint64_t expect[] = {2, 3, 10};
    std::size_t i = 0;
    for (std::uint64_t p : {2, 3, 5}) {
        ClassCountReport r = classes_bruteforce(p, 12);
        if (r.brute_force != expect[i++]) return false;
        if (r.brute_force != classes_closed(p, 12)) return false;
        if (r.breakdown[0].count != N_closed(p, 5)) return false;
        if (r.breakdown[1].count != decomposable_pair_closed(p, "quad+cubic"))
            return false;
        if (r.breakdown[2].count != 0) return false;
    }
    return true;
}

bool quadratic_stabilizers() {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        FieldSpec F = FieldSpec::prime(p);
        for (const auto& f : enumerate_monic_irreducibles(F, 2))
            if (stabilizer_gl(FormIdeal::from_poly(f, F), F).size() !=
                2 * (p * p - 1))
                return false;
    }
    return true;
}

bool dihedral_orbits() {
    for (std::uint64_t p : {3, 5, 7, 11}) {
        DihedralCensus dc = dihedral_census(p);
        if (dc.delta_size != (p * p - p) / 2) return false;
        if (dc.orbit_count != (p - 1) / 2) return false;
    }
    return true;
}

bool sylow3() { return sylow3_bijection_check(5) && sylow3_bijection_check(11); }

// all echelon-basis subspaces of F^n of dimension k
std::vector<SubspaceBasis> all_subspaces(const FieldSpec& F, std::size_t n,
                                         std::size_t k) {
    std::vector<SubspaceBasis> out;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    auto advance = [&] {
        std::size_t i = k;
        while (i-- > 0)
            if (piv[i] < n - (k - i)) {
                ++piv[i];
                for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
                return true;
            }
        return false;
    };
    do {
        std::vector<std::pair<std::size_t, std::size_t>> freepos;
        std::vector<bool> is_piv(n, false);
        for (auto c : piv) is_piv[c] = true;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!is_piv[c]) freepos.emplace_back(r, c);
        std::uint64_t total = 1;
        for (std::size_t t = 0; t < freepos.size(); ++t) total *= F.q();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<std::vector<Scalar>> rows(k, std::vector<Scalar>(n));
            for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = F.one();
            std::uint64_t v = idx;
            for (auto [r, c] : freepos) {
                rows[r][c] = F.element(v % F.q());
                v /= F.q();
            }
            out.push_back(make_subspace(F, n, rows));
        }
    } while (advance());
    return out;
}

bool quotient_scan() {
    struct Case {
        std::uint64_t p;
        unsigned c;
    };
    for (auto [p, c] : {Case{2, 2}, Case{3, 2}, Case{5, 2}, Case{2, 3}}) {
        FieldSpec F = FieldSpec::prime(p);
        LocalAlgebra A =
            make_local_algebra(F, enumerate_monic_irreducibles(F, 2).front(), c);
        std::uint64_t pass = 0;
        for (const auto& S : all_subspaces(F, A.dim, A.dim - 2)) {
            bool cond = check_complement_condition(A, S);
            if (cond != is_ses_direct(quotient_pencil(A, S))) return false;
            if (cond) ++pass;
        }
        if (c == 2 && pass != p * p * p * p) return false;
    }
    return true;
}

bool pfaffian_criterion() {
    // constructed pencils
    std::vector<AltPencil> pool;
    for (std::uint64_t p : {2, 3, 5}) {
        FieldSpec F = FieldSpec::prime(p);
        for (unsigned d = 2; d <= 3; ++d)
            for (unsigned c = 1; c <= 2; ++c) {
                // keep the projective scan of F^(2dc) under the enumeration cap
                double points = 1;
                for (unsigned i = 0; i < 2 * d * c; ++i) points *= p;
                if (points / (p - 0.5) > 1e6) continue;
                for (const auto& a : enumerate_monic_irreducibles(F, d))
                    pool.push_back(companion_pencil(a, c, F));
            }
        LocalAlgebra A =
            make_local_algebra(F, enumerate_monic_irreducibles(F, 2).front(), 2);
        pool.push_back(heisenberg_pencil(A));
        auto subs = all_subspaces(F, A.dim, A.dim - 2);
        for (std::size_t i = 0; i < subs.size() && i < 10; ++i)
            pool.push_back(quotient_pencil(A, subs[i]));
        pool.push_back(hflat_pencil(F, 2));
        if (p < 5)  // dimV 10 over F_5 would blow the projective-scan cap
            pool.push_back(direct_sum(pool.back(), pool.back()));
        pool.push_back(direct_sum(pool.front(), pool.front()));
    }
    for (const auto& P : pool)
        if (is_ses_direct(P) != is_ses_pfaffian(P)) return false;
    // random full nondegenerate pencils with dimW = 2
    std::mt19937_64 rng(20260823);
    int accepted = 0;
    while (accepted < 500) {
        std::uint64_t primes[] = {2, 3, 5};
        FieldSpec F = FieldSpec::prime(primes[rng() % 3]);
        std::size_t n = 2 * (1 + rng() % 4);  // 2, 4, 6, 8
        std::vector<Mat> mats;
        for (int w = 0; w < 2; ++w) {
            Mat m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    Scalar c = F.element(rng() % F.q());
                    m.at(i, j) = c;
                    m.at(j, i) = F.neg(c);
                }
            mats.push_back(std::move(m));
        }
        AltPencil P = make_pencil(F, std::move(mats));
        if (!is_full(P) || !radical(P).empty()) continue;
        ++accepted;
        if (is_ses_direct(P) != is_ses_pfaffian(P)) return false;
    }
    return true;
}

bool genus_example() {
    FieldSpec F = FieldSpec::prime(5);
    AltPencil H = load_pencil("fixtures/genus_h.json");
    AltPencil G = load_pencil("fixtures/genus_g.json");
    HomForm target(2, 4);  // (X^2 + 2Y^2)^2
    target.set({4, 0}, F.one());
    target.set({2, 2}, F.from_int(4));
    target.set({0, 4}, F.from_int(4));
    if (pfaffian(H) != target) return false;
    auto CH = centroid(H);
    auto CG = centroid(G);
    if (CH.dim() != 1 || !centroid_is_field(H, CH)) return false;  // order 5
    if (CG.dim() != 2 || !centroid_is_field(G, CG)) return false;  // order 25
    FormIdeal quad = FormIdeal::from_poly(parse_poly("x^2+2", F, true), F);
    HomForm qf = quad.to_form();
    FormIdeal square = FormIdeal::from_form(form_mul(qf, qf, F), F);
    return !multiset_equivalent({quad, quad}, {square}, GroupKind::GL, F)
                .equivalent;
}

bool same_pfaffian_example() {
    FieldSpec F = FieldSpec::prime(3);
    AltPencil P1 = load_pencil("fixtures/same_pfaffian_split.json");
    AltPencil P2 = load_pencil("fixtures/same_pfaffian_twisted.json");
    HomForm cubic(3, 3);
    cubic.set({3, 0, 0}, F.one());
    cubic.set({2, 1, 0}, F.one());
    cubic.set({1, 2, 0}, F.one());
    cubic.set({1, 0, 2}, F.from_int(2));
    cubic.set({0, 3, 0}, F.from_int(2));
    cubic.set({0, 2, 1}, F.from_int(2));
    cubic.set({0, 0, 3}, F.one());
    if (pfaffian(P1) != cubic || pfaffian(P2) != cubic) return false;
    return count_totally_isotropic(P1, 3) >= 2 &&
           count_totally_isotropic(P2, 3) == 1;
}

const char* cli_binary() {
#ifdef SES_CLI_PATH
    return SES_CLI_PATH;
#else
    return std::getenv("SES_CLI_PATH");
#endif
}

std::string run_cli(const std::string& args) {
    const char* cli = cli_binary();
    if (!cli) return "";
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

bool determinism() {
    if (!cli_binary()) {
        std::fprintf(stderr, "SES_CLI_PATH not set\n");
        return false;
    }
    for (const std::string& base :
         {std::string("census --p 3 --exp 10 --format json"),
          std::string("orbits --p 5 --n 4 --format json"),
          std::string("pfaffian fixtures/same_pfaffian_split.json --isotropic 3")}) {
        std::string a = run_cli(base + " --workers 1");
        std::string b = run_cli(base + " --workers 4");
        if (a.empty() || a != b) return false;
    }
    return true;
}

}  // namespace

int main() {
    report(1, "orbit counts match the closed forms", orbit_formulas());
    report(2, "orders p^6 and p^8 give a single class", single_class_orders());
    report(3, "order p^10 counts and strata", order_p10());
    report(4, "order p^12 counts and strata", order_p12());
    report(5, "quadratic stabilizers have order 2(p^2-1)", quadratic_stabilizers());
    report(6, "dihedral conjugation orbits number (p-1)/2", dihedral_orbits());
    report(7, "Sylow-3 / quadratic bijection", sylow3());
    report(8, "quotient is ses iff the complement condition holds", quotient_scan());
    report(9, "direct ses test agrees with the Pfaffian test", pfaffian_criterion());
    report(10, "genus worked example", genus_example());
    report(11, "equal Pfaffians separated by isotropic counts", same_pfaffian_example());
    report(12, "output is byte-identical across worker counts", determinism());
    if (failures) std::printf("%d criteria FAILED\n", failures);
    else std::printf("all 12 criteria passed\n");
    return failures ? 1 : 0;
}
