#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ses/polyring.hpp"

using namespace ses;

namespace {

UniPoly up(const FieldSpec& F, std::initializer_list<int> low_to_high) {
    std::vector<Scalar> c;
    for (int x : low_to_high) c.push_back(F.from_int(x));
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("divmod and gcd") {
    FieldSpec F = FieldSpec::prime(5);
    UniPoly a = up(F, {1, 0, 3, 1});  // x^3+3x^2+1
    UniPoly b = up(F, {2, 1});        // x+2
    auto [q, r] = poly_divmod(a, b, F);
    CHECK(poly_add(poly_mul(q, b, F), r, F) == a);
    CHECK(r.degree() < b.degree());

    UniPoly g = up(F, {1, 1});  // x+1
    UniPoly f1 = poly_mul(g, up(F, {2, 0, 1}), F);  // x^2+2 is irreducible mod 5
    UniPoly f2 = poly_mul(g, up(F, {3, 1}), F);
    CHECK(monic(poly_gcd(f1, f2, F), F) == g);

    CHECK_THROWS_AS(poly_divmod(a, UniPoly{}, F), ZeroPolynomial);
}

TEST_CASE("irreducibility over small fields") {
    FieldSpec F2 = FieldSpec::prime(2);
    CHECK(is_irreducible(up(F2, {1, 1, 1}), F2));      // x^2+x+1
    CHECK(!is_irreducible(up(F2, {1, 0, 1}), F2));     // x^2+1 = (x+1)^2
    CHECK(is_irreducible(up(F2, {1, 1, 0, 1}), F2));   // x^3+x+1
    CHECK(!is_irreducible(up(F2, {1, 1, 1, 1}), F2));  // (x+1)(x^2+1)
    FieldSpec F3 = FieldSpec::prime(3);
    CHECK(is_irreducible(up(F3, {1, 0, 1}), F3));  // x^2+1
    CHECK(!is_irreducible(up(F3, {2, 0, 1}), F3));
    CHECK_THROWS_AS(is_irreducible(up(F3, {2}), F3), ConstantPolynomial);
}

TEST_CASE("irreducible enumeration matches the necklace count") {
    for (std::uint64_t p : {2, 3, 5}) {
        FieldSpec F = FieldSpec::prime(p);
        for (unsigned n = 1; n <= 4; ++n) {
            const auto& list = enumerate_monic_irreducibles(F, n);
            CHECK(list.size() == count_monic_irreducibles(p, n));
            for (const auto& f : list) {
                CHECK(f.degree() == static_cast<int>(n));
                CHECK(f.lead().v == 1);
            }
            // sorted by coefficient encoding (c_0 least significant), no dupes
            auto enc = [&](const UniPoly& f) {
                std::uint64_t e = 0;
                for (int i = f.degree(); i >= 0; --i) e = e * p + f.coeff(i).v;
                return e;
            };
            for (std::size_t i = 1; i < list.size(); ++i)
                CHECK(enc(list[i - 1]) < enc(list[i]));
        }
    }
    CHECK(count_monic_irreducibles(3, 2) == 3);
    CHECK(count_monic_irreducibles(2, 4) == 3);
    CHECK(count_monic_irreducibles(7, 3) == 112);
    FieldSpec F9 = FieldSpec::make(3, 2);
    CHECK(enumerate_monic_irreducibles(F9, 2).size() == count_monic_irreducibles(9, 2));
}

TEST_CASE("factorization") {
    FieldSpec F = FieldSpec::prime(3);
    UniPoly a = up(F, {1, 0, 1});                           // x^2+1
    UniPoly f = poly_mul(poly_mul(a, a, F), up(F, {1, 1}), F);  // (x^2+1)^2 (x+1)
    auto fac = factor(f, F);
    REQUIRE(fac.size() == 2);
    UniPoly rebuilt = up(F, {1});
    for (const auto& [g, e] : fac) rebuilt = poly_mul(rebuilt, poly_pow(g, e, F), F);
    CHECK(rebuilt == monic(f, F));

    auto pd = primary_part(poly_pow(a, 3, F), F);
    REQUIRE(pd.has_value());
    CHECK(pd->base == a);
    CHECK(pd->exponent == 3);
    CHECK(!primary_part(f, F).has_value());
}

TEST_CASE("homogeneous forms") {
    FieldSpec F = FieldSpec::prime(5);
    UniPoly a = up(F, {2, 0, 1});  // x^2+2
    HomForm h = homogenize(a, F);
    CHECK(h.nvars == 2);
    CHECK(h.degree == 2);
    CHECK(h.coeff({2, 0}).v == 1);
    CHECK(h.coeff({0, 2}).v == 2);
    CHECK(dehomogenize(h, 1, F) == a);

    HomForm sq = form_mul(h, h, F);
    CHECK(sq.degree == 4);
    CHECK(form_eval(sq, {Scalar{2}, Scalar{1}}, F).v ==
          F.pow(poly_eval(a, Scalar{2}, F), 2).v);

    Mat t(2, 2);  // swap variables
    t.at(0, 1) = F.one();
    t.at(1, 0) = F.one();
    HomForm swapped = form_substitute(h, t, F);
    CHECK(swapped.coeff({2, 0}).v == 2);
    CHECK(swapped.coeff({0, 2}).v == 1);

    CHECK_THROWS_AS(HomForm(2, 2, TermMap{{{1, 2}, Scalar{1}}}), InvalidInput);
}

TEST_CASE("form square root, odd characteristic") {
    FieldSpec F = FieldSpec::prime(5);
    HomForm f = homogenize(up(F, {2, 0, 1}), F);  // X^2+2Y^2
    HomForm sq = form_mul(f, f, F);
    auto root = form_sqrt(sq, F);
    REQUIRE(root.has_value());
    CHECK(*root == form_normalize(f, F));

    // scaling by a square keeps a root; by a non-square does not
    auto root2 = form_sqrt(form_scale(sq, Scalar{4}, F), F);
    REQUIRE(root2.has_value());
    CHECK(*root2 == *root);  // the root comes back normalized
    CHECK(!form_sqrt(form_scale(sq, Scalar{3}, F), F).has_value());

    // product of distinct linear forms: not a square
    HomForm xy(2, 2);
    xy.set({1, 1}, F.one());
    CHECK(!form_sqrt(xy, F).has_value());
    // odd degree: not a square
    HomForm cube(2, 3);
    cube.set({3, 0}, F.one());
    CHECK(!form_sqrt(cube, F).has_value());
}

TEST_CASE("form square root, characteristic 2") {
    FieldSpec F = FieldSpec::prime(2);
    HomForm f(3, 2);  // X^2 + XY + Z^2
    f.set({2, 0, 0}, F.one());
    f.set({1, 1, 0}, F.one());
    f.set({0, 0, 2}, F.one());
    HomForm sq = form_mul(f, f, F);
    auto root = form_sqrt(sq, F);
    REQUIRE(root.has_value());
    CHECK(*root == f);

    HomForm xy(2, 2);
    xy.set({1, 1}, F.one());
    CHECK(!form_sqrt(xy, F).has_value());

    FieldSpec F4 = FieldSpec::make(2, 2);
    HomForm g(2, 1);
    g.set({1, 0}, Scalar{2});  // a generator of F_4
    g.set({0, 1}, F4.one());
    auto r4 = form_sqrt(form_mul(g, g, F4), F4);
    REQUIRE(r4.has_value());
    CHECK(*r4 == form_normalize(g, F4));
}

TEST_CASE("zero and edge cases") {
    FieldSpec F = FieldSpec::prime(3);
    auto z = form_sqrt(HomForm(2, 0), F);
    REQUIRE(z.has_value());
    CHECK(z->is_zero());
    CHECK(poly_pow(up(F, {1, 1}), 0, F) == up(F, {1}));
    CHECK_THROWS_AS(homogenize(UniPoly{}, F), ZeroPolynomial);
}
