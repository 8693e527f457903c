#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ses/galois.hpp"

using namespace ses;

TEST_CASE("prime field arithmetic") {
    FieldSpec F = FieldSpec::prime(7);
    CHECK(F.q() == 7);
    CHECK(F.add({3}, {5}).v == 1);
    CHECK(F.sub({2}, {5}).v == 4);
    CHECK(F.mul({3}, {5}).v == 1);
    CHECK(F.neg({0}).v == 0);
    // inverse table for F_7: 1 1, 2 4, 3 5, 4 2, 5 3, 6 6
    std::uint64_t inv7[] = {0, 1, 4, 5, 2, 3, 6};
    for (std::uint64_t a = 1; a < 7; ++a) CHECK(F.inv({a}).v == inv7[a]);
    CHECK_THROWS_AS(F.inv({0}), ZeroInverse);
    CHECK(F.pow({3}, 6).v == 1);
    CHECK(F.from_int(-3).v == 4);
}

TEST_CASE("field construction validation") {
    CHECK_THROWS_AS(FieldSpec::prime(6), InvalidInput);
    CHECK_THROWS_AS(FieldSpec::ext(3, {1, 0, 0, 1}), NotIrreducible);  // x^3+1
    CHECK_THROWS_AS(FieldSpec::ext(3, {1, 0, 2}), InvalidInput);       // not monic
    CHECK_THROWS_AS(FieldSpec::prime(1048583), BoundExceeded);  // prime > 2^20
    CHECK(FieldSpec::ext(2, {1, 1, 1}).q() == 4);
}

TEST_CASE("extension field F_9") {
    // F_9 = F_3[i], i^2 = -1; element a+bi encoded as a + 3b
    FieldSpec F = FieldSpec::make(3, 2);
    Scalar i{3}, one{1};
    CHECK(F.mul(i, i).v == 2);                    // i^2 = -1
    CHECK(F.mul({4}, {4}).v == F.mul(F.add(one, i), F.add(one, i)).v);
    // (1+i)^2 = 2i
    CHECK(F.mul({4}, {4}).v == 6);
    CHECK(F.pow(i, 8).v == 1);
    CHECK(F.frobenius({4}, 1).v == F.pow({4}, 3).v);
    // the Frobenius fixes exactly F_3
    for (std::uint64_t a = 0; a < 9; ++a) {
        bool fixed = F.frobenius({a}, 1) == Scalar{a};
        CHECK(fixed == (a < 3));
    }
    auto r = F.residues({7});
    REQUIRE(r.size() == 2);
    CHECK(r[0] == 1);
    CHECK(r[1] == 2);
    CHECK(F.from_residues({1, 2}).v == 7);
}

TEST_CASE("generator and sqrt") {
    for (std::uint64_t p : {2, 3, 5, 13}) {
        FieldSpec F = FieldSpec::prime(p);
        Scalar g = F.generator();
        // g has full multiplicative order
        Scalar x = g;
        std::uint64_t ord = 1;
        while (x.v != 1) {
            x = F.mul(x, g);
            ++ord;
        }
        CHECK(ord == p - 1);
    }
    FieldSpec F13 = FieldSpec::prime(13);
    std::size_t squares = 0;
    for (std::uint64_t a = 1; a < 13; ++a) {
        auto s = F13.sqrt({a});
        if (s) {
            CHECK(F13.mul(*s, *s).v == a);
            ++squares;
        }
    }
    CHECK(squares == 6);
    // char 2: everything is a square
    FieldSpec F4 = FieldSpec::make(2, 2);
    for (std::uint64_t a = 0; a < 4; ++a) {
        auto s = F4.sqrt({a});
        REQUIRE(s.has_value());
        CHECK(F4.mul(*s, *s).v == a);
    }
}

TEST_CASE("matrix rank, inverse, kernel") {
    FieldSpec F = FieldSpec::prime(5);
    Mat m(3, 3);
    std::uint64_t vals[3][3] = {{1, 2, 3}, {2, 4, 1}, {0, 0, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Scalar{vals[i][j]};
    CHECK(mat_rank(m, F) == 2);
    CHECK(!mat_inverse(m, F));
    auto ker = kernel_basis(m, F);
    REQUIRE(ker.size() == 1);
    auto img = mat_vec(m, ker[0], F);
    for (auto x : img) CHECK(x.v == 0);

    Mat id = Mat::identity(3);
    auto inv = mat_inverse(id, F);
    REQUIRE(inv.has_value());
    CHECK(*inv == id);

    Mat a(2, 2);
    a.at(0, 0) = {2};
    a.at(0, 1) = {1};
    a.at(1, 0) = {1};
    a.at(1, 1) = {4};
    auto ainv = mat_inverse(a, F);
    REQUIRE(ainv.has_value());
    CHECK(mat_mul(a, *ainv, F) == Mat::identity(2));
}

TEST_CASE("linear solve") {
    FieldSpec F = FieldSpec::prime(3);
    Mat a(2, 3);
    a.at(0, 0) = {1};
    a.at(0, 1) = {1};
    a.at(0, 2) = {0};
    a.at(1, 0) = {0};
    a.at(1, 1) = {1};
    a.at(1, 2) = {1};
    auto sol = solve_linear(a, {Scalar{1}, Scalar{2}}, F);
    REQUIRE(sol.consistent);
    auto check = mat_vec(a, sol.particular, F);
    CHECK(check[0].v == 1);
    CHECK(check[1].v == 2);
    CHECK(sol.kernel.size() == 1);

    Mat b(2, 1);
    b.at(0, 0) = {1};
    b.at(1, 0) = {1};
    auto bad = solve_linear(b, {Scalar{1}, Scalar{2}}, F);
    CHECK(!bad.consistent);
}
