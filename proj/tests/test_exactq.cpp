#include <doctest.h>

#include "tanaka/random.hpp"
#include "tanaka/subspace.hpp"

using namespace tanaka;

namespace {

Vector vec(std::initializer_list<long long> xs) {
    Vector v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t gens) {
    std::vector<Vector> g;
    for (std::size_t i = 0; i < gens; ++i) g.push_back(rng.vector(ambient, -3, 3));
    return Subspace::span(g, ambient);
}

} // namespace

TEST_SUITE("exactq") {

TEST_CASE("scalar arithmetic stays exact past 64 bits") {
    Scalar x(1, 3);
    CHECK((x + x + x).is_one());
    CHECK((Scalar(2, 4) == Scalar(1, 2)));
    CHECK(Scalar(-6, 4).to_string() == "-3/2");
    CHECK(Scalar(5).to_string() == "5");
    Scalar big(1);
    for (int i = 0; i < 40; ++i) big *= Scalar(1000003);
    Scalar back = big;
    for (int i = 0; i < 40; ++i) back /= Scalar(1000003);
    CHECK(back.is_one());
    CHECK(((big + Scalar(1)) - big).is_one());
    CHECK(Scalar::parse("7/21") == Scalar(1, 3));
    CHECK(Scalar::parse("-4") == Scalar(-4));
    CHECK(half() + half() == Scalar(1));
}

TEST_CASE("kernel oracles") {
    CHECK(kernel_basis(Matrix::identity(3)).is_zero());
    Subspace full = kernel_basis(Matrix(2, 3));
    CHECK(full.dim() == 3);
    CHECK(full.is_full());
    Subspace k = kernel_basis(Matrix{{1, 2}, {2, 4}});
    CHECK(k == Subspace::span({vec({-2, 1})}, 2));
    CHECK(k.dim() == 1);
}

TEST_CASE("intersection oracles") {
    Rng rng(5);
    Subspace S = random_subspace(rng, 5, 3);
    CHECK(intersect(S, S) == S);
    CHECK(intersect(Subspace::coordinate({0, 1}, 4), Subspace::coordinate({2, 3}, 4)).is_zero());
    CHECK(intersect(Subspace::coordinate({0, 1}, 3), Subspace::coordinate({1, 2}, 3)) ==
          Subspace::coordinate({1}, 3));
}

TEST_CASE("containment oracles") {
    Rng rng(9);
    Subspace S = random_subspace(rng, 4, 2);
    CHECK(contains(S, Subspace::zero(4)));
    CHECK(contains(S, S));
    CHECK_FALSE(contains(Subspace::coordinate({0}, 2), Subspace::span({vec({1, 1})}, 2)));
}

TEST_CASE("canonical form does not depend on the spanning set") {
    Subspace a = Subspace::span({vec({1, 2, 3}), vec({0, 1, 1})}, 3);
    Subspace b = Subspace::span({vec({1, 3, 4}), vec({2, 5, 7}), vec({1, 2, 3})}, 3);
    CHECK(a == b);
    CHECK(a.basis().cols() == 2);
}

TEST_CASE("solve, complement and annihilator") {
    Matrix A{{1, 1, 0}, {0, 1, 1}};
    auto x = solve(A, vec({2, 3}));
    REQUIRE(x);
    CHECK(A * *x == vec({2, 3}));
    CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, vec({1, 2})));
    Subspace sub = Subspace::coordinate({0}, 3), sup = Subspace::coordinate({0, 1}, 3);
    Subspace c = complement_in(sub, sup);
    CHECK(c.dim() == 1);
    CHECK(sum(sub, c) == sup);
    Subspace ann = annihilator(Subspace::span({vec({1, 1, 0})}, 3));
    CHECK(ann.dim() == 2);
    for (const auto& f : ann.vectors()) CHECK(dot(f, vec({1, 1, 0})).is_zero());
}

TEST_CASE("property: kernel vectors are exact zeros of the matrix") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng.integer(0, 5), c = 1 + rng.integer(0, 6);
        Matrix M(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) M(i, j) = Scalar(rng.integer(-2, 2), 1 + rng.integer(0, 2));
        Subspace K = kernel_basis(M);
        CHECK(K.dim() + rank(M) == c);
        for (const auto& v : K.vectors()) CHECK(is_zero(M * v));
    }
}

TEST_CASE("property: dimension formula for sum and intersection") {
    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.integer(0, 5);
        Subspace a = random_subspace(rng, n, rng.integer(0, 4)), b = random_subspace(rng, n, rng.integer(0, 4));
        CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
        CHECK(contains(sum(a, b), a));
        CHECK(contains(a, intersect(a, b)));
        CHECK(annihilator(annihilator(a)) == a);
    }
}

TEST_CASE("property: coordinates reconstruct members") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Subspace S = random_subspace(rng, 6, 3);
        Vector coef = rng.vector(S.dim(), -4, 4);
        Vector v(6);
        for (std::size_t i = 0; i < S.dim(); ++i) axpy(v, coef[i], S.vector(i));
        auto c = S.coordinates(v);
        REQUIRE(c);
        CHECK(*c == coef);
        CHECK(is_zero(S.reduce(v)));
    }
}

}
