#include <doctest.h>

#include "tanaka/models.hpp"
#include "tanaka/zvariety.hpp"

using namespace tanaka;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Vector nonzero(Rng& rng, std::size_t n) {
    Vector v = rng.vector(n, -3, 3);
    if (is_zero(v)) v[0] = 1;
    return v;
}

} // namespace

TEST_SUITE("zvariety") {

TEST_CASE("embedding") {
    WLayout L(2, 2);
    ZPoint p = z_embed(L, e(2, 0), e(2, 0), Scalar(1));
    Vector want = add(L.tensor(e(2, 0), e(2, 0)), L.product(e(2, 0), e(2, 0)));
    CHECK(p.w == want);
    CHECK(z_embed(L, e(2, 0), Vector(2), Scalar(1)).w == L.product(e(2, 0), e(2, 0)));
    ZPoint q = z_embed(L, add(e(2, 0), e(2, 1)), e(2, 0), Scalar(0));
    CHECK(q.in_e());
    CHECK(L.uq_block().contains(q.w));
    CHECK_THROWS(z_embed(L, Vector(2), e(2, 0), Scalar(1)));
}

TEST_CASE("tangent space at (e_1, f_1, 1)") {
    WLayout L(2, 2);
    ZTangentReport r = z_tangent(L, z_embed(L, e(2, 0), e(2, 0), Scalar(1)));
    CHECK(r.tangent.dim() == 4);
    CHECK(r.intersection_with_uq == Subspace::span({L.tensor(e(2, 0), e(2, 0)), L.tensor(e(2, 0), e(2, 1))}, L.dim()));
    CHECK(r.epsilon_image == Subspace::coordinate({L.idx.sym(0, 0), L.idx.sym(0, 1)}, L.idx.sym_dim()));
    CHECK(r.checks.ok());
    CHECK_THROWS(z_tangent(L, z_embed(L, e(2, 0), e(2, 0), Scalar(0))));
}

TEST_CASE("property: tangent sequence and cone invariance") {
    Rng rng(31);
    for (std::size_t m = 2; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            WLayout L(m, n);
            for (int s = 0; s < 10; ++s) {
                Vector u = nonzero(rng, m), q = rng.vector(n, -3, 3);
                Scalar t(1 + rng.integer(0, 3));
                ZTangentReport r = z_tangent(L, z_embed(L, u, q, t));
                CHECK(r.intersection_with_uq.dim() == n);
                CHECK(r.tangent.dim() == m + n);
                CHECK(r.epsilon_image.dim() == m);
                const Scalar lambda(-2);
                CHECK(z_tangent(L, z_embed(L, u, scale(lambda, q), lambda * t)).tangent == r.tangent);
            }
        }
}

TEST_CASE("beta") {
    WLayout L(2, 2);
    CHECK(beta_map(L, z_embed(L, e(2, 0), e(2, 0), Scalar(0))) == e(4, 0));
    Vector fe{Scalar(1), Scalar(0), Scalar(1), Scalar(0)};
    CHECK(beta_map(L, z_embed(L, e(2, 0), e(2, 0), Scalar(1))) == fe);
}

TEST_CASE("property: beta intertwines the Hom(U, Q) action") {
    Rng rng(37);
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t m = 2;
        WLayout L(m, n);
        Model M = build_rank_zero_model(m, n);
        for (int s = 0; s < 20; ++s) {
            Matrix phi(n, m);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t i = 0; i < m; ++i) phi(a, i) = Scalar(rng.integer(-2, 2));
            ZPoint p = z_embed(L, nonzero(rng, m), nonzero(rng, n), Scalar(rng.integer(0, 2)));
            // the group element exp(phi) acts on W as 1 + phi
            Matrix g = Matrix::identity(L.dim()) + M.represent(Matrix(), Matrix(), phi);
            CHECK(beta_of_w(L, g * p.w) == phi_on_qu(L, phi, beta_map(L, p)));
            CHECK(beta_of_w(L, p.w) == beta_map(L, p));
        }
    }
}

TEST_CASE("second fundamental form at a smooth point") {
    WLayout L(2, 2);
    SecondFundamentalForm II = second_fundamental_form(L, z_embed(L, e(2, 0), e(2, 0), Scalar(1)));
    CHECK(II.normal_dim == 3);
    CHECK(II.rank == 3);
    CHECK(II.locus_bound == II.t_alpha);
    CHECK_FALSE(II.t_beta);
    CHECK(II.checks.ok());
}

TEST_CASE("second fundamental form on E") {
    WLayout L(2, 2);
    SecondFundamentalForm II = second_fundamental_form(L, z_embed(L, e(2, 0), e(2, 1), Scalar(0)));
    REQUIRE(II.t_beta);
    CHECK(II.locus_bound.contains(II.t_alpha));
    CHECK(II.locus_bound.contains(*II.t_beta));
    CHECK_FALSE(II.t_alpha.contains(*II.t_beta));
    CHECK(II.checks.ok());
}

TEST_CASE("property: II rank and base locus at random points") {
    Rng rng(41);
    for (std::size_t m = 2; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            WLayout L(m, n);
            for (int s = 0; s < 5; ++s) {
                SecondFundamentalForm II =
                    second_fundamental_form(L, z_embed(L, nonzero(rng, m), nonzero(rng, n), Scalar(rng.integer(1, 3))));
                CHECK(II.rank == L.dim() - m - n);
                CHECK(II.locus_bound == II.t_alpha);
            }
        }
}

TEST_CASE("symmetries of the cone") {
    for (std::size_t n = 1; n <= 2; ++n) {
        Model M = build_rank_zero_model(2, n);
        SymmetrySampler S(2, n);
        for (const auto& X : M.g0.basis()) CHECK(symmetry_check(S, X));
        Rng rng(43);
        std::size_t rejected = 0;
        for (int s = 0; s < 10; ++s) {
            Matrix X(S.layout().dim(), S.layout().dim());
            for (std::size_t i = 0; i < X.rows(); ++i)
                for (std::size_t j = 0; j < X.cols(); ++j) X(i, j) = Scalar(rng.integer(-1, 1));
            if (M.g0.contains(X)) continue;
            rejected += !symmetry_check(S, X);
        }
        CHECK(rejected >= 1);
        Matrix swap_flip(S.layout().dim(), S.layout().dim());
        swap_flip(S.layout().uq(0, 0), S.layout().sym(0, 0)) = 1;
        CHECK_FALSE(symmetry_check(S, swap_flip));
    }
}

}
