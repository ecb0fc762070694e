#include <doctest.h>

#include "tanaka/models.hpp"
#include "tanaka/random.hpp"

using namespace tanaka;

namespace {

std::vector<std::size_t> grading_dims(const Model& M) {
    auto [V, grading] = model_vector_space(M);
    std::vector<std::size_t> d;
    for (const auto& [k, S] : sp_grading(V, grading)) d.push_back(S.dim());
    return d;
}

Status status_of(const Report& r, const std::string& name) {
    const Check* c = r.find(name);
    REQUIRE(c != nullptr);
    return c->status;
}

} // namespace

TEST_SUITE("glie") {

TEST_CASE("null spaces") {
    CHECK(null_space(PresymplecticSpace::normal_form(2, 0)).is_zero());
    CHECK(null_space(PresymplecticSpace(Matrix(2, 2))).is_full());
    CHECK(null_space(PresymplecticSpace::normal_form(2, 1)) == Subspace::coordinate({4}, 5));
    CHECK(PresymplecticSpace::with_nullity(7, 1).nullity() == 1);
}

TEST_CASE("dimension of the algebra preserving a form") {
    CHECK(sp_algebra(PresymplecticSpace::with_nullity(6, 0)).dim() == 21);
    CHECK(sp_algebra(PresymplecticSpace::with_nullity(7, 1)).dim() == 28);
    CHECK(sp_algebra(PresymplecticSpace(Matrix(3, 3))).dim() == 9);
    for (std::size_t dim = 1; dim <= 7; ++dim)
        for (std::size_t r = dim % 2; r <= dim; r += 2)
            CHECK(sp_algebra(PresymplecticSpace::with_nullity(dim, r)).dim() == sp_dimension_formula(dim, r));
}

TEST_CASE("graded pieces of sp for the positive model") {
    CHECK(grading_dims(build_positive_model(2, 2, 0)) == std::vector<std::size_t>{3, 4, 7, 4, 3});
}

TEST_CASE("graded pieces of sp for the rank-zero model") {
    // dim V = 5 with nullity 1 gives dim sp = 4 + 10 + 1 = 15
    auto d = grading_dims(build_rank_zero_model(2, 1));
    CHECK(d == std::vector<std::size_t>{5, 7, 3});
    CHECK(sp_dimension_formula(5, 1) == 15);
}

TEST_CASE("property: graded pieces add up to the whole algebra") {
    for (std::size_t m = 2; m <= 3; ++m)
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t r = 0; r + 2 <= n; ++r) {
                if ((n - r) % 2) continue;
                std::size_t total = 0;
                for (auto x : grading_dims(build_positive_model(m, n, r))) total += x;
                CHECK(total == sp_dimension_formula(2 * m + n, r));
            }
    for (std::size_t m = 2; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            std::size_t total = 0;
            for (auto x : grading_dims(build_rank_zero_model(m, n))) total += x;
            CHECK(total == sp_dimension_formula(2 * m + n, n));
        }
}

TEST_CASE("Lie checks on g_- of the models") {
    Model P = build_positive_model(2, 2, 0);
    CHECK(check_graded_lie(P.gminus).ok());
    Model Z = build_rank_zero_model(2, 1);
    CHECK(Z.gminus.is_abelian());
    CHECK(check_graded_lie(Z.gminus).ok());
}

TEST_CASE("a one-sided constant breaks antisymmetry") {
    Model P = build_positive_model(2, 2, 0);
    GradedLieAlgebra L = P.gminus;
    const std::size_t a = P.offset_uq() + P.idx.uq(0, 0), b = P.offset_uq() + P.idx.uq(1, 1);
    L.set_constant(a, b, P.offset_sym() + P.idx.sym(0, 1), Scalar(2));
    Report r = check_graded_lie(L);
    CHECK(status_of(r, "antisymmetry") == Status::fail);
    CHECK_FALSE(r.ok());
}

TEST_CASE("corrupted constants break Jacobi on the assembled algebra") {
    Model P = build_positive_model(2, 2, 0);
    ProlongationResult R = prolong(P.g0, P.gminus);
    for (std::size_t which = 0; which < 5; ++which) {
        Report r = check_graded_lie(with_corrupted_constant(R.full_algebra, which));
        CHECK(status_of(r, "antisymmetry") == Status::pass);
        CHECK(status_of(r, "jacobi") == Status::fail);
    }
}

TEST_CASE("property: rank of a form is even") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.integer(0, 5);
        Matrix w(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                w(i, j) = Scalar(rng.integer(-2, 2));
                w(j, i) = -w(i, j);
            }
        PresymplecticSpace P(w);
        CHECK(P.rank() % 2 == 0);
        CHECK((P.dim() - P.nullity()) % 2 == 0);
    }
}

}
