#include <doctest.h>

#include "tanaka/grass.hpp"

using namespace tanaka;

namespace {

Subspace coords(std::initializer_list<std::size_t> idx, std::size_t n) { return Subspace::coordinate(idx, n); }

} // namespace

TEST_SUITE("grass") {

TEST_CASE("stratum index") {
    PresymplecticSpace S4 = PresymplecticSpace::normal_form(2, 0);
    CHECK(stratum_index(coords({0, 1}, 4), S4) == std::optional<std::size_t>(0));
    PresymplecticSpace P = PresymplecticSpace::with_nullity(7, 3);
    CHECK(stratum_index(coords({4, 5}, 7), P) == std::optional<std::size_t>(2));
    CHECK_FALSE(stratum_index(coords({0, 2}, 4), S4));
    CHECK_FALSE(is_isotropic(coords({0, 2}, 4), S4));
}

TEST_CASE("stratum dimensions") {
    CHECK(stratum_dim(2, 7, 1, 0) == 9);
    CHECK(stratum_dim(2, 7, 1, 1) == 5);
    CHECK(stratum_dim(2, 6, 2, 2) == 0);
    CHECK(stratum_dim(3, 9, 3, 3) == 0);
    CHECK_THROWS(stratum_dim(1, 6, 0, 0));
    CHECK_THROWS(stratum_dim(2, 7, 0, 0));
    CHECK_THROWS(stratum_dim(2, 7, 1, 2));
}

TEST_CASE("property: closed formula equals the fiber-bundle count") {
    for (long long dimv = 4; dimv <= 12; ++dimv)
        for (long long nw = 0; nw <= dimv; ++nw)
            for (long long m = 2; 2 * m <= dimv - nw; ++m)
                for (long long k = 0; k <= std::min(m, nw); ++k) {
                    if (!stratum_params_admissible(m, dimv, nw, k)) continue;
                    CHECK(stratum_dim(m, dimv, nw, k) == stratum_dim_decomposition(m, dimv, nw, k));
                }
}

TEST_CASE("perpendicular spaces") {
    PresymplecticSpace S4 = PresymplecticSpace::normal_form(2, 0);
    CHECK(perp(Subspace::zero(4), S4).is_full());
    PresymplecticSpace P = PresymplecticSpace::with_nullity(5, 1);
    CHECK(perp(Subspace::full(5), P) == null_space(P));
    CHECK(perp(coords({0}, 4), S4) == coords({0, 1, 3}, 4));
}

TEST_CASE("line criterion on hand-built flags") {
    PresymplecticSpace S4 = PresymplecticSpace::normal_form(2, 0);
    IsotropicFlag yes{S4, coords({0}, 4), coords({0, 1, 3}, 4)};
    CHECK(is_line(yes));
    CHECK(pencil_oracle(yes).all_isotropic);
    IsotropicFlag no{S4, coords({0}, 4), coords({0, 1, 2}, 4)};
    CHECK_FALSE(is_line(no));
    CHECK_FALSE(pencil_oracle(no).all_isotropic);
    PresymplecticSpace P = PresymplecticSpace::with_nullity(6, 2);
    IsotropicFlag null_flag{P, coords({4}, 6), coords({0, 4, 5}, 6)};
    CHECK(is_line(null_flag));
    CHECK(pencil_oracle(null_flag).all_isotropic);
    IsotropicFlag bad{S4, coords({0, 2}, 4), coords({0, 1, 2, 3}, 4)};
    CHECK_THROWS(validate_flag(bad));
}

TEST_CASE("property: random flags agree with the pencil oracle") {
    Rng rng(21);
    for (std::size_t dimv = 4; dimv <= 8; ++dimv)
        for (std::size_t nw = dimv % 2; nw + 4 <= dimv; nw += 2) {
            PresymplecticSpace P = PresymplecticSpace::with_nullity(dimv, nw);
            for (int s = 0; s < 10; ++s) {
                IsotropicFlag F = random_flag(P, 2, rng);
                CHECK_NOTHROW(validate_flag(F));
                CHECK(is_line(F) == pencil_oracle(F).all_isotropic);
            }
        }
}

TEST_CASE("sigma points") {
    PresymplecticSpace P = PresymplecticSpace::with_nullity(7, 1);
    Subspace W = sigma_point(coords({6}, 7), coords({0}, 6), P);
    CHECK(W.dim() == 2);
    CHECK(stratum_index(W, P) == std::optional<std::size_t>(1));
    Subspace W0 = sigma_point(Subspace::zero(7), coords({0, 1}, 6), P);
    CHECK(stratum_index(W0, P) == std::optional<std::size_t>(0));
    PresymplecticSpace Q = PresymplecticSpace::with_nullity(6, 2);
    Subspace Wm = sigma_point(coords({4, 5}, 6), Subspace::zero(4), Q);
    CHECK(stratum_index(Wm, Q) == std::optional<std::size_t>(2));
    CHECK_THROWS(sigma_point(coords({0}, 7), coords({1}, 6), P));
}

TEST_CASE("extension of the form") {
    PresymplecticSpace S = PresymplecticSpace::normal_form(2, 0);
    CHECK(extend_omega(coords({0, 1}, 4), S).omega() == S.omega());
    PresymplecticSpace P = PresymplecticSpace::with_nullity(6, 2);
    Subspace W = coords({0, 1}, 6);
    PresymplecticSpace E = extend_omega(W, P);
    CHECK(E.nullity() == 0);
    for (std::size_t i = 0; i < 2; ++i) CHECK(perp(coords({i}, 6), E) == perp(coords({i}, 6), P));
    CHECK(perp(W, E) == perp(W, P));
    CHECK_THROWS(extend_omega(coords({4}, 6), P));
}

}
