#include <doctest.h>

#include "tanaka/filtr.hpp"

using namespace tanaka;

namespace {

std::vector<std::size_t> dims_only(const MultiFiltration& F) {
    std::vector<std::size_t> d;
    for (const auto& [I, k] : graded_dims(F)) d.push_back(k);
    return d;
}

StandardFiltration filtration_of_degree(const Model& M, const ProlongationResult& R, int degree) {
    for (auto& sf : standard_filtrations(M, R))
        if (sf.degree == degree) return sf;
    FAIL("no standard filtration of degree " << degree);
    return {};
}

MultiFiltration chain_43() {
    // 0 in span{e_1, e_2} in Q^6 under the diagonal torus
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < 6; ++i) act.push_back(Matrix::elementary(6, 6, i, i));
    return MultiFiltration::chain(6, act, 0, {Subspace::coordinate({0, 1}, 6)});
}

} // namespace

TEST_SUITE("filtr") {

TEST_CASE("single and trivial filtrations") {
    MultiFiltration F = chain_43();
    CHECK(dims_only(F) == std::vector<std::size_t>{2, 4});
    CHECK(graded_object(F, {2}).dim == 4);
    CHECK(dims_only(MultiFiltration::trivial(5, {})) == std::vector<std::size_t>{5});
    CHECK_THROWS_AS(graded_object(F, {7}), std::out_of_range);
    CHECK(F.piece({-3}).is_zero());
    CHECK(F.piece({9}).is_full());
}

TEST_CASE("filtration of g_{-1} for m=2, n=3, r=1") {
    Model M = build_positive_model(2, 3, 1);
    ProlongationResult R = prolong(M.g0, M.gminus);
    StandardFiltration sf = filtration_of_degree(M, R, -1);
    std::map<std::string, std::size_t> by_label;
    auto g = graded_dims(sf.filtration);
    std::vector<std::string> labels;
    for (const auto& l : sf.labels)
        if (!l.empty()) labels.push_back(l);
    REQUIRE(g.size() == labels.size());
    for (std::size_t i = 0; i < g.size(); ++i) by_label[labels[i]] = g[i].second;
    CHECK(by_label["B1"] == 4);
    CHECK(by_label["B2"] == 2);
    CHECK(is_g0_reductive(sf.filtration, sf.radical));

    MultiFiltration D = dual_filtration(sf.filtration);
    for (const auto& [I, k] : graded_dims(D)) CHECK(graded_object(sf.filtration, {1 - I[0]}).dim == k);
    std::vector<std::size_t> ann;
    for (int i = D.lo()[0]; i <= D.hi()[0]; ++i) ann.push_back(D.piece({i}).dim());
    CHECK(ann == std::vector<std::size_t>{0, 4, 6});
}

TEST_CASE("standard filtrations are g0-reductive") {
    for (std::size_t r : {0, 2}) {
        Model M = build_positive_model(2, 4, r);
        ProlongationResult R = prolong(M.g0, M.gminus);
        auto all = standard_filtrations(M, R);
        CHECK(all.size() == 5);
        for (const auto& sf : all) CHECK(is_g0_reductive(sf.filtration, sf.radical));
    }
    Model Z = build_rank_zero_model(2, 2);
    auto all = standard_filtrations(Z, prolong(Z.g0, Z.gminus));
    CHECK(all.size() == 3);
    for (const auto& sf : all) CHECK(is_g0_reductive(sf.filtration, sf.radical));
}

TEST_CASE("reductivity failures") {
    Matrix N = Matrix::elementary(2, 2, 0, 1);
    CHECK_FALSE(is_g0_reductive(MultiFiltration::trivial(2, {N}), {N}));
    CHECK_FALSE(is_g0_reductive(MultiFiltration::chain(2, {N}, 0, {Subspace::coordinate({1}, 2)}), {}));
    CHECK(is_g0_reductive(MultiFiltration::chain(2, {N}, 0, {Subspace::coordinate({0}, 2)}), {N}));
    CHECK_THROWS(is_g0_reductive(MultiFiltration::trivial(2, {N}), {Matrix::identity(2)}));
}

TEST_CASE("duals") {
    MultiFiltration T = MultiFiltration::trivial(3, {});
    MultiFiltration DT = dual_filtration(T);
    CHECK(dims_only(DT) == std::vector<std::size_t>{3});
    MultiFiltration F = chain_43();
    MultiFiltration DD = dual_filtration(dual_filtration(F));
    CHECK(DD.lo() == F.lo());
    CHECK(DD.hi() == F.hi());
    for (const auto& I : F.box()) CHECK(DD.piece(I) == F.piece(I));
    for (std::size_t x = 0; x < F.g0_action().size(); ++x) CHECK(DD.g0_action()[x] == F.g0_action()[x]);
}

TEST_CASE("tensor products") {
    MultiFiltration F = chain_43();
    std::vector<Matrix> act3;
    for (std::size_t i = 0; i < 6; ++i) act3.push_back(Matrix(3, 3));
    MultiFiltration T = MultiFiltration::trivial(3, act3);
    CHECK(dims_only(tensor_filtration(F, T)) == std::vector<std::size_t>{6, 12});
    MultiFiltration one = MultiFiltration::trivial(1, std::vector<Matrix>(6, Matrix(1, 1)));
    CHECK(dims_only(tensor_filtration(F, one)) == dims_only(F));
    MultiFiltration G = MultiFiltration::chain(3, act3, 0, {Subspace::coordinate({0}, 3)});
    auto left = dims_only(tensor_filtration(tensor_filtration(F, G), T));
    auto right = dims_only(tensor_filtration(F, tensor_filtration(G, T)));
    CHECK(left == right);
    for (const auto& [I, k] : graded_dims(tensor_filtration(F, G)))
        CHECK(k == graded_object(F, {I[0]}).dim * graded_object(G, {I[1]}).dim);
}

TEST_CASE("sub and image filtrations") {
    MultiFiltration F = chain_43();
    MultiFiltration S = sub_filtration(F, Subspace::coordinate({1, 2, 3}, 6));
    CHECK(dims_only(S) == std::vector<std::size_t>{1, 2});
    Matrix proj(3, 6);
    for (std::size_t i = 0; i < 3; ++i) proj(i, i + 1) = 1;
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < 6; ++i) act.push_back(Matrix(3, 3));
    CHECK(dims_only(image_filtration(F, proj, act)) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("graded decomposition of C^{1,2}, positive m=2 n=4 r=2") {
    Model M = build_positive_model(2, 4, 2);
    ProlongationResult R = prolong(M.g0, M.gminus);
    SpencerDecomposition D = spencer_graded_decomposition(M, R, 1);
    CHECK(D.total == spencer_spaces(*R.tower, 1).dim2);
    CHECK(D.checks.ok());
}

TEST_CASE("rank-zero decomposition only meets Hom(A_i, B_9) at the level of g_1") {
    Model M = build_rank_zero_model(2, 1);
    ProlongationResult R = prolong(M.g0, M.gminus);
    SpencerDecomposition D = spencer_graded_decomposition(M, R, 3);
    CHECK(D.checks.ok());
    CHECK(D.total > 0);
    for (const auto& p : D.pieces) {
        CHECK(p.b_label == "B9");
        CHECK((p.a_label == "A1" || p.a_label == "A2" || p.a_label == "A4"));
    }
}

TEST_CASE("null-indexed pieces vanish when the form is nondegenerate") {
    Model M = build_positive_model(2, 2, 0);
    ProlongationResult R = prolong(M.g0, M.gminus);
    auto cat = module_catalog(M);
    for (const char* name : {"A2", "A4", "A5", "B2", "B5", "B6", "B8"}) CHECK(cat.at(name).dim == 0);
    for (int l = 1; l <= 4; ++l) {
        SpencerDecomposition D = spencer_graded_decomposition(M, R, l);
        CHECK(D.checks.ok());
        for (const auto& p : D.pieces)
            if (cat.at(p.a_label).dim == 0 || cat.at(p.b_label).dim == 0) CHECK(p.dim == 0);
    }
}

TEST_CASE("property: decompositions add up for both models") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::size_t r = n % 2; r + 2 <= n; r += 2) {
            Model M = build_positive_model(2, n, r);
            ProlongationResult R = prolong(M.g0, M.gminus);
            for (int l = 1; l <= 4; ++l) {
                SpencerDecomposition D = spencer_graded_decomposition(M, R, l);
                CHECK(D.total == D.c2_dim);
                CHECK(D.checks.ok());
            }
        }
    for (std::size_t n = 1; n <= 3; ++n) {
        Model M = build_rank_zero_model(2, n);
        ProlongationResult R = prolong(M.g0, M.gminus);
        for (int l = 1; l <= 4; ++l) CHECK(spencer_graded_decomposition(M, R, l).checks.ok());
    }
}

}
