#include "tanaka/models.hpp"

#include <stdexcept>

namespace tanaka {

std::string kind_name(ModelKind k) { return k == ModelKind::positive ? "positive" : "rank-zero"; }

std::size_t ModelIndex::sym(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    // monomials e_i e_j, i <= j, in lexicographic order
    return i * (2 * m - i + 1) / 2 + (j - i);
}

std::pair<std::size_t, std::size_t> ModelIndex::sym_pair(std::size_t k) const {
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            if (sym(i, j) == k) return {i, j};
    throw std::out_of_range("sym_pair: index out of range");
}

std::size_t Model::offset_uq() const { return kind == ModelKind::positive ? idx.sym_dim() : 0; }
std::size_t Model::offset_sym() const { return kind == ModelKind::positive ? 0 : idx.uq_dim(); }

Matrix Model::represent(const Matrix& a, const Matrix& c, const Matrix& phi) const {
    const std::size_t N = idx.uq_dim() + idx.sym_dim();
    Matrix M(N, N);
    const std::size_t ouq = offset_uq(), osym = offset_sym();
    const bool has_a = a.rows() == m, has_c = c.rows() == n, has_phi = phi.rows() == n && phi.cols() == m;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t p = 0; p < n; ++p) {
            const std::size_t col = ouq + idx.uq(i, p);
            if (has_a)
                for (std::size_t k = 0; k < m; ++k)
                    if (!a(k, i).is_zero()) M(ouq + idx.uq(k, p), col) += a(k, i);
            if (has_c)
                for (std::size_t b = 0; b < n; ++b)
                    if (!c(b, p).is_zero()) M(ouq + idx.uq(i, b), col) += c(b, p);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const std::size_t col = osym + idx.sym(i, j);
            if (has_a)
                for (std::size_t k = 0; k < m; ++k) {
                    if (!a(k, i).is_zero()) M(osym + idx.sym(k, j), col) += a(k, i);
                    if (!a(k, j).is_zero()) M(osym + idx.sym(i, k), col) += a(k, j);
                }
            if (has_phi)
                for (std::size_t b = 0; b < n; ++b) {
                    // (1/2) e_i (x) phi(e_j) + (1/2) e_j (x) phi(e_i)
                    if (!phi(b, j).is_zero()) M(ouq + idx.uq(i, b), col) += half() * phi(b, j);
                    if (!phi(b, i).is_zero()) M(ouq + idx.uq(j, b), col) += half() * phi(b, i);
                }
        }
    return M;
}

std::vector<Matrix> hom_uq_basis(std::size_t m, std::size_t n) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < n; ++a) out.push_back(Matrix::elementary(n, m, a, i));
    return out;
}

std::vector<Matrix> sym2_dual_basis(std::size_t m) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Matrix B(m, m);
            B(i, j) = 1;
            B(j, i) = 1;
            out.push_back(std::move(B));
        }
    return out;
}

namespace {

std::string idx1(std::size_t i) { return std::to_string(i + 1); }

std::vector<GradedComponent> uq_sym_labels(const ModelIndex& ix, bool split) {
    std::vector<std::string> uq, sym;
    for (std::size_t i = 0; i < ix.m; ++i)
        for (std::size_t a = 0; a < ix.n; ++a) uq.push_back("e" + idx1(i) + "f" + idx1(a));
    for (std::size_t i = 0; i < ix.m; ++i)
        for (std::size_t j = i; j < ix.m; ++j) sym.push_back("e" + idx1(i) + "e" + idx1(j));
    if (split) return {GradedComponent{-2, sym.size(), sym}, GradedComponent{-1, uq.size(), uq}};
    uq.insert(uq.end(), sym.begin(), sym.end());
    return {GradedComponent{-1, uq.size(), uq}};
}

} // namespace

Model build_positive_model(std::size_t m, std::size_t n, std::size_t r) {
    if (m < 2) throw std::invalid_argument("positive model needs dim U >= 2 (m >= 2)");
    if (n < 1) throw std::invalid_argument("positive model needs dim Q >= 1 (n >= 1)");
    if (r > n) throw std::invalid_argument("positive model needs nullity <= n");
    if ((n - r) % 2 != 0) throw std::invalid_argument("positive model needs n - nullity even");
    if (n - r < 2) throw std::invalid_argument("positive model needs a nonzero form (n - nullity >= 2)");
    Model M;
    M.kind = ModelKind::positive;
    M.m = m;
    M.n = n;
    M.nullity = r;
    M.idx = {m, n};
    M.q_space = PresymplecticSpace::with_nullity(n, r);
    const Matrix& w = M.q_space.omega();

    GradedLieAlgebra L(GradedVectorSpace(uq_sym_labels(M.idx, true)));
    const std::size_t N = L.dim(), ouq = M.offset_uq();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t b = 0; b < n; ++b) {
                    if (w(a, b).is_zero()) continue;
                    Vector v(N);
                    v[M.offset_sym() + M.idx.sym(i, j)] = w(a, b);
                    L.set_bracket(ouq + M.idx.uq(i, a), ouq + M.idx.uq(j, b), v);
                }
    M.gminus = std::move(L);

    // gl(U), then sp(Q) adapted to Q = Q_flat + Null: sp of the flat part, Hom(Q_flat, Null), gl(Null)
    const std::size_t s2 = n - r;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            M.g0_elements.push_back({"glU:E" + idx1(i) + idx1(j), Matrix::elementary(m, m, i, j), Matrix(n, n), {}});
    MatrixLieAlgebra spflat = sp_algebra(PresymplecticSpace::normal_form(s2 / 2, 0));
    for (std::size_t k = 0; k < spflat.dim(); ++k) {
        Matrix c(n, n);
        c.set_block(0, 0, spflat.element(k));
        M.g0_elements.push_back({"spQflat#" + std::to_string(k + 1), Matrix(m, m), c, {}});
    }
    for (std::size_t z = 0; z < r; ++z)
        for (std::size_t j = 0; j < s2; ++j)
            M.g0_elements.push_back(
                {"rad:E" + idx1(s2 + z) + idx1(j), Matrix(m, m), Matrix::elementary(n, n, s2 + z, j), {}});
    for (std::size_t z = 0; z < r; ++z)
        for (std::size_t y = 0; y < r; ++y)
            M.g0_elements.push_back(
                {"glNull:E" + idx1(s2 + z) + idx1(s2 + y), Matrix(m, m), Matrix::elementary(n, n, s2 + z, s2 + y), {}});
    std::vector<Matrix> reps;
    for (const auto& e : M.g0_elements) reps.push_back(M.represent(e.a, e.c, e.phi));
    M.g0 = MatrixLieAlgebra(N, std::move(reps));
    return M;
}

Model build_rank_zero_model(std::size_t m, std::size_t n) {
    if (m < 2) throw std::invalid_argument("rank-zero model needs dim U >= 2 (m >= 2)");
    if (n < 1) throw std::invalid_argument("rank-zero model needs dim Q >= 1 (n >= 1)");
    Model M;
    M.kind = ModelKind::rank_zero;
    M.m = m;
    M.n = n;
    M.nullity = n;
    M.idx = {m, n};
    M.q_space = PresymplecticSpace(Matrix(n, n));
    M.gminus = GradedLieAlgebra(GradedVectorSpace(uq_sym_labels(M.idx, false)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < n; ++a)
            M.g0_elements.push_back({"phi:E" + idx1(a) + idx1(i), {}, {}, Matrix::elementary(n, m, a, i)});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            M.g0_elements.push_back({"glU:E" + idx1(i) + idx1(j), Matrix::elementary(m, m, i, j), {}, {}});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            M.g0_elements.push_back({"glQ:E" + idx1(a) + idx1(b), {}, Matrix::elementary(n, n, a, b), {}});
    std::vector<Matrix> reps;
    for (const auto& e : M.g0_elements) reps.push_back(M.represent(e.a, e.c, e.phi));
    M.g0 = MatrixLieAlgebra(M.gminus.dim(), std::move(reps));
    return M;
}

namespace {

// Symbol in the degree-k cochains from the value on each basis vector e_s of g_{-j}.
template <class F>
Vector make_symbol(const Tower& tower, int k, F value) {
    Vector sym(tower.cochain1_dim(k));
    for (const auto& b : tower.cochain1_blocks(k))
        for (std::size_t s = 0; s < b.source_dim; ++s) {
            Vector v = value(b.j, s);
            if (v.size() != b.target_dim) throw std::logic_error("make_symbol: value has the wrong length");
            for (std::size_t t = 0; t < b.target_dim; ++t) sym[b.offset + s * b.target_dim + t] = v[t];
        }
    return sym;
}

Vector g0_coords(const Model& M, const Tower& tower, const Matrix& a, const Matrix& c, const Matrix& phi) {
    auto x = tower.piece(0).coordinates(tower.g0_symbol(M.represent(a, c, phi)));
    if (!x) throw std::logic_error("element is not in g_0");
    return *x;
}

// h^U_{w(x)p} + h^Q_{w(x)p} for w = e_i, p = f_p
std::pair<Matrix, Matrix> h_wp(const Model& M, const Matrix& h, std::size_t i, std::size_t p) {
    const std::size_t m = M.m, n = M.n;
    const Matrix& w = M.q_space.omega();
    Matrix aU(m, m), cQ(n, n);
    for (std::size_t k = 0; k < m; ++k) {
        Scalar s;
        for (std::size_t b = 0; b < n; ++b) s += h(b, k) * w(b, p);
        if (!s.is_zero()) aU(i, k) += half() * s;
    }
    for (std::size_t c = 0; c < n; ++c) {
        Scalar s;
        for (std::size_t b = 0; b < n; ++b) s += h(b, i) * w(b, c);
        if (!s.is_zero()) cQ(p, c) += half() * s;
        if (!w(p, c).is_zero())
            for (std::size_t b = 0; b < n; ++b) cQ(b, c) += half() * w(p, c) * h(b, i);
    }
    return {aU, cQ};
}

// B_{v.w}(u) = (1/2) B(u,v) w + (1/2) B(u,w) v with v = e_i, w = e_j
Matrix b_vw(const Matrix& B, std::size_t i, std::size_t j) {
    const std::size_t m = B.rows();
    Matrix a(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        a(j, k) += half() * B(k, i);
        a(i, k) += half() * B(k, j);
    }
    return a;
}

// B_{w(x)p}(u) = B(u, w) p with w = e_i
Matrix b_wp(const Matrix& B, std::size_t n, std::size_t i, std::size_t p) {
    Matrix h(n, B.rows());
    for (std::size_t k = 0; k < B.rows(); ++k) h(p, k) = B(k, i);
    return h;
}

Vector pi1_symbol(const Model& M, const Tower& tower, const Matrix& h) {
    const auto& ix = M.idx;
    return make_symbol(tower, 1, [&](int j, std::size_t s) {
        if (j == 1) {
            auto [aU, cQ] = h_wp(M, h, s / ix.n, s % ix.n);
            return g0_coords(M, tower, aU, cQ, {});
        }
        auto [v, w] = ix.sym_pair(s);
        // h_{v.w} = (1/2) w (x) h(v) + (1/2) v (x) h(w)
        Vector out(ix.uq_dim());
        for (std::size_t b = 0; b < ix.n; ++b) {
            out[ix.uq(w, b)] += half() * h(b, v);
            out[ix.uq(v, b)] += half() * h(b, w);
        }
        return out;
    });
}

std::optional<Vector> pi2_symbol_positive(const Model& M, const Tower& tower, const Matrix& B) {
    const auto& ix = M.idx;
    bool ok = true;
    Vector sym = make_symbol(tower, 2, [&](int j, std::size_t s) {
        if (j == 1) {
            Vector f = pi1_symbol(M, tower, b_wp(B, ix.n, s / ix.n, s % ix.n));
            auto x = tower.piece(1).coordinates(f);
            if (!x) {
                ok = false;
                return Vector(tower.dim(1));
            }
            return *x;
        }
        auto [v, w] = ix.sym_pair(s);
        return g0_coords(M, tower, b_vw(B, v, w), {}, {});
    });
    if (!ok) return std::nullopt;
    return sym;
}

Vector pi_rank_zero(const Model& M, const Tower& tower, const Matrix& B) {
    const auto& ix = M.idx;
    return make_symbol(tower, 1, [&](int, std::size_t s) {
        if (s < ix.uq_dim()) return g0_coords(M, tower, {}, {}, b_wp(B, ix.n, s / ix.n, s % ix.n));
        auto [v, w] = ix.sym_pair(s - ix.uq_dim());
        return g0_coords(M, tower, b_vw(B, v, w), {}, {});
    });
}

Matrix act_hom(const G0Element& X, const Matrix& h) {
    // (a, c) . h = c h - h a
    Matrix r(h.rows(), h.cols());
    if (X.c.rows() == h.rows()) r += X.c * h;
    if (X.a.rows() == h.cols()) r -= h * X.a;
    return r;
}

Matrix act_sym2(const G0Element& X, const Matrix& B) {
    // (a . B)(u, v) = -B(a u, v) - B(u, a v)
    Matrix r(B.rows(), B.cols());
    if (X.a.rows() == B.rows()) {
        r -= X.a.transpose() * B;
        r -= B * X.a;
    }
    return r;
}

} // namespace

PiCandidates closed_form_pi(const Model& M, const Tower& tower) {
    PiCandidates out;
    if (M.kind == ModelKind::positive) {
        for (const auto& h : hom_uq_basis(M.m, M.n)) out.pi1.push_back(pi1_symbol(M, tower, h));
        out.g1 = Subspace::span(out.pi1, tower.cochain1_dim(1));
        out.pi2_level = 2;
        if (tower.computed_max() < 1) {
            out.note = "degree-1 piece not computed";
            return out;
        }
        std::vector<Vector> imgs;
        for (const auto& B : sym2_dual_basis(M.m)) {
            auto s = pi2_symbol_positive(M, tower, B);
            if (!s) {
                out.note = "B_{w(x)p} is not in the computed degree-1 piece";
                return out;
            }
            imgs.push_back(*s);
        }
        out.pi2 = std::move(imgs);
        out.g2 = Subspace::span(out.pi2, tower.cochain1_dim(2));
    } else {
        out.pi2_level = 1;
        for (const auto& B : sym2_dual_basis(M.m)) out.pi2.push_back(pi_rank_zero(M, tower, B));
        out.g1 = Subspace::span(out.pi2, tower.cochain1_dim(1));
        if (tower.computed_max() >= 2 || tower.terminated()) out.g2 = Subspace::zero(tower.cochain1_dim(2));
    }
    return out;
}

namespace {

std::string dims_text(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
    return s + ")";
}

// d(X.f) = X.(d f) for every g_0 basis element X and a sample of basis cochains f
void check_boundary_equivariance(const Tower& tower, int level, Report& rep) {
    SpencerSpaces S = spencer_spaces(tower, level);
    Matrix D = spencer_boundary(tower, S);
    const std::size_t stride = level == 1 ? 1 : std::max<std::size_t>(1, S.dim1 / 40);
    std::size_t bad = 0, tested = 0;
    std::string witness;
    for (std::size_t x = 0; x < tower.g0().dim(); ++x)
        for (std::size_t f = 0; f < S.dim1; f += stride) {
            Vector ef = unit_vector(S.dim1, f);
            Vector lhs(S.dim2);
            Vector xf = act_on_cochain1(tower, S, x, ef);
            for (std::size_t c = 0; c < S.dim1; ++c)
                if (!xf[c].is_zero())
                    for (std::size_t r = 0; r < S.dim2; ++r)
                        if (!D(r, c).is_zero()) lhs[r].sub_mul(-xf[c], D(r, c));
            Vector rhs = act_on_cochain2(tower, S, x, D.col(f));
            ++tested;
            if (lhs != rhs && bad++ == 0) witness = "g0 basis " + std::to_string(x) + ", cochain " + std::to_string(f);
        }
    rep.add("prolong.boundary_equivariant.level" + std::to_string(level), bad == 0, "0 violations",
            std::to_string(bad) + " violations in " + std::to_string(tested) + " pairs" +
                (bad ? ", first " + witness : std::string()),
            "the Spencer boundary commutes with the g_0-action");
}

} // namespace

ProlongationVerification verify_prolongation_theorem(const Model& M, VerifyOptions opts) {
    ProlongationVerification out;
    Report& rep = out.report;
    const std::size_t m = M.m, n = M.n;
    const std::string src_dims = M.kind == ModelKind::positive
                                     ? "g_1 = Hom(U,Q), g_2 = Sym^2 U^*, g_k = 0 for k >= 3"
                                     : "g_1 = Sym^2 U^*, g_k = 0 for k >= 2";
    rep.add("prolong.no_fixed_vector", !has_fixed_vector(M.g0, M.gminus), "false", "computed",
            "g_0 has no nonzero fixed vector on g_-");
    try {
        ProlongOptions po;
        po.max_degree = opts.max_degree;
        out.result = prolong(M.g0, M.gminus, po);
    } catch (const NonTerminationError& e) {
        rep.add_error("prolong.terminated", e.what(), src_dims);
        return out;
    }
    const ProlongationResult& R = *out.result;
    std::vector<std::size_t> expected = M.kind == ModelKind::positive
                                            ? std::vector<std::size_t>{m * n, m * (m + 1) / 2, 0, 0}
                                            : std::vector<std::size_t>{m * (m + 1) / 2, 0};
    const int expected_mu = M.kind == ModelKind::positive ? 2 : 1;
    rep.add("prolong.piece_dims", R.piece_dims() == expected, dims_text(expected), dims_text(R.piece_dims()),
            src_dims);
    rep.add("prolong.mu", R.mu == expected_mu, std::to_string(expected_mu), std::to_string(R.mu), src_dims);
    std::size_t above = 0;
    for (const auto& [k, p] : R.pieces)
        if (k > R.mu) above += p.dim();
    rep.add("prolong.vanishing_above_mu", R.terminated && above == 0, "terminated, 0 dims above mu",
            std::string(R.terminated ? "terminated" : "not terminated") + ", " + std::to_string(above) +
                " dims above mu",
            "nu consecutive zero pieces force all higher pieces to vanish");

    if (opts.inject_defect) {
        rep.merge(check_graded_lie(with_corrupted_constant(R.full_algebra, 0)), "lie.");
    } else {
        rep.merge(R.checks, "lie.");
    }

    const Tower& tower = *R.tower;
    for (int l = 1; l <= std::min(R.mu, 2); ++l) check_boundary_equivariance(tower, l, rep);

    PiCandidates pi = closed_form_pi(M, tower);
    const std::string src_pi = M.kind == ModelKind::positive
                                   ? "h -> (h_{v.w}, h^U + h^Q) and B -> (B_{v.w}, B_{w(x)p}) span g_1 and g_2"
                                   : "B -> (B_{v.w}, B_{w(x)p}) spans g_1";
    auto subspace_check = [&](const std::string& name, const std::optional<Subspace>& cand, int k) {
        if (!cand) {
            rep.add(name, false, "closed-form span equals the kernel", "candidate not formed: " + pi.note, src_pi);
            return;
        }
        const Subspace& g = tower.piece(k);
        rep.add(name, *cand == g, "equal echelon bases (dim " + std::to_string(g.dim()) + ")",
                *cand == g ? "equal" : "differ (candidate dim " + std::to_string(cand->dim()) + ")", src_pi);
    };
    subspace_check("pi.g1_equals_kernel", pi.g1, 1);
    subspace_check("pi.g2_equals_kernel", pi.g2, 2);

    // constraint and injectivity
    auto constraint = [&](const std::vector<Vector>& imgs, int level) {
        SpencerSpaces S = spencer_spaces(tower, level);
        Matrix D = spencer_boundary(tower, S);
        std::size_t bad = 0;
        for (const auto& v : imgs)
            if (!is_zero(D * v)) ++bad;
        return bad;
    };
    std::size_t bad_c = 0;
    std::size_t inj_dom = 0, inj_img = 0;
    if (!pi.pi1.empty()) {
        bad_c += constraint(pi.pi1, 1);
        inj_dom += pi.pi1.size();
        inj_img += Subspace::span(pi.pi1, tower.cochain1_dim(1)).dim();
    }
    if (!pi.pi2.empty()) {
        bad_c += constraint(pi.pi2, pi.pi2_level);
        inj_dom += pi.pi2.size();
        inj_img += Subspace::span(pi.pi2, tower.cochain1_dim(pi.pi2_level)).dim();
    }
    rep.add("pi.constraint", bad_c == 0, "0 images outside ker d", std::to_string(bad_c) + " images outside ker d",
            "each closed-form image satisfies the prolongation condition");
    rep.add("pi.injective", inj_dom == inj_img && inj_dom > 0, std::to_string(inj_dom) + " independent images",
            std::to_string(inj_img) + " independent images", "pi_1 and pi_2 are injective");

    // g_0-equivariance on basis pairs
    std::size_t bad_e = 0, tested = 0;
    if (M.kind == ModelKind::positive) {
        SpencerSpaces S1 = spencer_spaces(tower, 1);
        auto hs = hom_uq_basis(m, n);
        for (std::size_t x = 0; x < M.g0_elements.size(); ++x)
            for (std::size_t t = 0; t < hs.size(); ++t) {
                ++tested;
                if (pi1_symbol(M, tower, act_hom(M.g0_elements[x], hs[t])) != act_on_cochain1(tower, S1, x, pi.pi1[t]))
                    ++bad_e;
            }
    }
    if (!pi.pi2.empty()) {
        SpencerSpaces S = spencer_spaces(tower, pi.pi2_level);
        auto Bs = sym2_dual_basis(m);
        for (std::size_t x = 0; x < M.g0_elements.size(); ++x)
            for (std::size_t t = 0; t < Bs.size(); ++t) {
                ++tested;
                Matrix XB = act_sym2(M.g0_elements[x], Bs[t]);
                std::optional<Vector> lhs = M.kind == ModelKind::positive ? pi2_symbol_positive(M, tower, XB)
                                                                          : std::optional<Vector>(pi_rank_zero(M, tower, XB));
                if (!lhs || *lhs != act_on_cochain1(tower, S, x, pi.pi2[t])) ++bad_e;
            }
    }
    rep.add("pi.equivariant", bad_e == 0 && tested > 0, "0 violations", std::to_string(bad_e) + " violations in " +
                                                                         std::to_string(tested) + " basis pairs",
            "pi_1, pi_2 are g_0-module homomorphisms");

    const std::size_t dimv = 2 * m + n;
    const std::size_t sp = sp_dimension_formula(dimv, M.nullity);
    rep.add("prolong.total_dim_equals_sp", R.total_dim() == sp, std::to_string(sp), std::to_string(R.total_dim()),
            "dim g = dim sp_omega(V), dim V = 2m + n");
    return out;
}

} // namespace tanaka
