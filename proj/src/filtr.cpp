#include "tanaka/filtr.hpp"

#include <algorithm>
#include <stdexcept>

namespace tanaka {

MultiFiltration::MultiFiltration(std::size_t module_dim, std::vector<Matrix> g0_action, MultiIndex lo, MultiIndex hi,
                                 std::vector<Subspace> pieces)
    : dim_(module_dim), action_(std::move(g0_action)), lo_(std::move(lo)), hi_(std::move(hi)),
      pieces_(std::move(pieces)) {
    if (lo_.size() != hi_.size() || lo_.empty()) throw std::invalid_argument("MultiFiltration: bad box");
    std::size_t n = 1;
    for (std::size_t l = 0; l < lo_.size(); ++l) {
        if (hi_[l] < lo_[l]) throw std::invalid_argument("MultiFiltration: hi < lo");
        n *= static_cast<std::size_t>(hi_[l] - lo_[l] + 1);
    }
    if (pieces_.size() != n)
        throw std::invalid_argument("MultiFiltration: expected " + std::to_string(n) + " pieces, got " +
                                    std::to_string(pieces_.size()));
    for (const auto& X : action_)
        if (X.rows() != dim_ || X.cols() != dim_) throw std::invalid_argument("MultiFiltration: action of wrong size");
    validate();
}

MultiFiltration MultiFiltration::chain(std::size_t module_dim, std::vector<Matrix> g0_action, int lo,
                                       const std::vector<Subspace>& steps) {
    std::vector<Subspace> p{Subspace::zero(module_dim)};
    p.insert(p.end(), steps.begin(), steps.end());
    p.push_back(Subspace::full(module_dim));
    const int hi = lo + static_cast<int>(steps.size()) + 1;
    return MultiFiltration(module_dim, std::move(g0_action), {lo}, {hi}, std::move(p));
}

MultiFiltration MultiFiltration::trivial(std::size_t module_dim, std::vector<Matrix> g0_action) {
    return chain(module_dim, std::move(g0_action), 0, {});
}

std::size_t MultiFiltration::flat_index(const MultiIndex& I) const {
    if (I.size() != lo_.size()) throw std::invalid_argument("MultiFiltration: index of wrong arity");
    std::size_t f = 0;
    for (std::size_t l = 0; l < lo_.size(); ++l) {
        const int c = std::clamp(I[l], lo_[l], hi_[l]);
        f = f * static_cast<std::size_t>(hi_[l] - lo_[l] + 1) + static_cast<std::size_t>(c - lo_[l]);
    }
    return f;
}

const Subspace& MultiFiltration::piece(const MultiIndex& I) const { return pieces_[flat_index(I)]; }

namespace {

std::vector<MultiIndex> box_indices(const MultiIndex& lo, const MultiIndex& hi) {
    std::vector<MultiIndex> out;
    MultiIndex I = lo;
    while (true) {
        out.push_back(I);
        std::size_t l = I.size();
        while (true) {
            if (l == 0) return out;
            --l;
            if (I[l] < hi[l]) {
                ++I[l];
                break;
            }
            I[l] = lo[l];
        }
    }
}

} // namespace

std::vector<MultiIndex> MultiFiltration::box() const { return box_indices(lo_, hi_); }

void MultiFiltration::validate() const {
    for (const auto& p : pieces_)
        if (p.ambient_dim() != dim_) throw std::invalid_argument("MultiFiltration: piece in the wrong ambient space");
    if (!piece(lo_).is_zero()) throw std::invalid_argument("MultiFiltration: A_lo must be 0");
    if (!piece(hi_).is_full()) throw std::invalid_argument("MultiFiltration: A_hi must be the whole module");
    for (const auto& I : box())
        for (std::size_t l = 0; l < I.size(); ++l) {
            if (I[l] == hi_[l]) continue;
            MultiIndex J = I;
            ++J[l];
            if (!piece(J).contains(piece(I))) throw std::invalid_argument("MultiFiltration: pieces are not monotone");
        }
}

Subspace lower_sum(const MultiFiltration& F, const MultiIndex& I) {
    std::vector<Subspace> parts;
    for (std::size_t l = 0; l < I.size(); ++l) {
        MultiIndex J = I;
        --J[l];
        parts.push_back(F.piece(J));
    }
    return sum(parts, F.module_dim());
}

GradedObject graded_object(const MultiFiltration& F, const MultiIndex& I) {
    if (I.size() != F.arity()) throw std::out_of_range("graded_object: index of wrong arity");
    for (std::size_t l = 0; l < I.size(); ++l)
        if (I[l] < F.lo()[l] || I[l] > F.hi()[l]) throw std::out_of_range("graded_object: index outside the box");
    bool edge = false;
    for (std::size_t l = 0; l < I.size(); ++l) edge = edge || I[l] == F.lo()[l];
    if (edge) return {0, Subspace::zero(F.module_dim())};
    Subspace low = lower_sum(F, I);
    Subspace rep = complement_in(low, sum(low, F.piece(I)));
    return {rep.dim(), rep};
}

std::vector<std::pair<MultiIndex, std::size_t>> graded_dims(const MultiFiltration& F) {
    std::vector<std::pair<MultiIndex, std::size_t>> out;
    for (const auto& I : F.box()) {
        auto g = graded_object(F, I);
        if (g.dim > 0) out.emplace_back(I, g.dim);
    }
    return out;
}

bool is_g0_reductive(const MultiFiltration& F, const std::vector<Matrix>& radical) {
    std::vector<Vector> flats;
    for (const auto& X : F.g0_action()) flats.push_back(X.flat());
    Subspace span = Subspace::span(flats, F.module_dim() * F.module_dim());
    for (const auto& r : radical)
        if (r.rows() != F.module_dim() || !span.contains(r.flat()))
            throw std::invalid_argument("is_g0_reductive: radical element outside the g0 action");
    for (const auto& I : F.box()) {
        const Subspace& A = F.piece(I);
        for (const auto& X : F.g0_action())
            for (const auto& v : A.vectors())
                if (!A.contains(X * v)) return false;
        if (radical.empty() || A.is_zero()) continue;
        Subspace low = lower_sum(F, I);
        for (const auto& r : radical)
            for (const auto& v : A.vectors())
                if (!low.contains(r * v)) return false;
    }
    return true;
}

MultiFiltration dual_filtration(const MultiFiltration& F) {
    MultiIndex lo(F.arity()), hi(F.arity());
    for (std::size_t l = 0; l < F.arity(); ++l) {
        lo[l] = -F.hi()[l];
        hi[l] = -F.lo()[l];
    }
    std::vector<Matrix> act;
    for (const auto& X : F.g0_action()) act.push_back(Scalar(-1) * X.transpose());
    std::vector<Subspace> pieces;
    for (const auto& I : box_indices(lo, hi)) {
        MultiIndex J(I.size());
        for (std::size_t l = 0; l < I.size(); ++l) J[l] = -I[l];
        pieces.push_back(annihilator(F.piece(J)));
    }
    return MultiFiltration(F.module_dim(), std::move(act), lo, hi, std::move(pieces));
}

namespace {

std::vector<Matrix> tensor_action(const std::vector<Matrix>& a, std::size_t da, const std::vector<Matrix>& b,
                                  std::size_t db) {
    if (!a.empty() && !b.empty() && a.size() != b.size())
        throw std::invalid_argument("tensor_filtration: g0 actions of different lengths");
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<Matrix> out;
    for (std::size_t x = 0; x < n; ++x) {
        Matrix r(da * db, da * db);
        if (!a.empty()) r += kron(a[x], Matrix::identity(db));
        if (!b.empty()) r += kron(Matrix::identity(da), b[x]);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

MultiFiltration tensor_filtration(const MultiFiltration& A, const MultiFiltration& B) {
    MultiIndex lo = A.lo(), hi = A.hi();
    lo.insert(lo.end(), B.lo().begin(), B.lo().end());
    hi.insert(hi.end(), B.hi().begin(), B.hi().end());
    std::vector<Subspace> pieces;
    for (const auto& I : A.box())
        for (const auto& J : B.box()) pieces.push_back(kron(A.piece(I), B.piece(J)));
    return MultiFiltration(A.module_dim() * B.module_dim(),
                           tensor_action(A.g0_action(), A.module_dim(), B.g0_action(), B.module_dim()), lo, hi,
                           std::move(pieces));
}

MultiFiltration sub_filtration(const MultiFiltration& F, const Subspace& B) {
    if (B.ambient_dim() != F.module_dim()) throw std::invalid_argument("sub_filtration: ambient mismatch");
    std::vector<Matrix> act;
    for (const auto& X : F.g0_action()) {
        Matrix R(B.dim(), B.dim());
        for (std::size_t c = 0; c < B.dim(); ++c) {
            auto y = B.coordinates(X * B.vector(c));
            if (!y) throw std::invalid_argument("sub_filtration: B is not a g0-submodule");
            R.set_col(c, *y);
        }
        act.push_back(std::move(R));
    }
    std::vector<Subspace> pieces;
    for (const auto& I : F.box()) {
        std::vector<Vector> g;
        const Subspace cap = intersect(B, F.piece(I));
        for (const auto& v : cap.vectors()) g.push_back(*B.coordinates(v));
        pieces.push_back(Subspace::span(g, B.dim()));
    }
    return MultiFiltration(B.dim(), std::move(act), F.lo(), F.hi(), std::move(pieces));
}

MultiFiltration image_filtration(const MultiFiltration& F, const Matrix& f, std::vector<Matrix> target_action) {
    if (f.cols() != F.module_dim()) throw std::invalid_argument("image_filtration: map of the wrong size");
    if (rank(f) != f.rows()) throw std::invalid_argument("image_filtration: map is not surjective");
    std::vector<Subspace> pieces;
    for (const auto& I : F.box()) pieces.push_back(image(f, F.piece(I)));
    return MultiFiltration(f.rows(), std::move(target_action), F.lo(), F.hi(), std::move(pieces));
}

namespace {

bool starts_with(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

} // namespace

AdaptedModules adapted_modules(const Model& M, const ProlongationResult& R) {
    const Tower& tower = *R.tower;
    const GradedLieAlgebra& L = R.full_algebra;
    const auto& space = L.space();
    AdaptedModules out;
    out.min_degree = -tower.depth();
    out.max_degree = R.mu;
    const std::size_t m = M.m, n = M.n, s2 = n - (M.kind == ModelKind::positive ? M.nullity : n);
    const std::size_t d0 = tower.dim(0);

    std::map<int, Matrix> P;
    for (int d = out.min_degree; d <= out.max_degree; ++d) {
        const std::size_t dd = tower.dim(d);
        out.dim[d] = dd;
        std::vector<Vector> cols;
        if (d < 0) {
            for (std::size_t t = 0; t < dd; ++t) cols.push_back(unit_vector(dd, t));
        } else if (d == 0) {
            for (std::size_t i = 0; i < M.g0.dim(); ++i) cols.push_back(tower.g0_coordinates(i));
        } else {
            PiCandidates pc = closed_form_pi(M, tower);
            const std::vector<Vector>* src = nullptr;
            if (M.kind == ModelKind::positive) src = d == 1 ? &pc.pi1 : (d == 2 ? &pc.pi2 : nullptr);
            else src = d == 1 ? &pc.pi2 : nullptr;
            if (!src || src->size() != dd) throw std::logic_error("adapted_modules: no closed-form basis in degree " + std::to_string(d));
            for (const auto& v : *src) {
                auto c = tower.piece(d).coordinates(v);
                if (!c) throw std::logic_error("adapted_modules: closed-form image outside the computed piece");
                cols.push_back(*c);
            }
        }
        P[d] = Matrix::from_columns(cols, dd);
    }

    std::vector<Matrix> ad0;
    for (std::size_t t = 0; t < d0; ++t) ad0.push_back(L.ad_matrix(space.offset(0) + t));
    for (int d = out.min_degree; d <= out.max_degree; ++d) {
        const std::size_t dd = out.dim[d], off = space.offset(d);
        CoordinateSolver solver(P[d]);
        for (std::size_t x = 0; x < M.g0.dim(); ++x) {
            Vector c = tower.g0_coordinates(x);
            Matrix A(dd, dd);
            for (std::size_t t = 0; t < d0; ++t)
                if (!c[t].is_zero()) A += c[t] * ad0[t].block(off, off, dd, dd);
            Matrix rho(dd, dd);
            for (std::size_t k = 0; k < dd; ++k) rho.set_col(k, solver.coordinates(A * P[d].col(k)));
            out.action[d].push_back(std::move(rho));
        }
    }

    auto set = [&](int d, std::vector<int> lv, std::vector<std::string> lb) {
        out.level[d] = std::move(lv);
        out.label[d] = std::move(lb);
    };
    const auto& ix = M.idx;
    std::vector<int> lv0;
    std::vector<std::string> lb0;
    for (const auto& e : M.g0_elements) {
        int v = 0;
        std::string b;
        if (M.kind == ModelKind::positive) {
            if (starts_with(e.label, "rad:")) v = 1, b = "B6";
            else if (starts_with(e.label, "glNull:")) v = 2, b = "B5";
            else if (starts_with(e.label, "spQflat")) v = 3, b = "B4";
            else v = 4, b = "B3";
        } else {
            if (starts_with(e.label, "phi:")) v = 1, b = "B8";
            else if (starts_with(e.label, "glQ:")) v = 2, b = "B5";
            else v = 3, b = "B3";
        }
        lv0.push_back(v);
        lb0.push_back(b);
    }
    if (M.kind == ModelKind::positive) {
        set(-2, std::vector<int>(ix.sym_dim(), 1), std::vector<std::string>(ix.sym_dim(), "B0"));
        std::vector<int> lv;
        std::vector<std::string> lb;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < n; ++a) {
                lv.push_back(a >= s2 ? 1 : 2);
                lb.push_back(a >= s2 ? "B2" : "B1");
            }
        set(-1, lv, lb);
        set(0, lv0, lb0);
        lv.clear();
        lb.clear();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < n; ++a) {
                lv.push_back(a >= s2 ? 1 : 2);
                lb.push_back(a >= s2 ? "B8" : "B7");
            }
        if (out.max_degree >= 1) set(1, lv, lb);
        if (out.max_degree >= 2) set(2, std::vector<int>(ix.sym_dim(), 1), std::vector<std::string>(ix.sym_dim(), "B9"));
    } else {
        std::vector<int> lv;
        std::vector<std::string> lb;
        for (std::size_t k = 0; k < ix.uq_dim(); ++k) lv.push_back(1), lb.push_back("B2");
        for (std::size_t k = 0; k < ix.sym_dim(); ++k) lv.push_back(2), lb.push_back("B0");
        set(-1, lv, lb);
        set(0, lv0, lb0);
        if (out.max_degree >= 1) set(1, std::vector<int>(ix.sym_dim(), 1), std::vector<std::string>(ix.sym_dim(), "B9"));
    }

    Vector zu(M.g0.dim()), zn(M.g0.dim());
    for (std::size_t x = 0; x < M.g0_elements.size(); ++x) {
        const std::string& lab = M.g0_elements[x].label;
        if (starts_with(lab, "rad:") || starts_with(lab, "phi:")) out.radical.push_back(x);
        // diagonal labels E_kk
        auto diag = [&](const char* p) {
            if (!starts_with(lab, p)) return false;
            std::string s = lab.substr(std::string(p).size());
            return s.size() % 2 == 0 && s.substr(0, s.size() / 2) == s.substr(s.size() / 2);
        };
        if (diag("glU:E")) zu[x] = 1;
        if (diag(M.kind == ModelKind::positive ? "glNull:E" : "glQ:E")) zn[x] = 1;
    }
    out.torus = {zu, zn};
    return out;
}

std::vector<StandardFiltration> standard_filtrations(const Model& M, const ProlongationResult& R) {
    AdaptedModules A = adapted_modules(M, R);
    std::vector<StandardFiltration> out;
    for (const auto& [d, levels] : A.level) {
        const std::size_t dd = A.dim.at(d);
        const int top = levels.empty() ? 1 : *std::max_element(levels.begin(), levels.end());
        std::vector<Subspace> steps;
        std::vector<std::string> labels(static_cast<std::size_t>(top));
        for (int v = 1; v < top; ++v) {
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < dd; ++k)
                if (levels[k] <= v) idx.push_back(k);
            steps.push_back(Subspace::coordinate(idx, dd));
        }
        for (std::size_t k = 0; k < dd; ++k) labels[static_cast<std::size_t>(levels[k] - 1)] = A.label.at(d)[k];
        StandardFiltration sf;
        sf.degree = d;
        sf.filtration = MultiFiltration::chain(dd, A.action.at(d), 0, steps);
        for (std::size_t r : A.radical) sf.radical.push_back(A.action.at(d)[r]);
        sf.labels = std::move(labels);
        out.push_back(std::move(sf));
    }
    return out;
}

std::map<std::string, CatalogEntry> module_catalog(const Model& M) {
    const std::size_t m = M.m;
    const std::size_t r = M.kind == ModelKind::positive ? M.nullity : M.n;
    const std::size_t f = M.n - r;
    const std::size_t S = m * (m + 1) / 2;
    auto c2 = [](std::size_t x) { return x * (x - 1) / 2; };
    std::map<std::string, CatalogEntry> c;
    auto put = [&](const std::string& k, std::size_t d, int wu, int wn) { c[k] = {k, d, wu, wn}; };
    put("B0", S, 2, 0);
    put("B2", m * r, 1, 1);
    put("B3", m * m, 0, 0);
    put("B5", r * r, 0, 0);
    put("B8", m * r, -1, 1);
    put("B9", S, -2, 0);
    put("A1", c2(S), 4, 0);
    put("A2", S * m * r, 3, 1);
    put("A4", c2(m * r), 2, 2);
    if (M.kind == ModelKind::positive) {
        put("B1", m * f, 1, 0);
        put("B4", f * (f + 1) / 2, 0, 0);
        put("B6", f * r, 0, 1);
        put("B7", m * f, -1, 0);
        put("A3", S * m * f, 3, 0);
        put("A5", m * r * m * f, 2, 1);
        put("A6", c2(m * f), 2, 0);
    }
    return c;
}

} // namespace tanaka
