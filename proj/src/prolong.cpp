#include "tanaka/prolong.hpp"

#include <algorithm>

namespace tanaka {

namespace {

std::size_t wedge_index(std::size_t a, std::size_t b, std::size_t n) {
    // position of (a, b), a < b, in the lexicographic list of pairs
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

} // namespace

Tower::Tower(GradedLieAlgebra gminus, MatrixLieAlgebra g0) : gminus_(std::move(gminus)), g0_(std::move(g0)) {
    const auto& sp = gminus_.space();
    if (sp.components().empty()) throw std::invalid_argument("Tower: g_- is empty");
    if (sp.max_degree() >= 0) throw std::invalid_argument("Tower: g_- must be negatively graded");
    depth_ = -sp.min_degree();
    const std::size_t N = gminus_.dim();
    if (g0_.ambient_dim() != N)
        throw std::invalid_argument("Tower: g_0 matrices have size " + std::to_string(g0_.ambient_dim()) +
                                    " but g_- has dimension " + std::to_string(N));
    for (std::size_t x = 0; x < g0_.dim(); ++x) {
        const Matrix& X = g0_.element(x);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (!X(i, j).is_zero() && sp.degree_of(i) != sp.degree_of(j))
                    throw std::invalid_argument("Tower: g_0 element " + std::to_string(x) + " does not preserve the grading");
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = a + 1; b < N; ++b) {
                Vector lhs = X * gminus_.bracket_basis(a, b);
                Vector rhs = add(gminus_.bracket(X.col(a), unit_vector(N, b)), gminus_.bracket(unit_vector(N, a), X.col(b)));
                if (lhs != rhs)
                    throw std::invalid_argument("Tower: g_0 element " + std::to_string(x) + " is not a derivation of g_-");
            }
    }
    std::vector<Vector> symbols;
    for (const auto& X : g0_.basis()) symbols.push_back(g0_symbol(X));
    pieces_.push_back(Subspace::span(symbols, cochain1_dim(0)));
    if (pieces_[0].dim() != g0_.dim()) throw std::invalid_argument("Tower: g_0 does not act faithfully");
    for (const auto& s : symbols) g0_coords_.push_back(*pieces_[0].coordinates(s));
}

int Tower::mu() const {
    for (int k = computed_max(); k >= 1; --k)
        if (pieces_[static_cast<std::size_t>(k)].dim() > 0) return k;
    return 0;
}

std::size_t Tower::dim(int d) const {
    if (d < 0) return d < -depth_ ? 0 : gminus_.space().dim(d);
    if (d <= computed_max()) return pieces_[static_cast<std::size_t>(d)].dim();
    if (terminated_) return 0;
    throw std::out_of_range("degree " + std::to_string(d) + " is beyond the computed prolongation range");
}

const Subspace& Tower::piece(int k) const {
    if (k < 0 || k > computed_max()) throw std::out_of_range("piece " + std::to_string(k) + " not computed");
    return pieces_[static_cast<std::size_t>(k)];
}

std::vector<CochainBlock1> Tower::cochain1_blocks(int k) const {
    std::vector<CochainBlock1> blocks;
    std::size_t off = 0;
    for (int j = 1; j <= depth_; ++j) {
        CochainBlock1 b;
        b.j = j;
        b.target_degree = k - j;
        b.source_dim = dim(-j);
        b.target_dim = dim(k - j);
        b.offset = off;
        off += b.source_dim * b.target_dim;
        blocks.push_back(b);
    }
    return blocks;
}

std::size_t Tower::cochain1_dim(int k) const {
    std::size_t n = 0;
    for (const auto& b : cochain1_blocks(k)) n += b.source_dim * b.target_dim;
    return n;
}

Vector Tower::g0_symbol(const Matrix& X) const {
    const auto& sp = gminus_.space();
    Vector sym(cochain1_dim(0));
    for (const auto& b : cochain1_blocks(0)) {
        if (b.source_dim == 0) continue;
        std::size_t base = sp.offset(-b.j);
        for (std::size_t s = 0; s < b.source_dim; ++s)
            for (std::size_t t = 0; t < b.target_dim; ++t) sym[b.offset + s * b.target_dim + t] = X(base + t, base + s);
    }
    return sym;
}

Vector Tower::embed_minus(int d, const Vector& x) const {
    Vector full(gminus_.dim());
    if (x.empty()) return full;
    std::size_t off = gminus_.space().offset(d);
    for (std::size_t i = 0; i < x.size(); ++i) full[off + i] = x[i];
    return full;
}

Vector Tower::project_minus(int d, const Vector& full) const {
    if (d < -depth_ || !gminus_.space().has_degree(d)) return {};
    std::size_t off = gminus_.space().offset(d), n = gminus_.space().dim(d);
    return Vector(full.begin() + static_cast<std::ptrdiff_t>(off),
                  full.begin() + static_cast<std::ptrdiff_t>(off + n));
}

Vector Tower::act(int k, const Vector& x, int j, std::size_t s) const {
    const Subspace& P = piece(k);
    if (x.size() != P.dim()) throw std::invalid_argument("act: coordinate length mismatch");
    std::size_t td = dim(k - j);
    Vector r(td);
    if (td == 0) return r;
    std::size_t off = 0;
    for (const auto& b : cochain1_blocks(k))
        if (b.j == j) off = b.offset + s * b.target_dim;
    for (std::size_t t = 0; t < x.size(); ++t) {
        if (x[t].is_zero()) continue;
        const Vector& sym = P.vector(t);
        for (std::size_t i = 0; i < td; ++i)
            if (!sym[off + i].is_zero()) r[i].sub_mul(-x[t], sym[off + i]);
    }
    return r;
}

Vector Tower::piece_coordinates(int k, const Vector& symbol) const {
    auto c = piece(k).coordinates(symbol);
    if (!c) throw std::logic_error("bracket of prolongation elements left the degree-" + std::to_string(k) + " piece");
    return *c;
}

Vector Tower::bracket(int p, const Vector& x, int q, const Vector& y) const {
    const int d = p + q;
    if (d < -depth_) return {};
    if (p < 0 && q < 0) {
        Vector full = gminus_.bracket(embed_minus(p, x), embed_minus(q, y));
        return project_minus(d, full);
    }
    if (p < 0) return scale(Scalar(-1), bracket(q, y, p, x));
    std::size_t nd = dim(d);
    Vector r(nd);
    if (q < 0) {
        for (std::size_t s = 0; s < y.size(); ++s)
            if (!y[s].is_zero()) axpy(r, y[s], act(p, x, -q, s));
        return r;
    }
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < y.size(); ++b) {
            if (y[b].is_zero()) continue;
            Vector v = bracket_nonneg_basis(p, a, q, b);
            if (!v.empty()) axpy(r, x[a] * y[b], v);
        }
    }
    return r;
}

Vector Tower::bracket_nonneg_basis(int p, std::size_t a, int q, std::size_t b) const {
    auto key = std::make_tuple(p, a, q, b);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    const int k = p + q;
    if (k > computed_max() && !terminated_)
        throw std::out_of_range("bracket lands in degree " + std::to_string(k) + ", beyond the computed range");
    Vector ea = unit_vector(dim(p), a), eb = unit_vector(dim(q), b);
    // symbol of [x, y]: v -> [x(v), y] + [x, y(v)]
    Vector sym(cochain1_dim(k));
    for (const auto& blk : cochain1_blocks(k)) {
        if (blk.target_dim == 0) continue;
        for (std::size_t s = 0; s < blk.source_dim; ++s) {
            Vector xs = act(p, ea, blk.j, s);
            Vector ys = act(q, eb, blk.j, s);
            Vector v = add(bracket(p - blk.j, xs, q, eb), bracket(p, ea, q - blk.j, ys));
            for (std::size_t t = 0; t < blk.target_dim; ++t) sym[blk.offset + s * blk.target_dim + t] = v[t];
        }
    }
    Vector result;
    if (k > computed_max()) {
        if (!tanaka::is_zero(sym))
            throw std::logic_error("bracket of prolongation elements is nonzero in the vanishing degree " +
                                   std::to_string(k));
    } else {
        result = piece_coordinates(k, sym);
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(key, result);
    return result;
}

void Tower::extend() {
    if (terminated_) return;
    const int k = computed_max() + 1;
    SpencerSpaces S = spencer_spaces(*this, k);
    Matrix M = spencer_boundary(*this, S);
    pieces_.push_back(kernel_basis(M));
    if (k >= depth_) {
        bool all_zero = true;
        for (int i = k - depth_ + 1; i <= k; ++i)
            if (pieces_[static_cast<std::size_t>(i)].dim() > 0) all_zero = false;
        if (all_zero) terminated_ = true;
    }
}

SpencerSpaces spencer_spaces(const Tower& tower, int level) {
    if (level < 1) throw std::invalid_argument("spencer_spaces: level must be >= 1");
    if (level - 1 > tower.computed_max() && !tower.terminated())
        throw std::out_of_range("spencer_spaces: requested level " + std::to_string(level) +
                                " exceeds the computed prolongation range (pieces up to degree " +
                                std::to_string(tower.computed_max()) + ")");
    SpencerSpaces S;
    S.level = level;
    S.c1 = tower.cochain1_blocks(level);
    for (const auto& b : S.c1) S.dim1 += b.source_dim * b.target_dim;
    std::size_t off = 0;
    const int nu = tower.depth();
    for (int i = 1; i <= nu; ++i)
        for (int j = i; j <= nu; ++j) {
            CochainBlock2 b;
            b.i = i;
            b.j = j;
            b.target_degree = level - i - j;
            b.target_dim = tower.dim(level - i - j);
            b.offset = off;
            std::size_t di = tower.dim(-i), dj = tower.dim(-j);
            for (std::size_t a = 0; a < di; ++a)
                for (std::size_t c = (i == j ? a + 1 : 0); c < dj; ++c) b.pairs.emplace_back(a, c);
            off += b.pairs.size() * b.target_dim;
            S.c2.push_back(std::move(b));
        }
    S.dim2 = off;
    return S;
}

namespace {

const CochainBlock1& block1(const SpencerSpaces& S, int j) {
    for (const auto& b : S.c1)
        if (b.j == j) return b;
    throw std::logic_error("missing cochain block");
}

std::size_t pair_index(const CochainBlock2& b, std::size_t u, std::size_t v, std::size_t dim_j) {
    return b.i == b.j ? wedge_index(u, v, dim_j) : u * dim_j + v;
}

} // namespace

Matrix spencer_boundary(const Tower& tower, const SpencerSpaces& S) {
    Matrix M(S.dim2, S.dim1);
    const int l = S.level;
    for (const auto& blk : S.c2) {
        const std::size_t td = blk.target_dim;
        if (td == 0) continue;
        const int i = blk.i, j = blk.j;
        const std::size_t di = tower.dim(-i), dj = tower.dim(-j);
        const auto& fi = block1(S, i);
        const auto& fj = block1(S, j);
        const std::size_t ni = tower.dim(l - i), nj = tower.dim(l - j);
        for (std::size_t pi = 0; pi < blk.pairs.size(); ++pi) {
            const auto [a, b] = blk.pairs[pi];
            const std::size_t row0 = blk.offset + pi * td;
            Vector ea = unit_vector(di, a), eb = unit_vector(dj, b);
            // [f(u), v] with f(u) running over the basis of g_{l-i}
            for (std::size_t t = 0; t < ni; ++t) {
                Vector v = tower.bracket(l - i, unit_vector(ni, t), -j, eb);
                for (std::size_t r = 0; r < td; ++r)
                    if (!v[r].is_zero()) M(row0 + r, fi.offset + a * fi.target_dim + t) += v[r];
            }
            // [u, f(v)]
            for (std::size_t t = 0; t < nj; ++t) {
                Vector v = tower.bracket(-i, ea, l - j, unit_vector(nj, t));
                for (std::size_t r = 0; r < td; ++r)
                    if (!v[r].is_zero()) M(row0 + r, fj.offset + b * fj.target_dim + t) += v[r];
            }
            // -f([u, v])
            if (i + j <= tower.depth()) {
                Vector w = tower.bracket(-i, ea, -j, eb);
                const auto& fk = block1(S, i + j);
                for (std::size_t s = 0; s < w.size(); ++s) {
                    if (w[s].is_zero()) continue;
                    for (std::size_t t = 0; t < td; ++t) M(row0 + t, fk.offset + s * fk.target_dim + t) -= w[s];
                }
            }
        }
    }
    return M;
}

Vector act_on_cochain1(const Tower& tower, const SpencerSpaces& S, std::size_t g0_index, const Vector& f) {
    const Vector X = tower.g0_coordinates(g0_index);
    const Matrix& Xm = tower.g0().element(g0_index);
    const auto& sp = tower.gminus().space();
    Vector out(S.dim1);
    for (const auto& b : S.c1) {
        if (b.target_dim == 0) continue;
        std::size_t base = sp.offset(-b.j);
        auto chunk = [&](std::size_t s) {
            return Vector(f.begin() + static_cast<std::ptrdiff_t>(b.offset + s * b.target_dim),
                          f.begin() + static_cast<std::ptrdiff_t>(b.offset + (s + 1) * b.target_dim));
        };
        for (std::size_t s = 0; s < b.source_dim; ++s) {
            Vector v = tower.bracket(0, X, b.target_degree, chunk(s));
            for (std::size_t s2 = 0; s2 < b.source_dim; ++s2) {
                const Scalar& c = Xm(base + s2, base + s);
                if (!c.is_zero()) axpy(v, -c, chunk(s2));
            }
            for (std::size_t t = 0; t < b.target_dim; ++t) out[b.offset + s * b.target_dim + t] = v[t];
        }
    }
    return out;
}

Vector act_on_cochain2(const Tower& tower, const SpencerSpaces& S, std::size_t g0_index, const Vector& c) {
    const Vector X = tower.g0_coordinates(g0_index);
    const Matrix& Xm = tower.g0().element(g0_index);
    const auto& sp = tower.gminus().space();
    Vector out(S.dim2);
    for (const auto& blk : S.c2) {
        const std::size_t td = blk.target_dim;
        if (td == 0) continue;
        const std::size_t di = tower.dim(-blk.i), dj = tower.dim(-blk.j);
        const std::size_t bi = sp.offset(-blk.i), bj = sp.offset(-blk.j);
        // value c(u, v) for arbitrary basis u of g_{-i}, v of g_{-j}
        auto value = [&](std::size_t u, std::size_t v) {
            Scalar sign = 1;
            if (blk.i == blk.j) {
                if (u == v) return Vector(td);
                if (u > v) {
                    std::swap(u, v);
                    sign = -1;
                }
            }
            std::size_t pos = blk.offset + pair_index(blk, u, v, dj) * td;
            Vector r(c.begin() + static_cast<std::ptrdiff_t>(pos), c.begin() + static_cast<std::ptrdiff_t>(pos + td));
            return sign.is_one() ? r : scale(sign, r);
        };
        for (std::size_t pi = 0; pi < blk.pairs.size(); ++pi) {
            const auto [a, b] = blk.pairs[pi];
            Vector v = tower.bracket(0, X, blk.target_degree, value(a, b));
            for (std::size_t a2 = 0; a2 < di; ++a2) {
                const Scalar& x = Xm(bi + a2, bi + a);
                if (!x.is_zero()) axpy(v, -x, value(a2, b));
            }
            for (std::size_t b2 = 0; b2 < dj; ++b2) {
                const Scalar& x = Xm(bj + b2, bj + b);
                if (!x.is_zero()) axpy(v, -x, value(a, b2));
            }
            for (std::size_t t = 0; t < td; ++t) out[blk.offset + pi * td + t] = v[t];
        }
    }
    return out;
}

std::vector<std::size_t> ProlongationResult::piece_dims() const {
    std::vector<std::size_t> d;
    for (const auto& [k, s] : pieces) d.push_back(s.dim());
    return d;
}

bool has_fixed_vector(const MatrixLieAlgebra& g0, const GradedLieAlgebra& gminus) {
    const std::size_t N = gminus.dim();
    if (N == 0) return false;
    if (g0.dim() == 0) return true;
    std::vector<Vector> rows;
    for (const auto& X : g0.basis())
        for (std::size_t i = 0; i < X.rows(); ++i) rows.push_back(X.row(i));
    return kernel_basis(Matrix::from_rows(rows, N)).dim() > 0;
}

GradedLieAlgebra assemble_algebra(const Tower& tower) {
    if (!tower.terminated()) throw std::logic_error("assemble_algebra: prolongation has not terminated");
    const int nu = tower.depth(), mu = tower.mu();
    const auto& msp = tower.gminus().space();
    std::vector<GradedComponent> comps;
    for (int d = -nu; d <= mu; ++d) {
        std::size_t n = tower.dim(d);
        if (n == 0) continue;
        GradedComponent c;
        c.degree = d;
        c.dim = n;
        for (std::size_t t = 0; t < n; ++t)
            c.labels.push_back(d < 0 ? msp.label(msp.offset(d) + t) : "g" + std::to_string(d) + "#" + std::to_string(t));
        comps.push_back(std::move(c));
    }
    GradedVectorSpace space(std::move(comps));
    GradedLieAlgebra L(space);
    const std::size_t n = L.dim();
    for (std::size_t a = 0; a < n; ++a) {
        const int p = space.degree_of(a);
        const std::size_t la = a - space.offset(p);
        for (std::size_t b = 0; b < n; ++b) {
            const int q = space.degree_of(b);
            const std::size_t lb = b - space.offset(q);
            Vector v = tower.bracket(p, unit_vector(tower.dim(p), la), q, unit_vector(tower.dim(q), lb));
            if (v.empty() || tanaka::is_zero(v)) continue;
            Vector full(n);
            std::size_t off = space.offset(p + q);
            for (std::size_t i = 0; i < v.size(); ++i) full[off + i] = v[i];
            L.set_bracket(a, b, full);
        }
    }
    return L;
}

ProlongationResult prolong(const MatrixLieAlgebra& g0, const GradedLieAlgebra& gminus, ProlongOptions opts) {
    if (!opts.waive_fixed_vector_check && has_fixed_vector(g0, gminus))
        throw std::invalid_argument("prolong: g_0 has a nonzero common fixed vector on g_- (waive the check to proceed)");
    auto tower = std::make_shared<Tower>(gminus, g0);
    while (!tower->terminated() && tower->computed_max() < opts.max_degree) tower->extend();

    ProlongationResult res;
    res.tower = tower;
    for (int k = 1; k <= tower->computed_max(); ++k) res.pieces.emplace_back(k, tower->piece(k));
    res.terminated = tower->terminated();
    res.mu = tower->mu();
    if (!res.terminated) {
        auto partial = std::make_shared<ProlongationResult>(std::move(res));
        throw NonTerminationError("possibly infinite prolongation: no " + std::to_string(tower->depth()) +
                                      " consecutive vanishing pieces up to degree " + std::to_string(opts.max_degree) +
                                      " (the vanishing rule detects termination but cannot prove non-termination)",
                                  partial);
    }
    res.full_algebra = assemble_algebra(*tower);
    res.checks = check_graded_lie(res.full_algebra);

    // [g^0, g^l] inside g^l for l >= 1
    const auto& space = res.full_algebra.space();
    std::size_t bad = 0;
    for (std::size_t a = 0; a < res.full_algebra.dim(); ++a) {
        if (space.degree_of(a) < 0) continue;
        for (std::size_t b = 0; b < res.full_algebra.dim(); ++b) {
            int l = space.degree_of(b);
            if (l < 1) continue;
            for (const auto& [d, c] : res.full_algebra.bracket_sparse(a, b))
                if (space.degree_of(d) < l) ++bad;
        }
    }
    res.checks.add("filtration_ideals", bad == 0, "0 violations", std::to_string(bad) + " violations",
                   "g^l is an ideal of g^0");
    return res;
}

} // namespace tanaka
