#include "tanaka/zvariety.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace tanaka {

WLayout::WLayout(std::size_t m_, std::size_t n_) : m(m_), n(n_), idx{m_, n_} {
    if (m < 1 || n < 1) throw std::invalid_argument("W needs dim U >= 1 and dim Q >= 1");
}

Vector WLayout::tensor(const Vector& u, const Vector& q) const {
    Vector w(dim());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < n; ++a) w[uq(i, a)] = u[i] * q[a];
    return w;
}

Vector WLayout::product(const Vector& u, const Vector& v) const {
    Vector w(dim());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (u[i].is_zero() || v[j].is_zero()) continue;
            w[sym(i, j)] += u[i] * v[j];
        }
    return w;
}

Subspace WLayout::uq_block() const {
    std::vector<std::size_t> ix;
    for (std::size_t k = 0; k < idx.uq_dim(); ++k) ix.push_back(k);
    return Subspace::coordinate(ix, dim());
}

ZPoint z_embed(const WLayout& L, const Vector& u, const Vector& q, const Scalar& t) {
    if (u.size() != L.m || q.size() != L.n) throw std::invalid_argument("z_embed: wrong vector sizes");
    if (is_zero(u)) throw std::invalid_argument("z_embed: u must be nonzero");
    if (is_zero(q) && t.is_zero()) throw std::invalid_argument("z_embed: (q, t) must be nonzero");
    ZPoint p{u, q, t, L.tensor(u, q)};
    axpy(p.w, t, L.product(u, u));
    return p;
}

Matrix z_jacobian(const WLayout& L, const ZPoint& p) {
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < L.n; ++a) cols.push_back(L.tensor(p.u, unit_vector(L.n, a)));
    for (std::size_t i = 0; i < L.m; ++i) {
        Vector c = L.tensor(unit_vector(L.m, i), p.q);
        axpy(c, Scalar(2) * p.t, L.product(p.u, unit_vector(L.m, i)));
        cols.push_back(std::move(c));
    }
    cols.push_back(L.product(p.u, p.u));
    return Matrix::from_columns(cols, L.dim());
}

namespace {

std::string dim_text(std::size_t d) { return std::to_string(d); }

Subspace u_times_q(const WLayout& L, const Vector& u) {
    std::vector<Vector> g;
    for (std::size_t a = 0; a < L.n; ++a) g.push_back(L.tensor(u, unit_vector(L.n, a)));
    return Subspace::span(g, L.dim());
}

Subspace u_dot_u(const WLayout& L, const Vector& u) {
    std::vector<Vector> g;
    for (std::size_t i = 0; i < L.m; ++i) g.push_back(L.product(u, unit_vector(L.m, i)));
    return Subspace::span(g, L.dim());
}

Vector sym_part(const WLayout& L, const Vector& w) {
    return Vector(w.begin() + static_cast<std::ptrdiff_t>(L.idx.uq_dim()), w.end());
}

Subspace sym_projection(const WLayout& L, const Subspace& S) {
    std::vector<Vector> g;
    for (const auto& v : S.vectors()) g.push_back(sym_part(L, v));
    return Subspace::span(g, L.idx.sym_dim());
}

} // namespace

ZTangentReport z_tangent(const WLayout& L, const ZPoint& p) {
    if (p.t.is_zero()) throw std::invalid_argument("z_tangent: needs t != 0 (points of E use the blowup chart)");
    ZTangentReport r;
    r.tangent = Subspace::column_space(z_jacobian(L, p));
    r.intersection_with_uq = intersect(r.tangent, L.uq_block());
    r.epsilon_image = sym_projection(L, r.tangent);
    const std::size_t m = L.m, n = L.n;
    r.checks.add("z.tangent_dim", r.tangent.dim() == m + n, dim_text(m + n), dim_text(r.tangent.dim()),
                 "dim T_w Z^ = m + n");
    r.checks.add("z.tangent_cap_uq", r.intersection_with_uq == u_times_q(L, p.u), "u (x) Q",
                 "dim " + dim_text(r.intersection_with_uq.dim()), "(U (x) Q) cap T_w Z^ = u (x) Q");
    r.checks.add("z.epsilon_image", r.epsilon_image == sym_projection(L, u_dot_u(L, p.u)), "u . U",
                 "dim " + dim_text(r.epsilon_image.dim()), "epsilon(T_w Z^) = u . U");
    r.checks.add("z.tangent_sequence_exact", r.intersection_with_uq.dim() + r.epsilon_image.dim() == r.tangent.dim(),
                 "(" + dim_text(n) + ", " + dim_text(m + n) + ", " + dim_text(m) + ")",
                 "(" + dim_text(r.intersection_with_uq.dim()) + ", " + dim_text(r.tangent.dim()) + ", " +
                     dim_text(r.epsilon_image.dim()) + ")",
                 "0 -> u (x) Q -> T_w Z^ -> u . U -> 0");
    return r;
}

Vector projective_normalize(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return scale(Scalar(1) / x, v);
    throw std::invalid_argument("projective_normalize: zero vector");
}

Vector beta_map(const WLayout& L, const ZPoint& p) {
    Vector qu(L.n + L.m);
    for (std::size_t a = 0; a < L.n; ++a) qu[a] = p.q[a];
    for (std::size_t i = 0; i < L.m; ++i) qu[L.n + i] = p.t * p.u[i];
    return projective_normalize(qu);
}

Vector beta_of_w(const WLayout& L, const Vector& w) {
    const std::size_t m = L.m, n = L.n;
    Vector qu(n + m);
    // w = u (x) q + t u^2; the Sym^2 part is t u u^T
    for (std::size_t r = 0; r < m; ++r) {
        const Scalar& srr = w[L.sym(r, r)];
        if (srr.is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a) qu[a] = w[L.uq(r, a)] / srr;
        for (std::size_t i = 0; i < m; ++i) qu[n + i] = (i == r ? srr : half() * w[L.sym(r, i)]) / srr;
        return projective_normalize(qu);
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t a = 0; a < n; ++a)
            if (!w[L.uq(r, a)].is_zero()) {
                for (std::size_t b = 0; b < n; ++b) qu[b] = w[L.uq(r, b)];
                return projective_normalize(qu);
            }
    throw std::invalid_argument("beta_of_w: zero vector");
}

Vector phi_on_qu(const WLayout& L, const Matrix& phi, const Vector& qu) {
    Vector u(qu.begin() + static_cast<std::ptrdiff_t>(L.n), qu.end());
    Vector out = qu;
    Vector pu = phi * u;
    for (std::size_t a = 0; a < L.n; ++a) out[a] += pu[a];
    return projective_normalize(out);
}

namespace {

/// D^2 F(xi, eta) for parameters (b in Q, a in U, c).
Vector second_derivative(const WLayout& L, const ZPoint& p, const Vector& xi, const Vector& eta) {
    const std::size_t m = L.m, n = L.n;
    auto part = [&](const Vector& x, std::size_t off, std::size_t len) {
        return Vector(x.begin() + static_cast<std::ptrdiff_t>(off), x.begin() + static_cast<std::ptrdiff_t>(off + len));
    };
    Vector b1 = part(xi, 0, n), a1 = part(xi, n, m), b2 = part(eta, 0, n), a2 = part(eta, n, m);
    const Scalar& c1 = xi[n + m];
    const Scalar& c2 = eta[n + m];
    Vector r = L.tensor(a1, b2);
    axpy(r, Scalar(1), L.tensor(a2, b1));
    axpy(r, Scalar(2) * p.t, L.product(a1, a2));
    axpy(r, Scalar(2) * c1, L.product(p.u, a2));
    axpy(r, Scalar(2) * c2, L.product(p.u, a1));
    return r;
}

/// II vanishes identically on S (polarized), with S inside T.
bool vanishes_on(const WLayout& L, const ZPoint& p, const Matrix& J, const Subspace& T, const Subspace& S) {
    std::vector<Vector> lifts;
    for (const auto& v : S.vectors()) {
        auto x = solve(J, v);
        if (!x) return false;
        lifts.push_back(*x);
    }
    for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = i; j < lifts.size(); ++j)
            if (!T.contains(second_derivative(L, p, lifts[i], lifts[j]))) return false;
    return true;
}

} // namespace

SecondFundamentalForm second_fundamental_form(const WLayout& L, const ZPoint& p) {
    const std::size_t m = L.m, n = L.n, P = m + n + 1;
    SecondFundamentalForm out;
    Report& rep = out.checks;
    const bool at_e = p.t.is_zero();
    Matrix J = z_jacobian(L, p);
    Subspace T = Subspace::column_space(J);
    if (T.dim() != m + n) throw std::logic_error("second_fundamental_form: parametrization is not immersive here");
    out.normal_dim = L.dim() - T.dim();

    // II is well defined on T: D^2 F(ker J, .) lies in T
    Subspace K = kernel_basis(J);
    bool defined = true;
    for (const auto& k : K.vectors())
        for (std::size_t l = 0; l < P && defined; ++l)
            defined = T.contains(second_derivative(L, p, k, unit_vector(P, l)));
    rep.add("z.II_well_defined", defined, "D^2F(ker dF, .) in T", defined ? "in T" : "outside T",
            "II descends to T_w Z^ / w");

    std::vector<Vector> span = T.vectors();
    std::vector<std::vector<Vector>> H(P, std::vector<Vector>(P));
    for (std::size_t k = 0; k < P; ++k)
        for (std::size_t l = k; l < P; ++l) {
            H[k][l] = H[l][k] = second_derivative(L, p, unit_vector(P, k), unit_vector(P, l));
            span.push_back(H[k][l]);
        }
    out.rank = Subspace::span(span, L.dim()).dim() - T.dim();

    // rho: W -> Sym^2 U / (u . U) kills T; its diagonal coordinates are squares of linear forms
    Subspace udotU = sym_projection(L, u_dot_u(L, p.u));
    bool rho_kills_t = true;
    for (const auto& v : T.vectors()) rho_kills_t = rho_kills_t && udotU.contains(sym_part(L, v));
    const auto free = udotU.free_columns();
    Subspace bound = Subspace::full(P);
    std::size_t used = 0;
    for (std::size_t c = 0; c < free.size(); ++c) {
        Matrix G(P, P);
        for (std::size_t k = 0; k < P; ++k)
            for (std::size_t l = 0; l < P; ++l) G(k, l) = udotU.quotient_coordinates(sym_part(L, H[k][l]))[c];
        const std::size_t rk = rank(G);
        if (rk != 1) continue;
        ++used;
        bound = intersect(bound, kernel_basis(G));
    }
    out.locus_bound = image(J, bound);
    rep.add("z.rho_kills_tangent", rho_kills_t, "rho(T) = 0", rho_kills_t ? "rho(T) = 0" : "rho(T) != 0",
            "normal projection Sym^2 U -> Sym^2 U / u . U");

    out.t_alpha = sum(u_times_q(L, p.u), Subspace::span({L.product(p.u, p.u)}, L.dim()));
    const bool alpha_in_locus = vanishes_on(L, p, J, T, out.t_alpha);
    rep.add("z.II_vanishes_on_T_alpha", alpha_in_locus, "II|T^alpha = 0", alpha_in_locus ? "0" : "nonzero",
            "the quadrics of II vanish on T^alpha");
    if (!at_e) {
        rep.add("z.II_rank", out.rank == out.normal_dim, dim_text(out.normal_dim), dim_text(out.rank),
                "II surjects onto the normal space");
        const bool eq = out.locus_bound == out.t_alpha;
        rep.add("z.base_locus_equals_T_alpha", eq && alpha_in_locus,
                "base locus = T^alpha (dim " + dim_text(out.t_alpha.dim()) + ")",
                "bound dim " + dim_text(out.locus_bound.dim()) + " from " + std::to_string(used) + " rank-one quadrics",
                "the base locus of II is T^alpha");
    } else {
        out.t_beta = Subspace::column_space([&] {
            std::vector<Vector> g;
            for (std::size_t i = 0; i < m; ++i) g.push_back(L.tensor(unit_vector(m, i), p.q));
            return Matrix::from_columns(g, L.dim());
        }());
        const bool beta_in_locus = vanishes_on(L, p, J, T, *out.t_beta);
        const bool beta_outside = !out.t_alpha.contains(*out.t_beta);
        rep.add("z.II_vanishes_on_T_beta", beta_in_locus, "II|T^beta = 0", beta_in_locus ? "0" : "nonzero",
                "at e in E the base locus includes T^beta");
        rep.add("z.base_locus_exceeds_T_alpha", alpha_in_locus && beta_in_locus && beta_outside,
                "T^alpha + T^beta in the base locus, T^beta not in T^alpha",
                std::string(beta_outside ? "T^beta not in T^alpha" : "T^beta in T^alpha"),
                "at e in E the base locus strictly contains T^alpha");
    }
    return out;
}

SymmetrySampler::SymmetrySampler(std::size_t m, std::size_t n, std::uint64_t seed, std::size_t random_points)
    : layout_(m, n) {
    std::set<Vector> seen;
    auto add = [&](const Vector& u, const Vector& q, const Scalar& t) {
        if (is_zero(u) || (is_zero(q) && t.is_zero())) return;
        ZPoint p = z_embed(layout_, u, q, t);
        if (!seen.insert(projective_normalize(p.w)).second) return;
        Subspace T = Subspace::column_space(z_jacobian(layout_, p));
        points_.push_back(p.w);
        tangents_.push_back(std::move(T));
    };
    const long long palette[] = {0, 1, -1, 2};
    const std::size_t k = m + n + 1;
    std::vector<std::size_t> digit(k, 0);
    while (true) {
        Vector u(m), q(n);
        for (std::size_t i = 0; i < m; ++i) u[i] = palette[digit[i]];
        for (std::size_t a = 0; a < n; ++a) q[a] = palette[digit[m + a]];
        add(u, q, Scalar(palette[digit[k - 1]]));
        std::size_t pos = 0;
        while (pos < k && ++digit[pos] == 4) digit[pos++] = 0;
        if (pos == k) break;
    }
    Rng rng(seed);
    for (std::size_t s = 0; s < random_points; ++s) {
        Vector u = rng.vector(m, -3, 3);
        if (is_zero(u)) u[0] = 1;
        add(u, rng.vector(n, -3, 3), Scalar(rng.integer(-3, 3)));
    }
}

std::optional<std::size_t> SymmetrySampler::first_violation(const Matrix& X) const {
    if (X.rows() != layout_.dim() || X.cols() != layout_.dim())
        throw std::invalid_argument("symmetry_check: endomorphism of the wrong size");
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (!tangents_[i].contains(X * points_[i])) return i;
    return std::nullopt;
}

bool symmetry_check(const SymmetrySampler& S, const Matrix& X) { return S.check(X); }

} // namespace tanaka
