#include "tanaka/grass.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tanaka {

namespace {

void require_ambient(const Subspace& W, const PresymplecticSpace& P, const char* what) {
    if (W.ambient_dim() != P.dim())
        throw std::invalid_argument(std::string(what) + ": subspace lives in dimension " +
                                    std::to_string(W.ambient_dim()) + ", form in dimension " + std::to_string(P.dim()));
}

} // namespace

bool is_isotropic(const Subspace& W, const PresymplecticSpace& P) {
    require_ambient(W, P, "is_isotropic");
    const auto& b = W.vectors();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!P.form(b[i], b[j]).is_zero()) return false;
    return true;
}

std::optional<std::size_t> stratum_index(const Subspace& W, const PresymplecticSpace& P) {
    if (!is_isotropic(W, P)) return std::nullopt;
    return intersect(W, null_space(P)).dim();
}

bool stratum_params_admissible(long long m, long long dimV, long long n, long long k) {
    return 4 <= 2 * m && 2 * m <= dimV - n && n >= 0 && (dimV - n) % 2 == 0 && 0 <= k && k <= std::min(m, n);
}

long long stratum_dim_decomposition(long long m, long long dimV, long long n, long long k) {
    long long a = m - k;
    // the bracketed factor a(2(dimV-n) - 3a + 1) is always even
    return k * (n - k) + a * (2 * (dimV - n) - 3 * a + 1) / 2 + a * (n - k);
}

long long stratum_dim(long long m, long long dimV, long long n, long long k) {
    if (!(4 <= 2 * m)) throw std::invalid_argument("stratum_dim: needs 4 <= 2m");
    if (!(2 * m <= dimV - n)) throw std::invalid_argument("stratum_dim: needs 2m <= dim V - n_omega");
    if ((dimV - n) % 2 != 0) throw std::invalid_argument("stratum_dim: dim V - n_omega must be even");
    if (!(0 <= k && k <= std::min(m, n))) throw std::invalid_argument("stratum_dim: needs 0 <= k <= min(m, n_omega)");
    long long v = (m - k) * (2 * dimV - 3 * m + 3 * k + 1) / 2 + k * (n - m);
    if (v != stratum_dim_decomposition(m, dimV, n, k))
        throw std::logic_error("stratum_dim: closed formula disagrees with the fiber-bundle count");
    return v;
}

Subspace perp(const Subspace& W, const PresymplecticSpace& P) {
    require_ambient(W, P, "perp");
    if (W.is_zero()) return Subspace::full(P.dim());
    // omega(v, w) = v^T (Omega w)
    std::vector<Vector> rows;
    for (const auto& w : W.vectors()) rows.push_back(P.omega() * w);
    return kernel_basis(Matrix::from_rows(rows, P.dim()));
}

void validate_flag(const IsotropicFlag& F) {
    require_ambient(F.w_minus, F.space, "flag");
    require_ambient(F.w_plus, F.space, "flag");
    if (!is_isotropic(F.w_minus, F.space)) throw std::invalid_argument("flag: W_- is not isotropic");
    if (!F.w_plus.contains(F.w_minus)) throw std::invalid_argument("flag: W_- is not contained in W_+");
    if (F.w_plus.dim() != F.w_minus.dim() + 2) throw std::invalid_argument("flag: dim W_+ must be dim W_- + 2");
}

bool is_line(const IsotropicFlag& F) {
    validate_flag(F);
    return perp(F.w_minus, F.space).contains(F.w_plus);
}

PencilSample pencil_oracle(const IsotropicFlag& F) {
    validate_flag(F);
    Subspace c = complement_in(F.w_minus, F.w_plus);
    const Vector& x = c.vector(0);
    const Vector& y = c.vector(1);
    PencilSample out;
    for (long long t : {0, 1, -1, 2, 3}) {
        std::vector<Vector> gens = F.w_minus.vectors();
        Vector v = x;
        axpy(v, Scalar(t), y);
        gens.push_back(v);
        Subspace W = Subspace::span(gens, F.space.dim());
        bool iso = is_isotropic(W, F.space);
        out.members.push_back(std::move(W));
        out.isotropic.push_back(iso);
        out.all_isotropic = out.all_isotropic && iso;
    }
    return out;
}

namespace {

Vector random_in(const Subspace& S, Rng& rng) {
    Vector v(S.ambient_dim());
    for (const auto& b : S.vectors()) axpy(v, Scalar(rng.integer(-2, 2)), b);
    return v;
}

} // namespace

Subspace random_isotropic(const PresymplecticSpace& P, std::size_t dim, Rng& rng) {
    Subspace S = Subspace::zero(P.dim());
    std::size_t attempts = 0;
    while (S.dim() < dim) {
        Subspace room = perp(S, P);
        if (room.dim() == S.dim()) throw std::invalid_argument("random_isotropic: no isotropic subspace of that dimension");
        Vector v = random_in(room, rng);
        if (!S.contains(v)) {
            std::vector<Vector> g = S.vectors();
            g.push_back(v);
            S = Subspace::span(g, P.dim());
        }
        if (++attempts > 1000 * (dim + 1)) throw std::runtime_error("random_isotropic: sampling failed");
    }
    return S;
}

IsotropicFlag random_flag(const PresymplecticSpace& P, std::size_t m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("random_flag: m >= 1");
    IsotropicFlag F;
    F.space = P;
    F.w_minus = random_isotropic(P, m - 1, rng);
    const bool inside = rng.integer(0, 1) == 1;
    Subspace room = inside ? perp(F.w_minus, P) : Subspace::full(P.dim());
    Subspace W = F.w_minus;
    std::size_t attempts = 0;
    while (W.dim() < m + 1) {
        Vector v = random_in(room, rng);
        if (!W.contains(v)) {
            std::vector<Vector> g = W.vectors();
            g.push_back(v);
            W = Subspace::span(g, P.dim());
        }
        if (++attempts > 10000) throw std::runtime_error("random_flag: sampling failed");
    }
    F.w_plus = W;
    return F;
}

Subspace sigma_point(const Subspace& E, const Subspace& Usub, const PresymplecticSpace& P) {
    require_ambient(E, P, "sigma_point");
    const std::size_t flat = P.rank();
    Subspace N = null_space(P);
    if (!N.contains(E)) throw std::invalid_argument("sigma_point: E is not inside Null_omega");
    if (Usub.ambient_dim() != flat)
        throw std::invalid_argument("sigma_point: Usub must live in the " + std::to_string(flat) +
                                    "-dimensional nondegenerate part");
    // V_flat is spanned by the first dimV - n_omega coordinates of the normal form
    for (std::size_t i = 0; i < flat; ++i)
        for (std::size_t j = 0; j < P.dim(); ++j)
            if (j >= flat && !P.omega()(i, j).is_zero())
                throw std::invalid_argument("sigma_point: form is not in normal form");
    std::vector<Vector> gens = E.vectors();
    for (const auto& u : Usub.vectors()) {
        Vector v(P.dim());
        std::copy(u.begin(), u.end(), v.begin());
        gens.push_back(std::move(v));
    }
    Subspace W = Subspace::span(gens, P.dim());
    auto k = stratum_index(W, P);
    if (!k) throw std::invalid_argument("sigma_point: Usub is not isotropic");
    if (*k != E.dim()) throw std::logic_error("sigma_point: stratum index differs from dim E");
    return W;
}

PresymplecticSpace extend_omega(const Subspace& W, const PresymplecticSpace& P) {
    auto k = stratum_index(W, P);
    if (!k || *k != 0) throw std::invalid_argument("extend_omega: W must be isotropic with W cap Null = 0");
    const std::size_t d = P.dim(), r = P.nullity();
    if (r == 0) return P;
    Subspace N = null_space(P);
    // H = W + standard basis vectors completing W + Null to V
    std::vector<Vector> H = W.vectors();
    Subspace acc = sum(W, N);
    for (std::size_t i = 0; i < d && acc.dim() < d; ++i) {
        Vector e = unit_vector(d, i);
        if (acc.contains(e)) continue;
        H.push_back(e);
        std::vector<Vector> g = acc.vectors();
        g.push_back(e);
        acc = Subspace::span(g, d);
    }
    std::vector<Vector> cols = H;
    for (const auto& z : N.vectors()) cols.push_back(z);
    CoordinateSolver solver(Matrix::from_columns(cols, d));
    // C v = Null-coordinates of v along H
    Matrix C(r, d);
    for (std::size_t j = 0; j < d; ++j) {
        Vector c = solver.coordinates(unit_vector(d, j));
        for (std::size_t i = 0; i < r; ++i) C(i, j) = c[H.size() + i];
    }
    Matrix sigma = PresymplecticSpace::with_nullity(r, r % 2).omega();
    return PresymplecticSpace(P.omega() + C.transpose() * sigma * C);
}

} // namespace tanaka
