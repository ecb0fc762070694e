#include "tanaka/presymplectic.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace tanaka {

PresymplecticSpace::PresymplecticSpace(Matrix omega) : omega_(std::move(omega)) {
    if (omega_.rows() != omega_.cols()) throw std::invalid_argument("PresymplecticSpace: form must be square");
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (omega_(i, j) != -omega_(j, i))
                throw std::invalid_argument("PresymplecticSpace: form is not antisymmetric");
    nullity_ = dim() - tanaka::rank(omega_);
}

PresymplecticSpace PresymplecticSpace::normal_form(std::size_t s, std::size_t r) {
    Matrix w(2 * s + r, 2 * s + r);
    for (std::size_t i = 0; i < s; ++i) {
        w(i, s + i) = 1;
        w(s + i, i) = -1;
    }
    return PresymplecticSpace(std::move(w));
}

PresymplecticSpace PresymplecticSpace::with_nullity(std::size_t dim, std::size_t nullity) {
    if (nullity > dim || (dim - nullity) % 2 != 0)
        throw std::invalid_argument("presymplectic space needs nullity <= dim and dim - nullity even");
    return normal_form((dim - nullity) / 2, nullity);
}

Scalar PresymplecticSpace::form(const Vector& u, const Vector& v) const { return dot(u, omega_ * v); }

Subspace null_space(const PresymplecticSpace& P) { return kernel_basis(P.omega()); }

MatrixLieAlgebra::MatrixLieAlgebra(std::size_t n, std::vector<Matrix> basis, bool verify)
    : n_(n), basis_(std::move(basis)) {
    std::vector<Vector> flat;
    for (const auto& b : basis_) {
        if (b.rows() != n || b.cols() != n) throw std::invalid_argument("MatrixLieAlgebra: wrong matrix size");
        flat.push_back(b.flat());
    }
    span_ = Subspace::span(flat, n * n);
    if (span_.dim() != basis_.size()) throw std::invalid_argument("MatrixLieAlgebra: basis is linearly dependent");
    solver_ = CoordinateSolver(Matrix::from_columns(flat, n * n));
    if (verify) {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i + 1; j < basis_.size(); ++j)
                if (!contains(commutator(basis_[i], basis_[j])))
                    throw std::invalid_argument("MatrixLieAlgebra: span is not closed under commutators");
    }
}

std::optional<Vector> MatrixLieAlgebra::coordinates(const Matrix& x) const { return solver_.solve(x.flat()); }

Matrix MatrixLieAlgebra::combination(const Vector& coeffs) const {
    if (coeffs.size() != basis_.size()) throw std::invalid_argument("combination: length mismatch");
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) m += coeffs[i] * basis_[i];
    return m;
}

namespace {

// Linear conditions omega(phi x, y) + omega(x, phi y) = 0 on phi restricted to the
// unknowns listed in `vars` (flattened indices i*n + j).
Subspace sp_conditions(const Matrix& w, const std::vector<std::size_t>& vars) {
    const std::size_t n = w.rows();
    std::map<std::size_t, std::size_t> col_of;
    for (std::size_t c = 0; c < vars.size(); ++c) col_of[vars[c]] = c;
    // (phi^T w + w phi)_{ab} = sum_i phi_{ia} w_{ib} + sum_j w_{aj} phi_{jb}
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Vector eq(vars.size());
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (w(i, b).is_zero()) continue;
                auto it = col_of.find(i * n + a);
                if (it == col_of.end()) continue;
                eq[it->second] += w(i, b);
                any = true;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (w(a, j).is_zero()) continue;
                auto it = col_of.find(j * n + b);
                if (it == col_of.end()) continue;
                eq[it->second] += w(a, j);
                any = true;
            }
            if (any) rows.push_back(std::move(eq));
        }
    Subspace k = rows.empty() ? Subspace::full(vars.size()) : kernel_basis(Matrix::from_rows(rows, vars.size()));
    // embed back into End(V)
    std::vector<Vector> emb;
    for (const auto& v : k.vectors()) {
        Vector e(n * n);
        for (std::size_t c = 0; c < vars.size(); ++c) e[vars[c]] = v[c];
        emb.push_back(std::move(e));
    }
    return Subspace::span(emb, n * n);
}

} // namespace

MatrixLieAlgebra sp_algebra(const PresymplecticSpace& P) {
    const std::size_t n = P.dim();
    std::vector<std::size_t> vars(n * n);
    for (std::size_t i = 0; i < n * n; ++i) vars[i] = i;
    Subspace s = sp_conditions(P.omega(), vars);
    std::vector<Matrix> basis;
    for (const auto& v : s.vectors()) basis.push_back(Matrix::unflatten(v, n, n));
    return MatrixLieAlgebra(n, std::move(basis));
}

std::vector<std::pair<int, Subspace>> sp_grading(const PresymplecticSpace& P, const VectorGrading& grading) {
    const std::size_t n = P.dim();
    const auto& deg = grading.degree_of;
    if (deg.size() != n) throw std::invalid_argument("sp_grading: grading does not partition V");
    std::optional<int> pair_sum;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (P.omega()(i, j).is_zero()) continue;
            int s = deg[i] + deg[j];
            if (pair_sum && *pair_sum != s)
                throw std::invalid_argument("sp_grading: grading incompatible with omega (pairs V_" +
                                            std::to_string(deg[i]) + " with V_" + std::to_string(deg[j]) + ")");
            pair_sum = s;
        }
    std::set<int> diffs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) diffs.insert(deg[i] - deg[j]);
    std::vector<std::pair<int, Subspace>> out;
    std::size_t total = 0;
    for (int k : diffs) {
        std::vector<std::size_t> vars;
        // E_ij sends e_j to e_i and has degree deg(i) - deg(j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (deg[i] - deg[j] == k) vars.push_back(i * n + j);
        Subspace piece = sp_conditions(P.omega(), vars);
        total += piece.dim();
        out.emplace_back(k, std::move(piece));
    }
    if (total != sp_algebra(P).dim()) throw std::logic_error("sp_grading: pieces do not add up to sp(V)");
    return out;
}

std::size_t sp_dimension_formula(std::size_t dim, std::size_t nullity) {
    std::size_t s = (dim - nullity) / 2;
    return (dim - nullity) * nullity + s * (2 * s + 1) + nullity * nullity;
}

} // namespace tanaka
