#include "tanaka/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace tanaka {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch (" +
                                    std::to_string(a.ambient_dim()) + " vs " +
                                    std::to_string(b.ambient_dim()) + ")");
}

Matrix rows_matrix(const Subspace& s) { return Matrix::from_rows(s.vectors(), s.ambient_dim()); }

} // namespace

Subspace Subspace::full(std::size_t ambient) {
    std::vector<std::size_t> idx(ambient);
    for (std::size_t i = 0; i < ambient; ++i) idx[i] = i;
    return coordinate(idx, ambient);
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix m = Matrix::from_rows(vectors, ambient);
    s.pivots_ = rref_in_place(m);
    s.rows_.reserve(s.pivots_.size());
    for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.rows_.push_back(m.row(i));
    return s;
}

Subspace Subspace::column_space(const Matrix& m) {
    Matrix t = m.transpose();
    Subspace s(m.rows());
    s.pivots_ = rref_in_place(t);
    for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.rows_.push_back(t.row(i));
    return s;
}

Subspace Subspace::coordinate(const std::vector<std::size_t>& indices, std::size_t ambient) {
    std::vector<std::size_t> idx = indices;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    Subspace s(ambient);
    for (std::size_t i : idx) {
        if (i >= ambient) throw std::out_of_range("coordinate subspace index out of range");
        s.rows_.push_back(unit_vector(ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Matrix Subspace::basis() const { return Matrix::from_columns(rows_, ambient_); }

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: vector length mismatch");
    Vector r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (r[pivots_[i]].is_zero()) continue;
        Scalar f = r[pivots_[i]];
        const Vector& row = rows_[i];
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (!row[j].is_zero()) r[j].sub_mul(f, row[j]);
    }
    return r;
}

bool Subspace::contains(const Vector& v) const { return tanaka::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    require_same_ambient(*this, other, "contains");
    if (other.dim() > dim()) return false;
    for (const auto& v : other.rows_)
        if (!contains(v)) return false;
    return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) return std::nullopt;
    Vector c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> f;
    std::size_t p = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (p < pivots_.size() && pivots_[p] == j) {
            ++p;
            continue;
        }
        f.push_back(j);
    }
    return f;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
    Vector r = reduce(v);
    std::vector<std::size_t> f = free_columns();
    Vector q(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) q[i] = r[f[i]];
    return q;
}

Subspace kernel_basis(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> piv = rref_in_place(a);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : piv) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            if (!a(i, f).is_zero()) v[piv[i]] = -a(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(vecs, n);
}

Subspace annihilator(const Subspace& s) {
    if (s.is_zero()) return Subspace::full(s.ambient_dim());
    return kernel_basis(rows_matrix(s));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect");
    if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    Subspace aa = annihilator(a), ab = annihilator(b);
    std::vector<Vector> rows = aa.vectors();
    rows.insert(rows.end(), ab.vectors().begin(), ab.vectors().end());
    return kernel_basis(Matrix::from_rows(rows, a.ambient_dim()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Vector> rows = a.vectors();
    rows.insert(rows.end(), b.vectors().begin(), b.vectors().end());
    return Subspace::span(rows, a.ambient_dim());
}

Subspace sum(const std::vector<Subspace>& parts, std::size_t ambient) {
    std::vector<Vector> rows;
    for (const auto& p : parts) {
        if (p.ambient_dim() != ambient) throw std::invalid_argument("sum: ambient dimension mismatch");
        rows.insert(rows.end(), p.vectors().begin(), p.vectors().end());
    }
    return Subspace::span(rows, ambient);
}

bool contains(const Subspace& outer, const Subspace& inner) { return outer.contains(inner); }

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw std::invalid_argument("image: shape mismatch");
    std::vector<Vector> v;
    v.reserve(s.dim());
    for (const auto& b : s.vectors()) v.push_back(m * b);
    return Subspace::span(v, m.rows());
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw std::invalid_argument("preimage: shape mismatch");
    Subspace ann = annihilator(s);
    if (ann.is_zero()) return Subspace::full(m.cols());
    return kernel_basis(rows_matrix(ann) * m);
}

Subspace complement_in(const Subspace& sub, const Subspace& sup) {
    require_same_ambient(sub, sup, "complement_in");
    std::vector<Vector> res;
    for (const auto& v : sup.vectors()) {
        Vector r = sub.reduce(v);
        if (!is_zero(r)) res.push_back(std::move(r));
    }
    Subspace c = Subspace::span(res, sup.ambient_dim());
    if (c.dim() + sub.dim() != sup.dim()) throw std::logic_error("complement_in: sub is not contained in sup");
    return c;
}

Subspace kron(const Subspace& a, const Subspace& b) {
    // Kronecker products of reduced echelon rows are again reduced, and the
    // (i, j) order matches the order of their pivots.
    std::vector<Vector> rows;
    rows.reserve(a.dim() * b.dim());
    for (const auto& x : a.vectors())
        for (const auto& y : b.vectors()) rows.push_back(kron(x, y));
    return Subspace::span(rows, a.ambient_dim() * b.ambient_dim());
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    std::vector<std::size_t> piv = rref_in_place(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
    return x;
}

CoordinateSolver::CoordinateSolver(const Matrix& columns) : dim_(columns.cols()), ambient_(columns.rows()) {
    Matrix aug(ambient_, dim_ + ambient_);
    aug.set_block(0, 0, columns);
    aug.set_block(0, dim_, Matrix::identity(ambient_));
    std::vector<std::size_t> piv = rref_in_place(aug);
    for (std::size_t i = 0; i < dim_; ++i)
        if (i >= piv.size() || piv[i] != i) throw std::invalid_argument("CoordinateSolver: columns are dependent");
    transform_ = aug.block(0, dim_, ambient_, ambient_);
}

std::optional<Vector> CoordinateSolver::solve(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("CoordinateSolver: length mismatch");
    Vector y = transform_ * v;
    for (std::size_t i = dim_; i < ambient_; ++i)
        if (!y[i].is_zero()) return std::nullopt;
    y.resize(dim_);
    return y;
}

Vector CoordinateSolver::coordinates(const Vector& v) const {
    auto x = solve(v);
    if (!x) throw std::logic_error("CoordinateSolver: vector outside the span");
    return *x;
}

} // namespace tanaka
