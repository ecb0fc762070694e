#include "tanaka/graded.hpp"

#include <set>
#include <stdexcept>

namespace tanaka {

GradedVectorSpace::GradedVectorSpace(std::vector<GradedComponent> components) : components_(std::move(components)) {
    std::set<std::string> seen;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        auto& comp = components_[c];
        if (c > 0 && comp.degree <= components_[c - 1].degree)
            throw std::invalid_argument("GradedVectorSpace: degrees must be strictly increasing");
        if (comp.labels.empty()) {
            for (std::size_t i = 0; i < comp.dim; ++i)
                comp.labels.push_back("g" + std::to_string(comp.degree) + "[" + std::to_string(i) + "]");
        }
        if (comp.labels.size() != comp.dim) throw std::invalid_argument("GradedVectorSpace: label count mismatch");
        offsets_.push_back(total_);
        for (const auto& l : comp.labels) {
            if (!seen.insert(l).second) throw std::invalid_argument("GradedVectorSpace: duplicate label " + l);
            labels_.push_back(l);
            degree_of_.push_back(comp.degree);
        }
        total_ += comp.dim;
    }
}

std::size_t GradedVectorSpace::dim(int degree) const {
    for (const auto& c : components_)
        if (c.degree == degree) return c.dim;
    return 0;
}

std::size_t GradedVectorSpace::offset(int degree) const {
    for (std::size_t c = 0; c < components_.size(); ++c)
        if (components_[c].degree == degree) return offsets_[c];
    throw std::out_of_range("GradedVectorSpace: no component of degree " + std::to_string(degree));
}

bool GradedVectorSpace::has_degree(int degree) const {
    for (const auto& c : components_)
        if (c.degree == degree) return true;
    return false;
}

int GradedVectorSpace::degree_of(std::size_t index) const { return degree_of_.at(index); }

const std::string& GradedVectorSpace::label(std::size_t index) const { return labels_.at(index); }

int GradedVectorSpace::min_degree() const {
    if (components_.empty()) throw std::logic_error("empty graded space");
    return components_.front().degree;
}

int GradedVectorSpace::max_degree() const {
    if (components_.empty()) throw std::logic_error("empty graded space");
    return components_.back().degree;
}

SparseVector to_sparse(const Vector& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
    Vector d(n);
    for (const auto& [i, x] : v) d.at(i) = x;
    return d;
}

GradedLieAlgebra::GradedLieAlgebra(GradedVectorSpace space)
    : space_(std::move(space)), table_(space_.total_dim() * space_.total_dim()) {}

void GradedLieAlgebra::set_bracket(std::size_t a, std::size_t b, const Vector& value) {
    if (value.size() != dim()) throw std::invalid_argument("set_bracket: length mismatch");
    table_.at(a * dim() + b) = to_sparse(value);
}

void GradedLieAlgebra::set_bracket_antisymmetric(std::size_t a, std::size_t b, const Vector& value) {
    set_bracket(a, b, value);
    set_bracket(b, a, scale(Scalar(-1), value));
}

void GradedLieAlgebra::set_constant(std::size_t a, std::size_t b, std::size_t d, const Scalar& value) {
    Vector v = bracket_basis(a, b);
    v.at(d) = value;
    set_bracket(a, b, v);
}

Vector GradedLieAlgebra::bracket_basis(std::size_t a, std::size_t b) const {
    return to_dense(table_.at(a * dim() + b), dim());
}

Vector GradedLieAlgebra::ad(std::size_t a, const Vector& v) const {
    Vector r(dim());
    for (std::size_t b = 0; b < dim(); ++b) {
        if (v[b].is_zero()) continue;
        for (const auto& [d, c] : table_[a * dim() + b]) r[d].sub_mul(-v[b], c);
    }
    return r;
}

Vector GradedLieAlgebra::bracket(const Vector& x, const Vector& y) const {
    Vector r(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < dim(); ++b) {
            if (y[b].is_zero()) continue;
            Scalar f = x[a] * y[b];
            for (const auto& [d, c] : table_[a * dim() + b]) r[d].sub_mul(-f, c);
        }
    }
    return r;
}

Matrix GradedLieAlgebra::ad_matrix(std::size_t a) const {
    Matrix m(dim(), dim());
    for (std::size_t b = 0; b < dim(); ++b)
        for (const auto& [d, c] : table_[a * dim() + b]) m(d, b) = c;
    return m;
}

bool GradedLieAlgebra::is_abelian() const {
    for (const auto& e : table_)
        if (!e.empty()) return false;
    return true;
}

Report check_graded_lie(const GradedLieAlgebra& L) {
    Report rep;
    const std::size_t n = L.dim();
    const auto& sp = L.space();

    // antisymmetry, including [e_a, e_a] = 0
    std::string anti_witness;
    std::size_t anti_bad = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Vector s = add(L.bracket_basis(a, b), L.bracket_basis(b, a));
            bool ok = a == b ? tanaka::is_zero(L.bracket_basis(a, a)) : tanaka::is_zero(s);
            if (!ok) {
                if (anti_bad++ == 0) anti_witness = "[" + sp.label(a) + ", " + sp.label(b) + "]";
            }
        }
    rep.add("antisymmetry", anti_bad == 0, "0 violating pairs",
            std::to_string(anti_bad) + " violating pairs" + (anti_bad ? ", first " + anti_witness : std::string()),
            "[x,y] = -[y,x]");

    // degree additivity
    std::size_t deg_bad = 0;
    std::string deg_witness;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int target = sp.degree_of(a) + sp.degree_of(b);
            for (const auto& [d, c] : L.bracket_sparse(a, b)) {
                if (sp.degree_of(d) != target) {
                    if (deg_bad++ == 0)
                        deg_witness = "[" + sp.label(a) + ", " + sp.label(b) + "] has a component on " + sp.label(d);
                }
            }
        }
    rep.add("degree_additivity", deg_bad == 0, "0 violations",
            std::to_string(deg_bad) + " violations" + (deg_bad ? ", first " + deg_witness : std::string()),
            "[g_i, g_j] in g_(i+j)");

    // Jacobi on all triples a <= b <= c
    std::size_t jac_bad = 0;
    std::string jac_witness;
    auto bracket_vec = [&](std::size_t a, const SparseVector& v) {
        Vector r(n);
        for (const auto& [b, x] : v)
            for (const auto& [d, c] : L.bracket_sparse(a, b)) r[d].sub_mul(-x, c);
        return r;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c) {
                Vector j = bracket_vec(a, L.bracket_sparse(b, c));
                Vector t2 = bracket_vec(b, L.bracket_sparse(c, a));
                Vector t3 = bracket_vec(c, L.bracket_sparse(a, b));
                for (std::size_t i = 0; i < n; ++i) {
                    j[i] += t2[i];
                    j[i] += t3[i];
                }
                if (!tanaka::is_zero(j)) {
                    if (jac_bad++ == 0)
                        jac_witness = "(" + sp.label(a) + ", " + sp.label(b) + ", " + sp.label(c) + ")";
                }
            }
    rep.add("jacobi", jac_bad == 0, "0 violating triples",
            std::to_string(jac_bad) + " violating triples" + (jac_bad ? ", first " + jac_witness : std::string()),
            "cyclic sum of [x,[y,z]] vanishes");
    return rep;
}

GradedLieAlgebra with_corrupted_constant(const GradedLieAlgebra& L, std::size_t which) {
    struct Entry {
        std::size_t a, b, d;
    };
    std::vector<Entry> entries;
    for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = a + 1; b < L.dim(); ++b)
            for (const auto& [d, c] : L.bracket_sparse(a, b)) entries.push_back({a, b, d});
    if (entries.empty()) throw std::invalid_argument("with_corrupted_constant: algebra is abelian");
    const Entry& e = entries[which % entries.size()];
    GradedLieAlgebra out = L;
    Scalar c = L.bracket_basis(e.a, e.b)[e.d] + Scalar(1);
    out.set_constant(e.a, e.b, e.d, c);
    out.set_constant(e.b, e.a, e.d, -c);
    return out;
}

} // namespace tanaka
