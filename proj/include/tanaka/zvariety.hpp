#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tanaka/matrix.hpp"
#include "tanaka/models.hpp"
#include "tanaka/random.hpp"
#include "tanaka/report.hpp"
#include "tanaka/subspace.hpp"

namespace tanaka {

/// W = (U (x) Q) + Sym^2 U with the U (x) Q block first (lexicographic), then
/// the monomials e_i e_j, i <= j.
struct WLayout {
    std::size_t m = 0, n = 0;
    ModelIndex idx;
    WLayout(std::size_t m, std::size_t n);
    std::size_t dim() const { return idx.uq_dim() + idx.sym_dim(); }
    std::size_t uq(std::size_t i, std::size_t a) const { return idx.uq(i, a); }
    std::size_t sym(std::size_t i, std::size_t j) const { return idx.uq_dim() + idx.sym(i, j); }
    Vector tensor(const Vector& u, const Vector& q) const;
    /// u . v in Sym^2 U (u . u = u^2)
    Vector product(const Vector& u, const Vector& v) const;
    Subspace uq_block() const;
};

struct ZPoint {
    Vector u, q;
    Scalar t;
    Vector w;
    bool in_e() const { return t.is_zero(); }
};

/// w = u (x) q + t u^2. Throws if u = 0 or (q, t) = (0, 0).
ZPoint z_embed(const WLayout& L, const Vector& u, const Vector& q, const Scalar& t);

struct ZTangentReport {
    Subspace tangent;
    Subspace intersection_with_uq;
    Subspace epsilon_image;
    /// the three spaces agree with u (x) Q, the Jacobian span and u . U
    Report checks;
};

/// Columns d/dq_a, d/du_i, d/dt of the parametrization at p.
Matrix z_jacobian(const WLayout& L, const ZPoint& p);
/// Throws for t = 0.
ZTangentReport z_tangent(const WLayout& L, const ZPoint& p);

/// [(q, t u)] normalized so its first nonzero entry is 1, in Q + U coordinates.
Vector beta_map(const WLayout& L, const ZPoint& p);
/// beta of an arbitrary nonzero w in the cone, read off from its coordinates.
Vector beta_of_w(const WLayout& L, const Vector& w);
/// [q + u] -> [q + phi(u) + u] on P(Q + U)
Vector phi_on_qu(const WLayout& L, const Matrix& phi, const Vector& qu);
/// Projective normalization: first nonzero entry 1.
Vector projective_normalize(const Vector& v);

struct SecondFundamentalForm {
    std::size_t rank = 0;
    std::size_t normal_dim = 0;
    /// subspace cut out by the rank-one quadrics of the system; contains the base locus
    Subspace locus_bound;
    Subspace t_alpha;
    /// only at points of E
    std::optional<Subspace> t_beta;
    /// base locus = T^alpha (smooth points) or T^alpha + T^beta inside the locus (E)
    Report checks;
};

/// Second fundamental form from the 2-jet of (u, q, t) -> u (x) q + t u^2. At t = 0
/// the same chart is the blowup chart near E.
SecondFundamentalForm second_fundamental_form(const WLayout& L, const ZPoint& p);

/// Sample points of the cone with their tangent spaces.
class SymmetrySampler {
public:
    /// All (u, q, t) with entries in {0, +-1, 2}, u != 0, up to scaling of w, plus
    /// `random_points` seeded random points.
    SymmetrySampler(std::size_t m, std::size_t n, std::uint64_t seed = 0, std::size_t random_points = 50);
    const WLayout& layout() const { return layout_; }
    std::size_t size() const { return points_.size(); }
    /// X w in T_w for every sample; the first failing sample index otherwise.
    std::optional<std::size_t> first_violation(const Matrix& X) const;
    bool check(const Matrix& X) const { return !first_violation(X); }
    const Vector& point(std::size_t i) const { return points_.at(i); }

private:
    WLayout layout_;
    std::vector<Vector> points_;
    std::vector<Subspace> tangents_;
};

bool symmetry_check(const SymmetrySampler& S, const Matrix& X);

} // namespace tanaka
