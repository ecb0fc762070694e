#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tanaka/presymplectic.hpp"
#include "tanaka/random.hpp"
#include "tanaka/subspace.hpp"

namespace tanaka {

bool is_isotropic(const Subspace& W, const PresymplecticSpace& P);

/// dim(W cap Null) when W is isotropic, nullopt otherwise.
std::optional<std::size_t> stratum_index(const Subspace& W, const PresymplecticSpace& P);

/// (1/2)(m-k)(2 dimV - 3m + 3k + 1) + k(n_omega - m), cross-checked against
/// stratum_dim_decomposition. Requires 4 <= 2m <= dimV - n_omega, dimV - n_omega
/// even and 0 <= k <= min(m, n_omega).
long long stratum_dim(long long m, long long dimV, long long n_omega, long long k);
/// k(n-k) + (1/2)(m-k)(2(dimV-n) - 3(m-k) + 1) + (m-k)(n-k) with n = n_omega.
long long stratum_dim_decomposition(long long m, long long dimV, long long n_omega, long long k);
bool stratum_params_admissible(long long m, long long dimV, long long n_omega, long long k);

/// {v : omega(v, w) = 0 for all w in W}
Subspace perp(const Subspace& W, const PresymplecticSpace& P);

struct IsotropicFlag {
    PresymplecticSpace space;
    Subspace w_minus, w_plus;
};

/// Throws unless W_- is isotropic, W_- in W_+ and dim W_+ = dim W_- + 2.
void validate_flag(const IsotropicFlag& F);

/// W_+ contained in perp(W_-).
bool is_line(const IsotropicFlag& F);

struct PencilSample {
    std::vector<Subspace> members;
    std::vector<bool> isotropic;
    bool all_isotropic = true;
};

/// Members W_- + span(x + t y), t in {0, 1, -1, 2, 3}, of the pencil between W_- and W_+.
PencilSample pencil_oracle(const IsotropicFlag& F);

/// Random isotropic W_- of dim m-1 and W_+ of dim m+1 over it; about half of the
/// flags take W_+ inside perp(W_-).
IsotropicFlag random_flag(const PresymplecticSpace& P, std::size_t m, Rng& rng);

/// Random isotropic subspace of the given dimension (entries in [-2, 2]).
Subspace random_isotropic(const PresymplecticSpace& P, std::size_t dim, Rng& rng);

/// E + (Usub in the first dimV - n_omega coordinates); E inside Null, Usub isotropic
/// for the nondegenerate part. Throws on violated preconditions.
Subspace sigma_point(const Subspace& E, const Subspace& Usub, const PresymplecticSpace& P);

/// omega' = omega on H x V for a complement H of Null containing W, plus a maximally
/// nondegenerate normal-form sigma on Null. Requires stratum_index(W) = 0.
PresymplecticSpace extend_omega(const Subspace& W, const PresymplecticSpace& P);

} // namespace tanaka
