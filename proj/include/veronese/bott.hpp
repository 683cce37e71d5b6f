#pragma once

#include <utility>

#include "veronese/weights.hpp"

namespace veronese {

/// Result of the cohomology recipe for the bundle S_mu(R) (x) Q^r on the
/// projective space of a rank-n space: either everything vanishes, or exactly
/// one cohomological degree survives and carries a single irreducible.
struct BottOutcome {
    bool vanishing = true;
    Int degree = -1;   // l in 0..n-1, meaningful when !vanishing
    IntVec weight;     // dominant, length n, meaningful when !vanishing

    static BottOutcome vanish() { return BottOutcome{}; }
    static BottOutcome cohomology(Int l, IntVec lam) {
        BottOutcome o;
        o.vanishing = false;
        o.degree = l;
        o.weight = std::move(lam);
        return o;
    }

    bool operator==(const BottOutcome& o) const {
        if (vanishing != o.vanishing) return false;
        return vanishing || (degree == o.degree && weight == o.weight);
    }
};

/// The recipe: with sentinels mu_0 = +inf and mu_n = -inf, cohomology
/// vanishes iff r = mu_i - i for some i in 1..n-1; otherwise the unique l
/// with mu_l - l > r > mu_{l+1} - (l+1) survives, carrying the weight
/// (mu_1-1, ..., mu_l-1, r+l, mu_{l+1}, ..., mu_{n-1}).
inline BottOutcome bott(const IntVec& mu, Int r, Int n) {
    if (static_cast<Int>(mu.size()) != n - 1)
        throw DomainError("bott: mu must have length n-1");
    if (!is_nonincreasing(mu))
        throw DomainError("bott: mu " + weight_to_string(mu) + " is not dominant");

    for (Int i = 1; i <= n - 1; ++i)
        if (r == mu[static_cast<std::size_t>(i - 1)] - i) return BottOutcome::vanish();

    // linear scan for the sandwiching degree; n stays small at desk scale
    Int l = n - 1;
    for (Int cand = 0; cand <= n - 1; ++cand) {
        const bool above = cand == 0 || mu[static_cast<std::size_t>(cand - 1)] - cand > r;
        const bool below = cand == n - 1 || r > mu[static_cast<std::size_t>(cand)] - (cand + 1);
        if (above && below) {
            l = cand;
            break;
        }
    }
    IntVec lam;
    lam.reserve(static_cast<std::size_t>(n));
    for (Int i = 0; i < l; ++i) lam.push_back(checked_sub(mu[static_cast<std::size_t>(i)], 1));
    lam.push_back(checked_add(r, l));
    for (Int i = l; i < n - 1; ++i) lam.push_back(mu[static_cast<std::size_t>(i)]);
    return BottOutcome::cohomology(l, std::move(lam));
}

/// Inverse form: the unique (mu, r) whose degree-l cohomology is the
/// irreducible indexed by lam.
inline std::pair<IntVec, Int> bott_inverse(const DominantWeight& lam, Int l) {
    const Int n = lam.n();
    if (l < 0 || l > n - 1) throw DomainError("bott_inverse: l out of range");
    return {tilde_lambda_sup_i(lam, l + 1), checked_sub(lam.part(l + 1), l)};
}

// Serre-duality companion at the recipe level:
//   bott(mu, r, n) = cohomology(l, lam)
//     <=> bott(serre_dual_mu(mu), serre_dual_r(r, n), n)
//           = cohomology(n-1-l, serre_dual_weight(lam)).
// The twists are frozen from the smallest cases: for n = 2, mu = (0), r = 0
// gives (l=0, lam=(0,0)), and the dual side bott((0), -2, 2) gives
// (l=1, lam=(-1,-1)); for n = 3, mu = (2,0), r = -3 gives (l=2, lam=(1,-1,-1))
// and bott((0,-2), 0, 3) gives (l=0, lam=(0,0,-2)) = dual - (1,1,1).

inline IntVec serre_dual_mu(const IntVec& mu) { return dual(mu); }

inline Int serre_dual_r(Int r, Int n) { return checked_sub(checked_sub(0, r), n); }

inline IntVec serre_dual_weight(const IntVec& lam) { return det_twist(dual(lam), -1); }

} // namespace veronese
