#pragma once

#include <string>
#include <vector>

#include "veronese/charpoly.hpp"
#include "veronese/parallel.hpp"
#include "veronese/weights.hpp"

namespace veronese {

/// Multiplicity of the irreducible indexed by lam (a partition with n parts)
/// inside the polynomial ring on degree-d forms, Sym(Sym^d C^n). Zero unless
/// |lam| is divisible by d.
inline Int s_mult(const DominantWeight& lam, Int d) {
    if (!lam.is_partition()) throw DomainError("s_mult requires a partition");
    if (d < 1) throw DomainError("s_mult requires d >= 1");
    const Int size = lam.size();
    if (size % d != 0) return 0;
    return mult_of(lam, *sym_power_decomposition(size / d, d, lam.n()));
}

/// Multiplicity carried by the image of multiplication by the linear forms:
/// s of lam - (d, 0, ..., 0), or 0 when the shift is not a partition.
inline Int a_pleth(const DominantWeight& lam, Int d) {
    if (!lam.is_partition()) throw DomainError("a_pleth requires a partition");
    IntVec shifted = add_k_delta(lam.parts(), -1, d);
    if (!is_nonincreasing(shifted) || shifted.back() < 0) return 0;
    return s_mult(DominantWeight(std::move(shifted)), d);
}

/// Primitive multiplicity p = s - a; never negative for genuine input.
inline Int p_mult(const DominantWeight& lam, Int d) {
    const Int s = s_mult(lam, d);
    const Int a = a_pleth(lam, d);
    const Int p = checked_sub(s, a);
    if (p < 0)
        throw VerificationError("internal inconsistency: p < 0 at " +
                                weight_to_string(lam.parts()) + " (s=" + std::to_string(s) +
                                ", a=" + std::to_string(a) + ")");
    return p;
}

/// Stable multiplicity of the irreducible indexed by mu inside
/// Sym(Sym^2) (x) ... (x) Sym(Sym^d) in len(mu) variables, at total degree
/// |mu|. Non-partitions count 0; the empty vector counts 1.
inline Int nu_stable(const IntVec& mu, Int d) {
    if (d < 2) throw DomainError("nu_stable requires d >= 2");
    if (mu.empty()) return 1;
    if (!is_nonincreasing(mu) || mu.back() < 0) return 0;
    const Int nvars = static_cast<Int>(mu.size());
    const Int size = vec_sum(mu);
    return mult_of(DominantWeight(mu), *graded_piece_decomposition(d, nvars, size));
}

/// Finite-level multiplicity of S_{mu[kd]} C^n inside Sym^k(Sym^d C^n);
/// zero when mu[kd] is not dominant.
inline Int nu_at_level(const IntVec& mu, Int k, Int d, Int n) {
    if (static_cast<Int>(mu.size()) != n - 1)
        throw DomainError("nu_at_level: mu must have length n-1");
    if (!is_nonincreasing(mu) || (!mu.empty() && mu.back() < 0))
        throw DomainError("nu_at_level: mu must be a partition");
    if (k < 0) throw DomainError("nu_at_level requires k >= 0");
    IntVec lam = mu_bracket_r(mu, checked_mul(k, d));
    if (!is_nonincreasing(lam)) return 0;
    return mult_of(DominantWeight(std::move(lam)), *sym_power_decomposition(k, d, n));
}

/// The alternating sum over i of nu of the derived length-(n-1) weights,
/// with sign (-1)^(n-i).
inline Int m_lambda(const DominantWeight& lam, Int d) {
    const Int n = lam.n();
    Int m = 0;
    for (Int i = 1; i <= n; ++i) {
        const Int nu = nu_stable(lambda_sup_i(lam, i, d), d);
        m = ((n - i) % 2 == 0) ? checked_add(m, nu) : checked_sub(m, nu);
    }
    return m;
}

/// Multiplicity of the irreducible indexed by lam inside
/// det(Sym^d W) (x) Sym(Sym^d W).
inline Int e_lambda(const DominantWeight& lam, Int d) {
    const Int u = u_d(lam.n(), d);
    IntVec shifted = det_twist(lam.parts(), -u);
    if (shifted.back() < 0) return 0;
    return s_mult(DominantWeight(std::move(shifted)), d);
}

/// Multiplicity of the irreducible indexed by lam inside D_j: zero off the
/// residue class |lam| == j (mod d); on it, m (plus (-1)^n e when j = 0).
/// A negative value would refute the computation and is reported loudly.
inline Int a_lambda_j(const DominantWeight& lam, Int j, Int d) {
    if (j < 0 || j >= d) throw DomainError("a_lambda_j requires 0 <= j < d");
    if (pos_mod(lam.size(), d) != j) return 0;
    Int a = m_lambda(lam, d);
    if (j == 0) {
        const Int e = e_lambda(lam, d);
        a = (lam.n() % 2 == 0) ? checked_add(a, e) : checked_sub(a, e);
    }
    if (a < 0)
        throw VerificationError("negative multiplicity a^" + std::to_string(j) + " = " +
                                std::to_string(a) + " at " + weight_to_string(lam.parts()));
    return a;
}

/// Closed-form membership test for the two d = 2 characters.
enum class D2Cell { none, D0, D1 };

inline D2Cell d2_table_predicate(const DominantWeight& lam) {
    const Int n = lam.n();
    const auto even = [](Int x) { return pos_mod(x, 2) == 0; };
    // all of lambda_1..lambda_{n-1} >= n, i.e. the next-to-last part when n >= 2
    const bool head_large = n < 2 || lam.part(n - 1) >= n;
    if (!head_large) return D2Cell::none;
    bool head_even = true, head_odd = true;
    for (Int i = 1; i <= n - 1; ++i) {
        if (even(lam.part(i))) head_odd = false;
        else head_even = false;
    }
    const Int last = lam.part(n);
    if (n % 2 == 0) {
        if (head_even && even(last)) return D2Cell::D0;
        if (head_even && !even(last) && last <= n - 1) return D2Cell::D1;
    } else {
        if (head_odd && even(last) && last <= n - 1) return D2Cell::D0;
        if (head_odd && !even(last)) return D2Cell::D1;
    }
    return D2Cell::none;
}

/// All dominant weights inside the window, in ascending lexicographic order.
inline std::vector<IntVec> enumerate_window(const WeightWindow& w) {
    std::vector<IntVec> out;
    if (w.empty_bounds()) return out;
    IntVec cur(static_cast<std::size_t>(w.n), 0);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t pos, Int hi) {
        if (pos == cur.size()) {
            if (!w.residue || pos_mod(vec_sum(cur), w.residue->second) == w.residue->first)
                out.push_back(cur);
            return;
        }
        for (Int v = w.lambdan_min; v <= hi; ++v) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, w.lambda1_max);
    return out;
}

namespace detail {

/// Fill the plethysm caches a window sweep will hit, before fanning out.
inline void warm_caches_for_window(const WeightWindow& w, Int d) {
    const Int n = w.n;
    if (w.empty_bounds()) return;
    const Int u = u_d(n, d);
    if (n >= 2) {
        const Int entry_max = std::max<Int>(0, w.lambda1_max + 1 - u);
        const Int tail_deg_max = checked_mul(n - 1, entry_max);
        for (Int t = 0; t <= tail_deg_max; ++t) graded_piece_decomposition(d, n - 1, t);
    }
    const Int shift_max = checked_mul(n, std::max<Int>(0, w.lambda1_max - u));
    for (Int k = 0; k <= shift_max / d; ++k) sym_power_decomposition(k, d, n);
}

} // namespace detail

/// The windowed character of D_j: every dominant weight in the window with
/// |lambda| == j (mod d) and a nonzero multiplicity.
inline VirtualCharacter dj_character(Int j, Int d, const WeightWindow& window,
                                     int threads = 1) {
    if (j < 0 || j >= d) throw DomainError("dj_character requires 0 <= j < d");
    WeightWindow w = window;
    if (w.residue && *w.residue != std::make_pair(j, d))
        throw DomainError("window residue conflicts with the requested j");
    w.residue = std::make_pair(j, d);

    detail::warm_caches_for_window(w, d);
    const std::vector<IntVec> lams = enumerate_window(w);
    std::vector<Int> mults(lams.size(), 0);
    parallel_for(lams.size(), threads, [&](std::size_t i) {
        mults[i] = a_lambda_j(DominantWeight(lams[i]), j, d);
    });

    VirtualCharacter out(w.n, w);
    for (std::size_t i = 0; i < lams.size(); ++i)
        if (mults[i] != 0) out.add(lams[i], mults[i]);
    return out;
}

/// The windowed character of the module supported at the origin,
/// det(Sym^d W) (x) Sym(Sym^d W).
inline VirtualCharacter e_character(Int d, const WeightWindow& window,
                                    int threads = 1) {
    detail::warm_caches_for_window(window, d);
    const std::vector<IntVec> lams = enumerate_window(window);
    std::vector<Int> mults(lams.size(), 0);
    parallel_for(lams.size(), threads, [&](std::size_t i) {
        mults[i] = e_lambda(DominantWeight(lams[i]), d);
    });

    VirtualCharacter out(window.n, window);
    for (std::size_t i = 0; i < lams.size(); ++i)
        if (mults[i] != 0) out.add(lams[i], mults[i]);
    return out;
}

/// A named multiplicity table: header metadata plus windowed entries, the
/// common shape for serialization.
struct MultiplicityTable {
    std::string kind; // "D0".."D5", "E", "ext", ...
    Int n = 1;
    Int d = 2;
    std::optional<Int> j;
    VirtualCharacter entries;

    MultiplicityTable(std::string kind_, Int n_, Int d_, std::optional<Int> j_,
                      VirtualCharacter entries_)
        : kind(std::move(kind_)), n(n_), d(d_), j(j_), entries(std::move(entries_)) {}
};

} // namespace veronese
