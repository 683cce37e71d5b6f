#pragma once

#include <algorithm>
#include <sstream>
#include <string>

#include "veronese/arith.hpp"

namespace veronese {

inline std::string weight_to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

/// A nonincreasing integer vector of fixed length n. Validity is checked at
/// construction; instances are immutable afterwards.
class DominantWeight {
public:
    explicit DominantWeight(IntVec parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw DomainError("dominant weight must have at least one part");
        if (!is_nonincreasing(parts_))
            throw DomainError("weight " + weight_to_string(parts_) + " is not nonincreasing");
    }

    const IntVec& parts() const { return parts_; }
    Int n() const { return static_cast<Int>(parts_.size()); }
    /// 1-based part access, matching the usual indexing of parts.
    Int part(Int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

    Int size() const { return vec_sum(parts_); }
    bool is_partition() const { return parts_.back() >= 0; }

    bool operator==(const DominantWeight& o) const { return parts_ == o.parts_; }

private:
    IntVec parts_;
};

/// u_d = C(n-1+d, n), the determinant exponent of the degree-d symmetric
/// power of an n-dimensional space.
inline Int u_d(Int n, Int d) {
    if (n < 1) throw DomainError("u_d requires n >= 1");
    if (d < 2) throw DomainError("u_d requires d >= 2");
    return checked_binomial(checked_add(n - 1, d), n);
}

/// n_d = C(n-1+d, d) - n, the codimension of the degree-d Veronese cone.
inline Int n_d(Int n, Int d) {
    if (n < 1) throw DomainError("n_d requires n >= 1");
    if (d < 2) throw DomainError("n_d requires d >= 2");
    return checked_sub(checked_binomial(checked_add(n - 1, d), d), n);
}

/// The length-(n-1) vector
///   (lambda_1+1-u_d, ..., lambda_{i-1}+1-u_d, lambda_{i+1}-u_d, ..., lambda_n-u_d).
/// Always nonincreasing; may have negative parts.
inline IntVec lambda_sup_i(const DominantWeight& lam, Int i, Int d) {
    const Int n = lam.n();
    if (i < 1 || i > n) throw DomainError("lambda_sup_i: index out of range");
    const Int u = u_d(n, d);
    IntVec out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (Int j = 1; j < i; ++j) out.push_back(checked_sub(checked_add(lam.part(j), 1), u));
    for (Int j = i + 1; j <= n; ++j) out.push_back(checked_sub(lam.part(j), u));
    return out;
}

/// (lambda_1+1, ..., lambda_{i-1}+1, lambda_{i+1}, ..., lambda_n); equals
/// lambda_sup_i shifted up by u_d in every coordinate.
inline IntVec tilde_lambda_sup_i(const DominantWeight& lam, Int i) {
    const Int n = lam.n();
    if (i < 1 || i > n) throw DomainError("tilde_lambda_sup_i: index out of range");
    IntVec out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (Int j = 1; j < i; ++j) out.push_back(checked_add(lam.part(j), 1));
    for (Int j = i + 1; j <= n; ++j) out.push_back(lam.part(j));
    return out;
}

/// mu[r] = (r - |mu|, mu_1, ..., mu_{n-1}); dominant iff r - |mu| >= mu_1.
inline IntVec mu_bracket_r(const IntVec& mu, Int r) {
    IntVec out;
    out.reserve(mu.size() + 1);
    out.push_back(checked_sub(r, vec_sum(mu)));
    out.insert(out.end(), mu.begin(), mu.end());
    return out;
}

/// A partition is a hook when its second part is at most 1.
inline bool is_hook(const DominantWeight& lam) {
    if (!lam.is_partition()) throw DomainError("is_hook requires a partition");
    return lam.n() < 2 || lam.part(2) <= 1;
}

/// Componentwise a >= b.
inline bool contains(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DomainError("contains: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

/// lambda + k*(d,0,...,0). May fail to be nonincreasing for k < 0.
inline IntVec add_k_delta(const IntVec& lam, Int k, Int d) {
    IntVec out = lam;
    if (out.empty()) throw DomainError("add_k_delta: empty weight");
    out[0] = checked_add(out[0], checked_mul(k, d));
    return out;
}

/// (lambda_2, ..., lambda_n).
inline IntVec drop_first(const IntVec& lam) {
    if (lam.empty()) throw DomainError("drop_first: empty weight");
    return IntVec(lam.begin() + 1, lam.end());
}

/// lambda + (c, ..., c).
inline IntVec det_twist(const IntVec& lam, Int c) {
    IntVec out = lam;
    for (Int& x : out) x = checked_add(x, c);
    return out;
}

/// (-lambda_n, ..., -lambda_1), the highest weight of the dual representation.
inline IntVec dual(const IntVec& lam) {
    IntVec out(lam.rbegin(), lam.rend());
    for (Int& x : out) x = checked_sub(0, x);
    return out;
}

} // namespace veronese
