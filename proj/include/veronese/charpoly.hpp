#pragma once

#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "veronese/arith.hpp"
#include "veronese/cache.hpp"
#include "veronese/weights.hpp"

namespace veronese {

/// Finite truncation bounds: every weight with lambda_1 <= lambda1_max,
/// lambda_n >= lambdan_min (and |lambda| in the residue class, when one is
/// set) has its exact multiplicity inside a table declared over this window.
/// Reversed bounds encode the empty window.
struct WeightWindow {
    Int n = 1;
    Int lambda1_max = 0;
    Int lambdan_min = 0;
    std::optional<std::pair<Int, Int>> residue; // (j, d): |lambda| == j (mod d)

    WeightWindow() = default;
    WeightWindow(Int n_, Int l1max, Int lnmin,
                 std::optional<std::pair<Int, Int>> res = std::nullopt)
        : n(n_), lambda1_max(l1max), lambdan_min(lnmin), residue(std::move(res)) {
        if (n < 1) throw DomainError("window requires n >= 1");
        if (residue && (residue->second < 1 || residue->first < 0 ||
                        residue->first >= residue->second))
            throw DomainError("window residue must satisfy 0 <= j < d");
    }

    bool empty_bounds() const { return lambda1_max < lambdan_min; }

    bool contains(const IntVec& lam) const {
        if (static_cast<Int>(lam.size()) != n) return false;
        if (empty_bounds()) return false;
        if (lam.front() > lambda1_max || lam.back() < lambdan_min) return false;
        if (residue && pos_mod(vec_sum(lam), residue->second) != residue->first)
            return false;
        return true;
    }

    bool operator==(const WeightWindow& o) const {
        return n == o.n && lambda1_max == o.lambda1_max &&
               lambdan_min == o.lambdan_min && residue == o.residue;
    }
};

/// A GL(n) character in weight coordinates: a finitely supported map from
/// exponent vectors of length n to positive multiplicities.
class CharacterPoly {
public:
    explicit CharacterPoly(Int n) : n_(n) {
        if (n < 1) throw DomainError("character requires n >= 1 variables");
    }

    static CharacterPoly one(Int n) {
        CharacterPoly c(n);
        c.terms_.emplace(IntVec(static_cast<std::size_t>(n), 0), 1);
        return c;
    }

    Int n() const { return n_; }
    bool empty() const { return terms_.empty(); }
    const std::map<IntVec, Int>& terms() const { return terms_; }

    Int coeff(const IntVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const IntVec& e, Int m) {
        if (static_cast<Int>(e.size()) != n_)
            throw DomainError("exponent length does not match variable count");
        if (m == 0) return;
        auto [it, inserted] = terms_.emplace(e, m);
        if (!inserted) {
            it->second = checked_add(it->second, m);
            if (it->second == 0) {
                terms_.erase(it);
                return;
            }
        }
        if (it->second < 0)
            throw DomainError("negative multiplicity at " + weight_to_string(e));
    }

    void add(const CharacterPoly& o) {
        if (o.n_ != n_) throw DomainError("variable count mismatch");
        for (const auto& [e, m] : o.terms_) add_term(e, m);
    }

    /// Sum of all multiplicities, i.e. the dimension of the representation.
    Int dimension() const {
        Int s = 0;
        for (const auto& [e, m] : terms_) s = checked_add(s, m);
        return s;
    }

    bool operator==(const CharacterPoly& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

private:
    Int n_;
    std::map<IntVec, Int> terms_;
};

/// An element of the Grothendieck group of admissible representations,
/// restricted to a window when one is declared: a finitely supported map
/// from dominant weights to (possibly negative) integers.
class VirtualCharacter {
public:
    explicit VirtualCharacter(Int n, std::optional<WeightWindow> window = std::nullopt)
        : n_(n), window_(std::move(window)) {
        if (n < 1) throw DomainError("virtual character requires n >= 1");
        if (window_ && window_->n != n_)
            throw DomainError("window length does not match character length");
    }

    Int n() const { return n_; }
    const std::map<IntVec, Int>& terms() const { return terms_; }
    const std::optional<WeightWindow>& window() const { return window_; }
    bool empty() const { return terms_.empty(); }

    void add(const IntVec& lam, Int m) {
        if (static_cast<Int>(lam.size()) != n_)
            throw DomainError("weight length mismatch");
        if (!is_nonincreasing(lam))
            throw DomainError("weight " + weight_to_string(lam) + " is not dominant");
        if (m == 0) return;
        auto [it, inserted] = terms_.emplace(lam, m);
        if (!inserted) {
            it->second = checked_add(it->second, m);
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Raw coefficient lookup, 0 when absent. Window completeness is the
    /// caller's concern; mult_of enforces it.
    Int coeff(const IntVec& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? 0 : it->second;
    }

    bool operator==(const VirtualCharacter& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

private:
    Int n_;
    std::map<IntVec, Int> terms_;
    std::optional<WeightWindow> window_;
};

/// Multiplicity of the irreducible indexed by lam inside u. Reading a weight
/// outside a declared window is an error rather than a silent zero.
inline Int mult_of(const DominantWeight& lam, const VirtualCharacter& u) {
    if (lam.n() != u.n()) throw DomainError("weight length mismatch");
    if (u.window() && !u.window()->contains(lam.parts()))
        throw DomainError("weight " + weight_to_string(lam.parts()) +
                          " lies outside the declared window");
    return u.coeff(lam.parts());
}

/// Character of the irreducible with highest weight lam (a partition),
/// computed by enumerating semistandard tableaux of shape lam with entries
/// in 1..n and tallying content vectors.
inline CharacterPoly schur_char(const DominantWeight& lam) {
    if (!lam.is_partition())
        throw DomainError("schur_char requires a partition; twist by the "
                          "determinant to normalize " + weight_to_string(lam.parts()));
    const Int n = lam.n();
    CharacterPoly out(n);
    const IntVec& shape = lam.parts();

    // flattened cells in row-major order with neighbor indices
    struct Cell {
        int left;  // index of (i, j-1) or -1
        int above; // index of (i-1, j) or -1
    };
    std::vector<Cell> cells;
    {
        std::vector<int> prev_row; // cell index by column for the row above
        for (std::size_t i = 0; i < shape.size(); ++i) {
            std::vector<int> this_row(static_cast<std::size_t>(std::max<Int>(shape[i], 0)), -1);
            for (Int j = 0; j < shape[i]; ++j) {
                Cell c;
                c.left = j > 0 ? static_cast<int>(cells.size()) - 1 : -1;
                c.above = (i > 0 && static_cast<std::size_t>(j) < prev_row.size())
                              ? prev_row[static_cast<std::size_t>(j)]
                              : -1;
                this_row[static_cast<std::size_t>(j)] = static_cast<int>(cells.size());
                cells.push_back(c);
            }
            prev_row = std::move(this_row);
        }
    }
    if (cells.empty()) {
        out.add_term(IntVec(static_cast<std::size_t>(n), 0), 1);
        return out;
    }

    std::vector<Int> value(cells.size(), 0);
    IntVec content(static_cast<std::size_t>(n), 0);
    std::map<IntVec, Int> tally;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            auto [it, inserted] = tally.emplace(content, 1);
            if (!inserted) ++it->second;
            return;
        }
        Int lo = 1;
        if (cells[c].left >= 0) lo = std::max(lo, value[static_cast<std::size_t>(cells[c].left)]);
        if (cells[c].above >= 0)
            lo = std::max(lo, value[static_cast<std::size_t>(cells[c].above)] + 1);
        for (Int v = lo; v <= n; ++v) {
            value[c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            rec(c + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(0);
    for (auto& [e, m] : tally) out.add_term(e, m);
    return out;
}

/// Tensor product at the character level: convolution of exponent maps.
inline CharacterPoly multiply(const CharacterPoly& a, const CharacterPoly& b) {
    if (a.n() != b.n()) throw DomainError("variable count mismatch in product");
    CharacterPoly out(a.n());
    const std::size_t nn = static_cast<std::size_t>(a.n());
    IntVec key(nn);
    for (const auto& [ea, ma] : a.terms()) {
        for (const auto& [eb, mb] : b.terms()) {
            for (std::size_t i = 0; i < nn; ++i) key[i] = checked_add(ea[i], eb[i]);
            out.add_term(key, checked_mul(ma, mb));
        }
    }
    return out;
}

/// Expand a genuine character as a nonnegative sum of Schur characters by
/// repeatedly peeling the lexicographically greatest exponent, which for a
/// symmetric polynomial is dominant and dominance-maximal (unitriangularity
/// of the Schur basis guarantees termination and uniqueness).
inline VirtualCharacter decompose(const CharacterPoly& c) {
    VirtualCharacter out(c.n());
    std::map<IntVec, Int> work = c.terms();
    while (!work.empty()) {
        auto lead = std::prev(work.end());
        const IntVec e = lead->first;
        const Int a = lead->second;
        if (a < 0)
            throw DomainError("input is not a character: multiplicity " +
                              std::to_string(a) + " at " + weight_to_string(e));
        if (!is_nonincreasing(e))
            throw DomainError("input is not a character: leading exponent " +
                              weight_to_string(e) + " is not dominant");
        out.add(e, a);
        CharacterPoly sc = schur_char(DominantWeight(e));
        for (const auto& [w, m] : sc.terms()) {
            auto it = work.emplace(w, 0).first;
            it->second = checked_sub(it->second, checked_mul(a, m));
            if (it->second == 0)
                work.erase(it);
            else if (it->second < 0)
                throw DomainError("input is not a character: subtraction went "
                                  "negative at " + weight_to_string(w));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Plethysm Sym^k(Sym^d C^n)
// ---------------------------------------------------------------------------

namespace detail {

inline std::atomic<Int>& plethysm_cap_slot() {
    static std::atomic<Int> cap = [] {
        Int v = 5'000'000'000;
        if (const char* env = std::getenv("VERONESE_CACHE_CAP")) {
            char* end = nullptr;
            long long parsed = std::strtoll(env, &end, 10);
            if (end && *end == '\0' && parsed > 0) v = static_cast<Int>(parsed);
        }
        return v;
    }();
    return cap;
}

// lexicographic rank of a composition of s into n parts, via the hockey-stick
// identity: the block of compositions with first coordinate < e_1 has size
// C(s+n-1, n-1) - C(s-e_1+n-1, n-1), and recursively for later coordinates.
inline Int composition_rank(const IntVec& e, Int s,
                            const std::vector<std::vector<Int>>& pas) {
    Int rank = 0;
    Int rem = s;
    const Int n = static_cast<Int>(e.size());
    for (Int i = 0; i + 1 < n; ++i) {
        const Int m = n - 1 - i;
        const Int ei = e[static_cast<std::size_t>(i)];
        rank += pas[static_cast<std::size_t>(rem + m)][static_cast<std::size_t>(m)] -
                pas[static_cast<std::size_t>(rem - ei + m)][static_cast<std::size_t>(m)];
        rem -= ei;
    }
    return rank;
}

} // namespace detail

inline Int plethysm_cap() { return detail::plethysm_cap_slot().load(); }
inline void set_plethysm_cap(Int cap) {
    if (cap < 1) throw DomainError("plethysm cap must be positive");
    detail::plethysm_cap_slot().store(cap);
}

/// Character of Sym^k(Sym^d C^n): enumerate the size-k multisets of degree-d
/// monomials in n variables with an explicit index odometer (no recursion),
/// summing exponent vectors and tallying. The multiset count is checked
/// against the configurable cap before any work starts.
inline CharacterPoly sym_power_of_sym(Int k, Int d, Int n) {
    if (k < 0) throw DomainError("sym_power_of_sym requires k >= 0");
    if (d < 1) throw DomainError("sym_power_of_sym requires d >= 1");
    if (n < 1) throw DomainError("sym_power_of_sym requires n >= 1");
    if (k == 0) return CharacterPoly::one(n);

    std::vector<IntVec> mono;
    for_each_composition(d, n, [&](const IntVec& e) { mono.push_back(e); });
    const Int M = static_cast<Int>(mono.size());

    Int total;
    try {
        total = checked_binomial(checked_add(M, k) - 1, k);
    } catch (const OverflowError&) {
        throw ResourceLimitError("plethysm multiset count overflows 64 bits for "
                                 "Sym^" + std::to_string(k) + "(Sym^" + std::to_string(d) +
                                 " C^" + std::to_string(n) + ")");
    }
    if (total > plethysm_cap()) {
        std::ostringstream os;
        os << "plethysm enumeration for Sym^" << k << "(Sym^" << d << " C^" << n
           << ") needs " << total << " multisets, above the cap " << plethysm_cap()
           << " (raise VERONESE_CACHE_CAP to override)";
        throw ResourceLimitError(os.str());
    }

    const Int s = checked_mul(k, d);
    Int nkeys = -1;
    try {
        nkeys = checked_binomial(s + n - 1, n - 1);
    } catch (const OverflowError&) {
        // fall back to the sparse tally
    }
    constexpr Int kDenseLimit = Int{1} << 24;
    const bool dense = nkeys >= 0 && nkeys <= kDenseLimit;

    std::vector<Int> counts;
    std::map<IntVec, Int> sparse;
    std::vector<std::vector<Int>> pas;
    if (dense) {
        counts.assign(static_cast<std::size_t>(nkeys), 0);
        pas = pascal_table(s + n, n - 1);
    }

    const std::size_t kk = static_cast<std::size_t>(k);
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<std::size_t> idx(kk, 0);
    // partial[j] = sum of the exponent vectors picked at positions 0..j
    std::vector<IntVec> partial(kk);
    partial[0] = mono[0];
    for (std::size_t j = 1; j < kk; ++j) {
        partial[j] = partial[j - 1];
        for (std::size_t t = 0; t < nn; ++t) partial[j][t] += mono[0][t];
    }

    for (;;) {
        const IntVec& e = partial[kk - 1];
        if (dense) {
            ++counts[static_cast<std::size_t>(detail::composition_rank(e, s, pas))];
        } else {
            ++sparse[e];
        }
        // advance the nondecreasing index tuple
        std::size_t j = kk;
        while (j > 0 && idx[j - 1] == static_cast<std::size_t>(M) - 1) --j;
        if (j == 0) break;
        --j;
        const std::size_t v = ++idx[j];
        for (std::size_t t = j; t < kk; ++t) {
            idx[t] = v;
            if (t == 0) {
                partial[0] = mono[v];
            } else {
                partial[t] = partial[t - 1];
                for (std::size_t q = 0; q < nn; ++q) partial[t][q] += mono[v][q];
            }
        }
    }

    CharacterPoly out(n);
    if (dense) {
        Int rank = 0;
        for_each_composition(s, n, [&](const IntVec& e) {
            const Int m = counts[static_cast<std::size_t>(rank++)];
            if (m > 0) out.add_term(e, m);
        });
    } else {
        for (const auto& [e, m] : sparse) out.add_term(e, m);
    }
    return out;
}

/// Cached raw plethysm characters keyed by (k, d, n); write-once per key,
/// safe for concurrent readers.
inline std::shared_ptr<const CharacterPoly> sym_power_char(Int k, Int d, Int n) {
    static OnceCache<std::tuple<Int, Int, Int>, CharacterPoly> cache;
    return cache.get_or_compute(std::make_tuple(k, d, n),
                                [&] { return sym_power_of_sym(k, d, n); });
}

/// Cached Schur decompositions of Sym^k(Sym^d C^n).
inline std::shared_ptr<const VirtualCharacter> sym_power_decomposition(Int k, Int d, Int n) {
    static OnceCache<std::tuple<Int, Int, Int>, VirtualCharacter> cache;
    return cache.get_or_compute(std::make_tuple(k, d, n),
                                [&] { return decompose(*sym_power_char(k, d, n)); });
}

/// Graded pieces of the tensor product of symmetric algebras
/// Sym(Sym^{k_1} C^n) (x) ... (x) Sym(Sym^{k_m} C^n) for the listed degrees:
/// piece t collects all (pi_1, ..., pi_m) with sum k_i*pi_i = t.
inline std::map<Int, CharacterPoly>
graded_tensor_sym_algebra(const std::vector<Int>& degrees, Int n, Int degree_cap) {
    if (n < 1) throw DomainError("graded_tensor_sym_algebra requires n >= 1");
    if (degree_cap < 0) throw DomainError("degree cap must be >= 0");
    for (Int kdeg : degrees)
        if (kdeg < 1) throw DomainError("tensor factor degrees must be >= 1");

    std::map<Int, CharacterPoly> cur;
    cur.emplace(0, CharacterPoly::one(n));
    for (Int kdeg : degrees) {
        std::map<Int, CharacterPoly> next;
        for (const auto& [t, chr] : cur) {
            for (Int pi = 0; t + kdeg * pi <= degree_cap; ++pi) {
                CharacterPoly prod = pi == 0 ? chr : multiply(chr, *sym_power_char(pi, kdeg, n));
                auto it = next.find(t + kdeg * pi);
                if (it == next.end())
                    next.emplace(t + kdeg * pi, std::move(prod));
                else
                    it->second.add(prod);
            }
        }
        cur = std::move(next);
    }
    // fill unreachable degrees with empty characters for a uniform shape
    for (Int t = 0; t <= degree_cap; ++t)
        cur.emplace(t, CharacterPoly(n));
    return cur;
}

/// Cached Schur decomposition of the degree-t piece of
/// Sym(Sym^2 C^nvars) (x) ... (x) Sym(Sym^d C^nvars).
inline std::shared_ptr<const VirtualCharacter>
graded_piece_decomposition(Int d, Int nvars, Int t) {
    if (d < 2) throw DomainError("graded_piece_decomposition requires d >= 2");
    if (nvars < 1) throw DomainError("graded_piece_decomposition requires nvars >= 1");
    if (t < 0) throw DomainError("degree must be >= 0");
    static OnceCache<std::tuple<Int, Int, Int>, VirtualCharacter> cache;
    return cache.get_or_compute(std::make_tuple(d, nvars, t), [&] {
        CharacterPoly piece(nvars);
        std::function<void(Int, Int, const CharacterPoly&)> rec =
            [&](Int kdeg, Int remaining, const CharacterPoly& partial) {
                if (kdeg > d) {
                    if (remaining == 0) piece.add(partial);
                    return;
                }
                for (Int pi = 0; kdeg * pi <= remaining; ++pi)
                    rec(kdeg + 1, remaining - kdeg * pi,
                        pi == 0 ? partial : multiply(partial, *sym_power_char(pi, kdeg, nvars)));
            };
        rec(2, t, CharacterPoly::one(nvars));
        return decompose(piece);
    });
}

} // namespace veronese
