#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "vnum/error.hpp"
#include "vnum/monomial.hpp"

namespace vnum {

/// A v-number together with its certificate: (I : witness) = prime and deg(witness) = value.
struct VWitness {
    Exponent value = 0;
    Monomial witness;
    MonomialPrime prime;

    friend bool operator==(const VWitness&, const VWitness&) = default;
};

/// True iff `w` certifies itself against `I`.
inline bool is_valid_witness(const MonomialIdeal& I, const VWitness& w) {
    return w.witness.degree() == w.value && colon(I, w.witness) == MonomialIdeal::from_prime(w.prime);
}

/// Search box for monomial witnesses. Raising f_i above the largest exponent of x_i in
/// G(I) cannot change (I : f), so every colon is realized inside prod [0, caps_i].
class GridBound {
public:
    explicit GridBound(const MonomialIdeal& I) : caps_(I.ambient(), 0) {
        for (const auto& g : I.generators())
            for (std::size_t i = 0; i < caps_.size(); ++i) caps_[i] = std::max(caps_[i], g[i]);
    }

    const std::vector<Exponent>& caps() const noexcept { return caps_; }

    std::uint64_t size() const { return detail::box_size(caps_); }

    Monomial cap(const Monomial& f) const {
        detail::require_ambient(f.ambient(), caps_.size());
        std::vector<Exponent> e(caps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(f[i], caps_[i]);
        return Monomial(std::move(e));
    }

    void check_budget(std::uint64_t budget) const {
        const auto n = size();
        if (n > budget) throw BudgetExceeded(budget, n);
    }

private:
    std::vector<Exponent> caps_;
};

namespace detail {

template <class Visit>
bool degree_slice(std::span<const Exponent> caps, std::span<const Exponent> suffix_cap, std::vector<Exponent>& e,
                  std::size_t i, Exponent remaining, Visit& visit) {
    if (i + 1 == caps.size()) {
        if (remaining > caps[i]) return true;
        e[i] = remaining;
        return visit(std::as_const(e));
    }
    const Exponent hi = std::min(caps[i], remaining);
    for (Exponent x = 0; x <= hi; ++x) {
        if (remaining - x > suffix_cap[i + 1]) continue;
        e[i] = x;
        if (!degree_slice(caps, suffix_cap, e, i + 1, remaining - x, visit)) return false;
    }
    return true;
}

/// Visits every exponent vector in prod [0, caps_i] ordered by total degree, then lex.
/// Stops as soon as `visit` returns false.
template <class Visit>
void for_each_by_degree(std::span<const Exponent> caps, Visit&& visit) {
    std::vector<Exponent> suffix(caps.size() + 1, 0);
    for (std::size_t i = caps.size(); i > 0; --i) suffix[i - 1] = checked_add(suffix[i], caps[i - 1]);
    std::vector<Exponent> e(caps.size(), 0);
    for (Exponent d = 0; d <= suffix[0]; ++d)
        if (!degree_slice(caps, std::span<const Exponent>(suffix), e, 0, d, visit)) return;
}

inline void require_proper(const MonomialIdeal& I) {
    if (I.is_unit()) throw DomainError("v-number undefined for the unit ideal");
}

}  // namespace detail

/// If (I : f) is generated by variables, the prime it equals; otherwise nullopt
/// (including when f lies in I and the colon is the unit ideal).
inline std::optional<MonomialPrime> colon_is_prime(const MonomialIdeal& I, const Monomial& f) {
    detail::require_ambient(I.ambient(), f.ambient());
    if (I.is_unit()) return std::nullopt;
    const std::size_t t = I.ambient();

    // Single-variable quotients x_i determine the candidate prime; every other quotient
    // must then be a multiple of one of them so that it drops out on minimalization.
    std::vector<char> linear(t, 0);
    for (const auto& u : I.generators()) {
        std::size_t nonzero = 0, at = 0;
        Exponent e = 0;
        for (std::size_t i = 0; i < t; ++i) {
            if (u[i] > f[i]) {
                ++nonzero;
                at = i;
                e = u[i] - f[i];
            }
        }
        if (nonzero == 0) return std::nullopt;
        if (nonzero == 1 && e == 1) linear[at] = 1;
    }
    for (const auto& u : I.generators()) {
        bool absorbed = false;
        for (std::size_t i = 0; i < t && !absorbed; ++i) absorbed = linear[i] && u[i] > f[i];
        if (!absorbed) return std::nullopt;
    }
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < t; ++i)
        if (linear[i]) support.push_back(i);
    return MonomialPrime(t, std::move(support));
}

/// Ass(I), realized by monomial witnesses over the whole GridBound box. Sorted.
inline std::vector<MonomialPrime> associated_primes(const MonomialIdeal& I, std::uint64_t budget = kDefaultBudget) {
    detail::require_proper(I);
    GridBound grid(I);
    grid.check_budget(budget);
    std::set<MonomialPrime> found;
    detail::for_each_in_box(grid.caps(), [&](const std::vector<Exponent>& e) {
        if (auto P = colon_is_prime(I, Monomial(e))) found.insert(std::move(*P));
        return true;
    });
    return {found.begin(), found.end()};
}

/// v(I) by exhaustive search in (degree, lex) order; the witness is the lex-smallest
/// exponent vector of minimum degree.
inline VWitness v_oracle(const MonomialIdeal& I, std::uint64_t budget = kDefaultBudget) {
    detail::require_proper(I);
    GridBound grid(I);
    grid.check_budget(budget);
    std::optional<VWitness> hit;
    detail::for_each_by_degree(std::span<const Exponent>(grid.caps()), [&](const std::vector<Exponent>& e) {
        Monomial f(e);
        if (auto P = colon_is_prime(I, f)) {
            hit = VWitness{f.degree(), std::move(f), std::move(*P)};
            return false;
        }
        return true;
    });
    // A proper monomial ideal always has an associated prime.
    if (!hit) throw std::logic_error("v_oracle: no witness in grid");
    return *hit;
}

/// Every minimum-degree witness of v(I), in lex order.
inline std::vector<VWitness> minimum_witnesses(const MonomialIdeal& I, std::uint64_t budget = kDefaultBudget) {
    detail::require_proper(I);
    GridBound grid(I);
    grid.check_budget(budget);
    std::vector<VWitness> out;
    detail::for_each_by_degree(std::span<const Exponent>(grid.caps()), [&](const std::vector<Exponent>& e) {
        Monomial f(e);
        const Exponent d = f.degree();
        if (!out.empty() && d > out.front().value) return false;
        if (auto P = colon_is_prime(I, f)) out.push_back(VWitness{d, std::move(f), std::move(*P)});
        return true;
    });
    return out;
}

/// v_P(I): as v_oracle but only colons equal to P count.
inline VWitness v_at_prime(const MonomialIdeal& I, const MonomialPrime& P, std::uint64_t budget = kDefaultBudget) {
    detail::require_proper(I);
    detail::require_ambient(I.ambient(), P.ambient());
    GridBound grid(I);
    grid.check_budget(budget);
    std::optional<VWitness> hit;
    detail::for_each_by_degree(std::span<const Exponent>(grid.caps()), [&](const std::vector<Exponent>& e) {
        Monomial f(e);
        if (auto Q = colon_is_prime(I, f); Q && *Q == P) {
            hit = VWitness{f.degree(), std::move(f), P};
            return false;
        }
        return true;
    });
    if (!hit) throw DomainError("prime not associated");
    return *hit;
}

/// An ordered choice of t generators, read as the rows of a t x t exponent matrix.
struct MatrixCandidate {
    std::vector<std::size_t> rows;  // indices into I.generators()

    friend bool operator==(const MatrixCandidate&, const MatrixCandidate&) = default;
};

/// Checks the two admissibility conditions: each diagonal entry strictly dominates its
/// column, and the monomial with exponents (a_ii - 1) lies outside I.
inline bool is_admissible(const MonomialIdeal& I, const MatrixCandidate& A) {
    const std::size_t t = I.ambient();
    const auto& G = I.generators();
    if (A.rows.size() != t) return false;
    for (std::size_t r : A.rows)
        if (r >= G.size()) return false;
    std::vector<Exponent> corner(t);
    for (std::size_t i = 0; i < t; ++i) {
        const Exponent diag = G[A.rows[i]][i];
        if (diag == 0) return false;
        for (std::size_t l = 0; l < t; ++l)
            if (l != i && G[A.rows[l]][i] >= diag) return false;
        corner[i] = diag - 1;
    }
    return !contains(I, Monomial(std::move(corner)));
}

inline Exponent trace(const MonomialIdeal& I, const MatrixCandidate& A) {
    Exponent s = 0;
    for (std::size_t i = 0; i < A.rows.size(); ++i) s = detail::checked_add(s, I.generators()[A.rows[i]][i]);
    return s;
}

struct MatrixSolution {
    VWitness result;
    MatrixCandidate candidate;
};

namespace detail {

struct MatrixSearch {
    const MonomialIdeal& I;
    std::vector<std::size_t> rows;
    std::optional<MatrixCandidate> best;
    Exponent best_trace = std::numeric_limits<Exponent>::max();

    void descend(std::size_t depth, Exponent partial) {
        const auto& G = I.generators();
        const std::size_t t = I.ambient();
        if (depth == t) {
            if (partial >= best_trace) return;
            std::vector<Exponent> corner(t);
            for (std::size_t i = 0; i < t; ++i) corner[i] = G[rows[i]][i] - 1;
            if (contains(I, Monomial(std::move(corner)))) return;
            best = MatrixCandidate{rows};
            best_trace = partial;
            return;
        }
        // Remaining diagonal entries are each at least 1.
        if (best && partial + (t - depth) >= best_trace) return;
        for (std::size_t r = 0; r < G.size(); ++r) {
            const auto& g = G[r];
            const Exponent diag = g[depth];
            if (diag == 0) continue;
            bool ok = true;
            for (std::size_t l = 0; l < depth && ok; ++l) {
                const auto& prev = G[rows[l]];
                ok = g[l] < prev[l] && prev[depth] < diag;
            }
            if (!ok) continue;
            rows.push_back(r);
            descend(depth + 1, partial + diag);
            rows.pop_back();
        }
    }
};

}  // namespace detail

/// v(I) = min{ tr(A) - t : A admissible } for m-primary I. Ties go to the lex-smallest row selection.
inline MatrixSolution solve_primary_matrix(const MonomialIdeal& I) {
    detail::require_proper(I);
    if (!is_m_primary(I)) throw DomainError("matrix formula requires an m-primary ideal");
    detail::MatrixSearch search{I, {}, std::nullopt};
    search.descend(0, 0);
    if (!search.best) throw std::logic_error("matrix formula: no admissible candidate for an m-primary ideal");

    const auto& G = I.generators();
    const std::size_t t = I.ambient();
    std::vector<Exponent> corner(t);
    for (std::size_t i = 0; i < t; ++i) corner[i] = G[search.best->rows[i]][i] - 1;
    Monomial w(std::move(corner));
    const Exponent value = w.degree();
    return MatrixSolution{VWitness{value, std::move(w), MonomialPrime::maximal(t)}, *search.best};
}

inline VWitness v_primary_matrix(const MonomialIdeal& I) { return solve_primary_matrix(I).result; }

/// Two-variable closed form: min over lex-consecutive generators (a_i, b_i), (a_{i+1}, b_{i+1})
/// of a_i + b_{i+1} - 2.
inline Exponent v_two_vars(const MonomialIdeal& I) {
    detail::require_proper(I);
    if (I.ambient() != 2) throw DomainError("two-variable formula requires exactly 2 variables");
    if (!is_m_primary(I)) throw DomainError("two-variable formula requires an m-primary ideal");
    std::vector<Monomial> g(I.generators().rbegin(), I.generators().rend());
    Exponent best = std::numeric_limits<Exponent>::max();
    for (std::size_t i = 0; i + 1 < g.size(); ++i) best = std::min(best, g[i][0] + g[i + 1][1] - 2);
    return best;
}

struct VBounds {
    Exponent lower = 0;
    std::optional<Exponent> upper;  // only for m-primary ideals
};

/// alpha(I) - 1 <= v(I), and v(I) <= sum a_i - t when I is m-primary.
inline VBounds v_bounds(const MonomialIdeal& I) {
    detail::require_proper(I);
    VBounds b{alpha(I) - 1, std::nullopt};
    if (auto a = pure_power_exponents(I)) {
        Exponent s = 0;
        for (Exponent e : *a) s = detail::checked_add(s, e);
        b.upper = s - a->size();
    }
    return b;
}

struct ColonDecompositionReport {
    VWitness power_witness;
    std::size_t divisors_checked = 0;
    std::optional<Monomial> first_failure;
    bool holds = true;
};

/// For the oracle witness X^a of v(I^n), checks v(I^n : X^G) + deg X^G = v(I^n)
/// for every proper divisor X^G of X^a.
inline ColonDecompositionReport v_colon_decomposition(const MonomialIdeal& I, std::uint64_t n,
                                                      std::uint64_t budget = kDefaultBudget) {
    const MonomialIdeal In = power(I, n);
    ColonDecompositionReport report{v_oracle(In, budget), 0, std::nullopt, true};
    const Monomial& w = report.power_witness.witness;
    std::vector<Exponent> upper(w.exponents().begin(), w.exponents().end());
    detail::for_each_in_box(upper, [&](const std::vector<Exponent>& e) {
        Monomial g(e);
        if (g == w) return true;
        ++report.divisors_checked;
        const Exponent lhs = v_oracle(colon(In, g), budget).value + g.degree();
        if (lhs != report.power_witness.value) {
            report.holds = false;
            report.first_failure = g;
            return false;
        }
        return true;
    });
    return report;
}

inline bool v_colon_decomposition_check(const MonomialIdeal& I, std::uint64_t n, std::uint64_t budget = kDefaultBudget) {
    return v_colon_decomposition(I, n, budget).holds;
}

}  // namespace vnum
