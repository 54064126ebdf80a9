#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vnum/error.hpp"

namespace vnum {

using Exponent = std::uint64_t;

/// Default cap on the number of points any exhaustive search may visit.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b) {
    Exponent r{};
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
    return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
    Exponent r{};
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("exponent overflow");
    return r;
}

/// Product that clamps to the maximum instead of overflowing; used for sizing searches.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r{};
    if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
    return r;
}

inline void require_ambient(std::size_t a, std::size_t b) {
    if (a != b)
        throw DomainError("ambient mismatch: " + std::to_string(a) + " vs " + std::to_string(b) +
                          " variables");
}

}  // namespace detail

/// A monomial x_1^{e_1} ... x_t^{e_t}, stored as its exponent vector.
/// Variables are indexed 0..t-1 internally; text surfaces show them as x1..xt.
class Monomial {
public:
    /// The constant monomial 1 in `ambient` variables.
    explicit Monomial(std::size_t ambient) : exps_(ambient, 0) {
        if (ambient == 0) throw DomainError("ambient must be at least 1");
    }

    explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
        if (exps_.empty()) throw DomainError("ambient must be at least 1");
    }

    Monomial(std::initializer_list<Exponent> exponents) : Monomial(std::vector<Exponent>(exponents)) {}

    static Monomial one(std::size_t ambient) { return Monomial(ambient); }

    static Monomial variable(std::size_t ambient, std::size_t index, Exponent power = 1) {
        Monomial m(ambient);
        if (index >= ambient) throw DomainError("variable index out of range");
        m.exps_[index] = power;
        return m;
    }

    std::size_t ambient() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    Exponent degree() const {
        Exponent d = 0;
        for (Exponent e : exps_) d = detail::checked_add(d, e);
        return d;
    }

    bool is_one() const noexcept {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    /// True iff this divides `other` componentwise.
    bool divides(const Monomial& other) const {
        detail::require_ambient(ambient(), other.ambient());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Indices of variables with a positive exponent.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0) s.push_back(i);
        return s;
    }

    Monomial& operator*=(const Monomial& other) {
        detail::require_ambient(ambient(), other.ambient());
        for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = detail::checked_add(exps_[i], other.exps_[i]);
        return *this;
    }

    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    /// Lexicographic comparison of exponent vectors.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    detail::require_ambient(a.ambient(), b.ambient());
    std::vector<Exponent> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    detail::require_ambient(a.ambient(), b.ambient());
    std::vector<Exponent> e(a.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

/// u / gcd(u, f): componentwise max(u_i - f_i, 0).
inline Monomial strip(const Monomial& u, const Monomial& f) {
    detail::require_ambient(u.ambient(), f.ambient());
    std::vector<Exponent> e(u.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = u[i] > f[i] ? u[i] - f[i] : 0;
    return Monomial(std::move(e));
}

/// Exact quotient a / b; b must divide a.
inline Monomial divide(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw DomainError("monomial does not divide");
    return strip(a, b);
}

inline Monomial pow(const Monomial& m, Exponent n) {
    std::vector<Exponent> e(m.ambient());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_mul(m[i], n);
    return Monomial(std::move(e));
}

/// A prime generated by variables: <x_i : i in support>. Support is sorted, 0-based.
class MonomialPrime {
public:
    MonomialPrime(std::size_t ambient, std::vector<std::size_t> support)
        : ambient_(ambient), support_(std::move(support)) {
        if (ambient_ == 0) throw DomainError("ambient must be at least 1");
        std::sort(support_.begin(), support_.end());
        support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
        if (support_.empty()) throw DomainError("prime support must be non-empty");
        if (support_.back() >= ambient_) throw DomainError("prime support index out of range");
    }

    /// The maximal ideal <x_1, ..., x_t>.
    static MonomialPrime maximal(std::size_t ambient) {
        std::vector<std::size_t> s(ambient);
        for (std::size_t i = 0; i < ambient; ++i) s[i] = i;
        return MonomialPrime(ambient, std::move(s));
    }

    std::size_t ambient() const noexcept { return ambient_; }
    const std::vector<std::size_t>& support() const noexcept { return support_; }
    bool is_maximal() const noexcept { return support_.size() == ambient_; }

    friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

private:
    std::size_t ambient_;
    std::vector<std::size_t> support_;
};

/// A monomial ideal held by its minimal generators G(I), sorted lexicographically.
///
/// The zero ideal is never representable. The unit ideal only arises from `colon`
/// and is represented by the single generator 1 with `is_unit()` set.
class MonomialIdeal {
public:
    /// Builds the ideal generated by `gens`, keeping only the divisibility-minimal elements.
    static MonomialIdeal minimalize(std::vector<Monomial> gens) {
        MonomialIdeal I = normalize(std::move(gens));
        if (I.is_unit()) throw DomainError("unit ideal not supported as input (generator 1)");
        return I;
    }

    MonomialIdeal(std::initializer_list<Monomial> gens) : MonomialIdeal(minimalize(std::vector<Monomial>(gens))) {}

    static MonomialIdeal unit(std::size_t ambient) { return MonomialIdeal(ambient, {Monomial(ambient)}, true); }

    /// The ideal generated by {x_i : i in P}.
    static MonomialIdeal from_prime(const MonomialPrime& P) {
        std::vector<Monomial> g;
        for (std::size_t i : P.support()) g.push_back(Monomial::variable(P.ambient(), i));
        return minimalize(std::move(g));
    }

    std::size_t ambient() const noexcept { return ambient_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    bool is_unit() const noexcept { return unit_; }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens, bool unit)
        : ambient_(ambient), gens_(std::move(gens)), unit_(unit) {}

    static MonomialIdeal normalize(std::vector<Monomial> gens) {
        if (gens.empty()) throw DomainError("zero ideal not supported");
        const std::size_t t = gens.front().ambient();
        for (const auto& g : gens) detail::require_ambient(t, g.ambient());

        // Anything that survives must not be divisible by an earlier (lower-degree) survivor.
        std::vector<std::pair<Exponent, Monomial>> keyed;
        keyed.reserve(gens.size());
        for (auto& g : gens) keyed.emplace_back(g.degree(), std::move(g));
        std::sort(keyed.begin(), keyed.end());
        keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

        if (keyed.front().first == 0) return unit(t);

        std::vector<Monomial> kept;
        for (auto& [deg, g] : keyed) {
            bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
            if (!absorbed) kept.push_back(std::move(g));
        }
        std::sort(kept.begin(), kept.end());
        return MonomialIdeal(t, std::move(kept), false);
    }

    friend MonomialIdeal colon(const MonomialIdeal&, const Monomial&);
    friend MonomialIdeal sum(const MonomialIdeal&, const MonomialIdeal&);
    friend MonomialIdeal product(const MonomialIdeal&, const MonomialIdeal&);

    std::size_t ambient_;
    std::vector<Monomial> gens_;
    bool unit_ = false;
};

inline bool contains(const MonomialIdeal& I, const Monomial& m) {
    detail::require_ambient(I.ambient(), m.ambient());
    return std::any_of(I.generators().begin(), I.generators().end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

/// (I : f), generated by u / gcd(u, f) over u in G(I). May be the unit ideal.
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f) {
    detail::require_ambient(I.ambient(), f.ambient());
    std::vector<Monomial> q;
    q.reserve(I.generators().size());
    for (const auto& u : I.generators()) q.push_back(strip(u, f));
    return MonomialIdeal::normalize(std::move(q));
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_ambient(I.ambient(), J.ambient());
    std::vector<Monomial> g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal::normalize(std::move(g));
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    detail::require_ambient(I.ambient(), J.ambient());
    std::vector<Monomial> g;
    g.reserve(I.generators().size() * J.generators().size());
    for (const auto& u : I.generators())
        for (const auto& v : J.generators()) g.push_back(u * v);
    return MonomialIdeal::normalize(std::move(g));
}

/// I^n, minimalizing after every multiplication.
inline MonomialIdeal power(const MonomialIdeal& I, std::uint64_t n) {
    if (n == 0) throw DomainError("power exponent must be at least 1 (unit ideal unsupported)");
    MonomialIdeal r = I;
    for (std::uint64_t k = 1; k < n; ++k) r = product(r, I);
    return r;
}

/// Minimum generator degree.
inline Exponent alpha(const MonomialIdeal& I) {
    if (I.is_unit()) throw DomainError("alpha requires a proper ideal");
    Exponent best = std::numeric_limits<Exponent>::max();
    for (const auto& g : I.generators()) best = std::min(best, g.degree());
    return best;
}

/// Exponents a_1..a_t of the pure powers x_i^{a_i} in G(I), or nullopt if some variable has none
/// (i.e. I is not m-primary).
inline std::optional<std::vector<Exponent>> pure_power_exponents(const MonomialIdeal& I) {
    if (I.is_unit()) throw DomainError("m-primary test requires a proper ideal");
    std::vector<Exponent> a(I.ambient(), 0);
    for (const auto& g : I.generators()) {
        auto s = g.support();
        if (s.size() == 1) a[s.front()] = g[s.front()];
    }
    if (std::any_of(a.begin(), a.end(), [](Exponent e) { return e == 0; })) return std::nullopt;
    return a;
}

inline bool is_m_primary(const MonomialIdeal& I) { return pure_power_exponents(I).has_value(); }

/// True iff every minimal generator is a power of a single variable.
inline bool is_pure_power_ideal(const MonomialIdeal& I) {
    return !I.is_unit() && std::all_of(I.generators().begin(), I.generators().end(),
                                       [](const Monomial& g) { return g.support().size() == 1; });
}

namespace detail {

inline std::uint64_t box_size(std::span<const Exponent> upper) {
    std::uint64_t n = 1;
    for (Exponent u : upper) n = saturating_mul(n, u == std::numeric_limits<Exponent>::max() ? u : u + 1);
    return n;
}

/// Visits every exponent vector in prod [0, upper_i] in lex order; stops when `visit` returns false.
template <class Visit>
void for_each_in_box(std::span<const Exponent> upper, Visit&& visit) {
    std::vector<Exponent> e(upper.size(), 0);
    while (true) {
        if (!visit(std::as_const(e))) return;
        std::size_t i = e.size();
        while (i > 0) {
            --i;
            if (e[i] < upper[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
            if (i == 0) return;
        }
    }
}

}  // namespace detail

/// Monomials outside an m-primary I; they span S/I.
inline std::vector<Monomial> standard_monomials(const MonomialIdeal& I, std::uint64_t budget = kDefaultBudget) {
    auto a = pure_power_exponents(I);
    if (!a) throw DomainError("standard monomials infinite: ideal is not m-primary");
    std::vector<Exponent> upper(a->size());
    for (std::size_t i = 0; i < upper.size(); ++i) upper[i] = (*a)[i] - 1;
    const auto size = detail::box_size(upper);
    if (size > budget) throw BudgetExceeded(budget, size);

    std::vector<Monomial> out;
    detail::for_each_in_box(upper, [&](const std::vector<Exponent>& e) {
        Monomial m(e);
        if (!contains(I, m)) out.push_back(std::move(m));
        return true;
    });
    return out;
}

/// reg(S/I) for m-primary I: the top degree of a standard monomial.
inline Exponent regularity_zero_dim(const MonomialIdeal& I, std::uint64_t budget = kDefaultBudget) {
    Exponent top = 0;
    for (const auto& m : standard_monomials(I, budget)) top = std::max(top, m.degree());
    return top;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    if (m.is_one()) return os << "1";
    bool first = true;
    for (std::size_t i = 0; i < m.ambient(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'x' << (i + 1);
        if (m[i] > 1) os << '^' << m[i];
    }
    return os;
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) {
    os << '<';
    for (std::size_t i = 0; i < I.generators().size(); ++i) os << (i ? ", " : "") << I.generators()[i];
    return os << '>';
}

inline std::ostream& operator<<(std::ostream& os, const MonomialPrime& P) {
    os << '<';
    for (std::size_t i = 0; i < P.support().size(); ++i) os << (i ? ", x" : "x") << P.support()[i] + 1;
    return os << '>';
}

}  // namespace vnum
