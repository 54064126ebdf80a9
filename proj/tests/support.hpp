#pragma once

// Shared test fixtures: a seeded random corpus and brute-force oracles that avoid the
// library's fast paths (colon_is_prime, degree-ordered enumeration, matrix search).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "vnum/vnum.hpp"

namespace vnum::testing {

/// Random m-primary ideal in t variables: pure powers x_i^{a_i} (a_i <= max_exp) plus up to
/// `extra` random monomials with each exponent below the matching a_i.
inline MonomialIdeal random_m_primary(std::mt19937_64& rng, std::size_t t, Exponent max_exp = 6, std::size_t extra = 5) {
    std::uniform_int_distribution<Exponent> pow_dist(1, max_exp);
    std::uniform_int_distribution<std::size_t> count_dist(0, extra);
    std::vector<Exponent> a(t);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < t; ++i) {
        a[i] = pow_dist(rng);
        gens.push_back(Monomial::variable(t, i, a[i]));
    }
    const std::size_t k = count_dist(rng);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Exponent> e(t);
        // a few redraws for a mixed monomial; pure extras would just lower a cap
        for (int attempt = 0; attempt < 4; ++attempt) {
            for (std::size_t i = 0; i < t; ++i) e[i] = std::uniform_int_distribution<Exponent>(0, a[i] - 1)(rng);
            if (std::count_if(e.begin(), e.end(), [](Exponent x) { return x != 0; }) >= 2) break;
        }
        if (std::any_of(e.begin(), e.end(), [](Exponent x) { return x != 0; })) gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::minimalize(std::move(gens));
}

/// The acceptance corpus: t <= 3, exponents <= 6, at most 8 generators.
inline std::vector<MonomialIdeal> m_primary_corpus(std::size_t count, std::uint64_t seed, std::size_t min_t = 1,
                                                   std::size_t max_t = 3) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> t_dist(min_t, max_t);
    std::vector<MonomialIdeal> out;
    while (out.size() < count) {
        const std::size_t t = t_dist(rng);
        auto I = random_m_primary(rng, t, 6, 8 - t);
        if (I.generators().size() <= 8) out.push_back(std::move(I));
    }
    return out;
}

/// Random (not necessarily m-primary) ideal with 1..4 generators.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t t, Exponent max_exp = 3) {
    std::uniform_int_distribution<Exponent> exp_dist(0, max_exp);
    std::uniform_int_distribution<std::size_t> count_dist(1, 4);
    std::vector<Monomial> gens;
    const std::size_t k = count_dist(rng);
    while (gens.size() < k) {
        std::vector<Exponent> e(t);
        for (auto& x : e) x = exp_dist(rng);
        if (std::any_of(e.begin(), e.end(), [](Exponent x) { return x != 0; })) gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::minimalize(std::move(gens));
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t t, Exponent max_exp) {
    std::uniform_int_distribution<Exponent> d(0, max_exp);
    std::vector<Exponent> e(t);
    for (auto& x : e) x = d(rng);
    return Monomial(std::move(e));
}

/// Every exponent vector in prod [0, upper_i].
inline std::vector<Monomial> box(const std::vector<Exponent>& upper) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(upper.size(), 0);
    while (true) {
        out.emplace_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == upper[i]) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    return out;
}

/// (I : f) is prime iff its minimal generators are all variables.
inline std::optional<MonomialPrime> prime_of(const MonomialIdeal& J) {
    if (J.is_unit()) return std::nullopt;
    std::vector<std::size_t> s;
    for (const auto& g : J.generators()) {
        if (g.degree() != 1) return std::nullopt;
        s.push_back(g.support().front());
    }
    return MonomialPrime(J.ambient(), s);
}

inline std::vector<Exponent> caps_of(const MonomialIdeal& I) {
    std::vector<Exponent> c(I.ambient(), 0);
    for (const auto& g : I.generators())
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(c[i], g[i]);
    return c;
}

/// Brute-force v(I): sort the whole box by (degree, lex), take the first prime colon.
inline VWitness brute_v(const MonomialIdeal& I) {
    auto pts = box(caps_of(I));
    std::stable_sort(pts.begin(), pts.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    });
    for (const auto& f : pts)
        if (auto P = prime_of(colon(I, f))) return VWitness{f.degree(), f, *P};
    throw std::logic_error("brute_v: no witness");
}

/// Brute-force v(I(G)): all vertex subsets as bitmasks, minimum popcount that qualifies.
inline std::size_t brute_v_graph(const Graph& G) {
    const std::size_t n = G.vertex_count();
    std::size_t best = n + 1;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        VertexSet A;
        for (std::size_t v = 0; v < n; ++v)
            if (m & (1u << v)) A.push_back(v + 1);
        if (A.size() >= best || !is_stable(G, A)) continue;
        if (is_minimal_vertex_cover(G, neighborhood(G, A))) best = A.size();
    }
    return best;
}

/// I(C_5), vertices 1..5 standing for a..e.
inline MonomialIdeal c5_ideal() { return edge_ideal(cycle(5)); }

inline MonomialIdeal six_generator_ideal() {
    return MonomialIdeal{{10, 0, 0}, {0, 11, 0}, {0, 0, 12}, {1, 4, 1}, {1, 2, 3}, {3, 1, 5}};
}

}  // namespace vnum::testing
