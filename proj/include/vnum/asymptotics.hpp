#pragma once

// v-numbers of powers I^n: exact sequences, the linear upper bound n*alpha(I) + d obtained
// from the colon chain (I^{n+1} : f^n), the classes where that bound is attained, and the
// comparison with reg(S/I) in the m-primary case.
//
// Statements about "all large n" are only ever checked on the computed window.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnum/engine.hpp"
#include "vnum/error.hpp"
#include "vnum/graph.hpp"
#include "vnum/monomial.hpp"

namespace vnum {

struct PowerEntry {
    std::uint64_t power = 0;  // k in I^k
    Exponent alpha = 0;       // alpha(I^k), computed directly
    VWitness v;
};

struct PowerSequence {
    MonomialIdeal ideal;
    Exponent alpha = 0;
    std::vector<PowerEntry> values;       // powers 1..N in order
    std::optional<std::uint64_t> cutoff;  // first power whose search exceeded the budget
};

/// v(I^k) for k = 1..max_power. Stops early, marking `cutoff`, when a search would exceed `budget`.
inline PowerSequence power_sequence(const MonomialIdeal& I, std::uint64_t max_power,
                                    std::uint64_t budget = kDefaultBudget) {
    if (max_power == 0) throw DomainError("power sequence needs N >= 1");
    PowerSequence seq{I, alpha(I), {}, std::nullopt};
    MonomialIdeal Ik = I;
    for (std::uint64_t k = 1; k <= max_power; ++k) {
        if (k > 1) Ik = product(Ik, I);
        try {
            seq.values.push_back(PowerEntry{k, alpha(Ik), v_oracle(Ik, budget)});
        } catch (const BudgetExceeded&) {
            seq.cutoff = k;
            break;
        }
    }
    return seq;
}

/// One row of a power check, for I^{n+1}.
struct PowerCheckRow {
    std::uint64_t n = 0;
    Exponent v = 0;
    Exponent lower = 0;
    std::optional<Exponent> upper;
    std::optional<Exponent> expected;
    bool ok = true;
};

struct PowerCheckReport {
    std::string check;
    Exponent base_v = 0;
    Exponent alpha = 0;
    std::vector<PowerCheckRow> rows;
    std::optional<std::uint64_t> cutoff;  // first n whose search exceeded the budget
    bool holds = true;
};

namespace detail {

/// Runs `row(n, v(I^{n+1}))` for n = 1..N, collecting rows until the budget runs out.
template <class Row>
void fill_power_rows(PowerCheckReport& report, const MonomialIdeal& I, std::uint64_t N, std::uint64_t budget,
                     Row&& row) {
    MonomialIdeal In = I;
    for (std::uint64_t n = 1; n <= N; ++n) {
        In = product(In, I);
        Exponent v = 0;
        try {
            v = v_oracle(In, budget).value;
        } catch (const BudgetExceeded&) {
            report.cutoff = n;
            return;
        }
        PowerCheckRow r = row(n, v);
        report.holds = report.holds && r.ok;
        report.rows.push_back(r);
    }
}

}  // namespace detail

struct LinearBoundCertificate {
    Monomial f;
    std::uint64_t n0 = 0;
    Exponent d = 0;
    MonomialIdeal stable_colon;  // (I^{n0+1} : f^{n0})
    std::vector<MonomialIdeal> chain;  // (I^{n+1} : f^n) for n = 1..n0+1
    std::vector<PowerCheckRow> rows;   // v(I^{n+1}) <= n*alpha + d for computed n >= n0
    bool holds = true;
};

/// The lex-smallest generator of minimum degree.
inline Monomial default_bound_generator(const MonomialIdeal& I) {
    const Exponent a = alpha(I);
    for (const auto& g : I.generators())
        if (g.degree() == a) return g;
    throw std::logic_error("no generator of degree alpha");
}

/// Follows I <= (I^2 : f) <= (I^3 : f^2) <= ... until two consecutive colons coincide at
/// index n0, sets d = v(I^{n0+1} : f^{n0}), and checks v(I^{n+1}) <= n*alpha(I) + d for
/// n0 <= n <= max_n.
inline LinearBoundCertificate linear_bound_certificate(const MonomialIdeal& I, const Monomial& f,
                                                       std::uint64_t max_n = 3, std::uint64_t horizon = 8,
                                                       std::uint64_t budget = kDefaultBudget) {
    const Exponent a = alpha(I);
    if (!contains(I, f) || f.degree() != a) throw DomainError("f must be an element of I of degree alpha(I)");

    std::vector<MonomialIdeal> chain;
    MonomialIdeal P = power(I, 2);  // I^{n+1}
    Monomial fn = f;                // f^n
    std::optional<std::uint64_t> n0;
    for (std::uint64_t n = 1; n <= horizon + 1; ++n) {
        chain.push_back(colon(P, fn));
        if (chain.size() >= 2 && chain[chain.size() - 1] == chain[chain.size() - 2]) {
            n0 = n - 1;
            break;
        }
        P = product(P, I);
        fn *= f;
    }
    if (!n0) throw DomainError("colon chain did not stabilize within horizon " + std::to_string(horizon));

    const MonomialIdeal& J = chain[*n0 - 1];
    LinearBoundCertificate cert{f, *n0, v_oracle(J, budget).value, J, chain, {}, true};

    MonomialIdeal In = power(I, *n0 + 1);
    for (std::uint64_t n = *n0; n <= max_n; ++n) {
        if (n > *n0) In = product(In, I);
        PowerCheckRow r;
        r.n = n;
        r.v = v_oracle(In, budget).value;
        r.lower = (n + 1) * a - 1;
        r.upper = n * a + cert.d;
        r.ok = r.v <= *r.upper;
        cert.holds = cert.holds && r.ok;
        cert.rows.push_back(r);
    }
    return cert;
}

/// For m-primary I with v(I) = alpha(I) - 1: checks v(I^{n+1}) = v(I) + n*alpha(I) for n = 1..N.
inline PowerCheckReport check_alpha_equality_class(const MonomialIdeal& I, std::uint64_t N,
                                                   std::uint64_t budget = kDefaultBudget) {
    if (!is_m_primary(I)) throw DomainError("class hypothesis not met: ideal is not m-primary");
    const Exponent a = alpha(I);
    const Exponent v = v_primary_matrix(I).value;
    if (v + 1 != a)
        throw DomainError("class hypothesis not met: v(I) = " + std::to_string(v) + " but alpha(I) - 1 = " +
                          std::to_string(a - 1));
    PowerCheckReport report{"alpha-class", v, a, {}, std::nullopt, true};
    detail::fill_power_rows(report, I, N, budget, [&](std::uint64_t n, Exponent vn) {
        PowerCheckRow r{n, vn, (n + 1) * a - 1, std::nullopt, v + n * a, false};
        r.ok = vn == *r.expected;
        return r;
    });
    return report;
}

/// For I generated by pure powers: checks v(I^{n+1}) = v(I) + n*alpha(I) for n = 1..N.
inline PowerCheckReport check_pure_power_class(const MonomialIdeal& I, std::uint64_t N,
                                               std::uint64_t budget = kDefaultBudget) {
    if (!is_pure_power_ideal(I)) throw DomainError("mixed generators: ideal is not generated by pure powers");
    const Exponent a = alpha(I);
    const Exponent v = v_oracle(I, budget).value;
    PowerCheckReport report{"pure-power-class", v, a, {}, std::nullopt, true};
    detail::fill_power_rows(report, I, N, budget, [&](std::uint64_t n, Exponent vn) {
        PowerCheckRow r{n, vn, (n + 1) * a - 1, std::nullopt, v + n * a, false};
        r.ok = vn == *r.expected;
        return r;
    });
    return report;
}

/// Edge ideal powers: 2(n+1) - 1 <= v(I^{n+1}) <= 2n + v(I), with equality 2n + 1 when v(I) = 1.
inline PowerCheckReport check_edge_power_bounds(const Graph& G, std::uint64_t N, std::uint64_t budget = kDefaultBudget) {
    const MonomialIdeal I = edge_ideal(G);
    const Exponent v = v_oracle(I, budget).value;
    PowerCheckReport report{"edge-power-bounds", v, 2, {}, std::nullopt, true};
    detail::fill_power_rows(report, I, N, budget, [&](std::uint64_t n, Exponent vn) {
        PowerCheckRow r{n, vn, 2 * (n + 1) - 1, 2 * n + v, std::nullopt, false};
        if (v == 1) r.expected = 2 * n + 1;
        r.ok = r.lower <= vn && vn <= *r.upper && (!r.expected || vn == *r.expected);
        return r;
    });
    return report;
}

struct LowerVsBaseReport {
    Exponent base_v = 0;
    std::uint64_t threshold_s = 0;                // least s with (s+1)alpha - 1 >= sum a_i - t
    std::optional<std::uint64_t> first_holding_s;  // least s >= 1 in the window with v(I^{s+1}) >= v(I)
    std::vector<std::pair<std::uint64_t, Exponent>> values;  // (s, v(I^{s+1}))
    bool holds = true;  // v(I^{s+1}) >= v(I) for every computed s >= threshold_s
};

/// Checks v(I^{s+1}) >= v(I) for s = 1..max(s_max, threshold).
inline LowerVsBaseReport check_power_lower_vs_base(const MonomialIdeal& I, std::uint64_t s_max,
                                                   std::uint64_t budget = kDefaultBudget) {
    const auto bounds = v_bounds(I);
    if (!bounds.upper) throw DomainError("ideal is not m-primary");
    const Exponent a = alpha(I);
    LowerVsBaseReport report;
    report.base_v = v_primary_matrix(I).value;
    while ((report.threshold_s + 1) * a - 1 < *bounds.upper) ++report.threshold_s;

    const std::uint64_t last = std::max<std::uint64_t>({s_max, report.threshold_s, 1});
    MonomialIdeal P = I;
    for (std::uint64_t s = 1; s <= last; ++s) {
        P = product(P, I);
        const Exponent vs = v_oracle(P, budget).value;
        report.values.emplace_back(s, vs);
        if (vs >= report.base_v && !report.first_holding_s) report.first_holding_s = s;
        if (s >= report.threshold_s && vs < report.base_v) report.holds = false;
    }
    return report;
}

struct RegGapResult {
    MonomialIdeal ideal;
    Exponent v = 0;
    Exponent reg = 0;
    Exponent expected_v = 0;    // sum a_i - (u + n + t)
    Exponent expected_reg = 0;  // sum a_i - (u + t)
    bool holds = false;         // both match and reg - v = n
};

/// I = <x_i^{a_i}> + <x_1^{a_1 - u} x_2^{a_2 - (u + n)}>, whose regularity exceeds its v-number by n.
inline RegGapResult reg_gap_family(const std::vector<Exponent>& a, Exponent u, Exponent n,
                                   std::uint64_t budget = kDefaultBudget) {
    const std::size_t t = a.size();
    if (t < 2) throw DomainError("gap family needs at least 2 variables");
    if (u < 1 || n < 1) throw DomainError("gap family needs u >= 1 and n >= 1");
    for (Exponent e : a)
        if (e < 1) throw DomainError("pure-power exponents must be positive");
    if (a[0] <= u || a[1] <= u + n) throw DomainError("gap family needs a_1 - u > 0 and a_2 - (u + n) > 0");

    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < t; ++i) gens.push_back(Monomial::variable(t, i, a[i]));
    std::vector<Exponent> mixed(t, 0);
    mixed[0] = a[0] - u;
    mixed[1] = a[1] - (u + n);
    gens.emplace_back(std::move(mixed));

    Exponent total = 0;
    for (Exponent e : a) total = detail::checked_add(total, e);
    RegGapResult r{MonomialIdeal::minimalize(std::move(gens)), 0, 0, total - (u + n + t), total - (u + t), false};
    r.v = v_primary_matrix(r.ideal).value;
    r.reg = regularity_zero_dim(r.ideal, budget);
    r.holds = r.v == r.expected_v && r.reg == r.expected_reg && r.reg - r.v == n;
    return r;
}

struct VRegComparison {
    Exponent v = 0;
    Exponent reg = 0;
    bool holds = false;
};

/// v(I) <= reg(S/I) for m-primary I.
inline VRegComparison check_v_le_reg(const MonomialIdeal& I, std::uint64_t budget = kDefaultBudget) {
    if (!is_m_primary(I)) throw DomainError("v <= reg comparison requires an m-primary ideal");
    VRegComparison c{v_primary_matrix(I).value, regularity_zero_dim(I, budget), false};
    c.holds = c.v <= c.reg;
    return c;
}

}  // namespace vnum
