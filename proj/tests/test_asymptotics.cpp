#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "vnum/asymptotics.hpp"

using namespace vnum;
namespace vt = vnum::testing;

namespace {

std::vector<Exponent> values(const PowerSequence& s) {
    std::vector<Exponent> out;
    for (const auto& e : s.values) out.push_back(e.v.value);
    return out;
}

std::vector<Exponent> row_values(const std::vector<PowerCheckRow>& rows) {
    std::vector<Exponent> out;
    for (const auto& r : rows) out.push_back(r.v);
    return out;
}

}  // namespace

TEST_CASE("power sequences", "[powers]") {
    auto c5 = power_sequence(vt::c5_ideal(), 4);
    REQUIRE(values(c5) == std::vector<Exponent>{2, 3, 5, 7});
    REQUIRE(c5.alpha == 2);
    REQUIRE(c5.values[2].alpha == 6);
    REQUIRE_FALSE(c5.cutoff);

    REQUIRE(values(power_sequence(MonomialIdeal{{2, 0}, {0, 3}}, 4)) == std::vector<Exponent>{3, 5, 7, 9});
    REQUIRE(values(power_sequence(vt::six_generator_ideal(), 2)) == std::vector<Exponent>{14, 17});
    REQUIRE_THROWS_AS(power_sequence(vt::c5_ideal(), 0), DomainError);

    auto cut = power_sequence(vt::six_generator_ideal(), 3, 200);
    REQUIRE(cut.cutoff == 1);
    REQUIRE(cut.values.empty());
}

TEST_CASE("linear bound certificate", "[powers]") {
    const auto I = vt::c5_ideal();
    const Monomial ab{1, 1, 0, 0, 0};
    auto cert = linear_bound_certificate(I, ab, 3);
    REQUIRE(cert.n0 == 1);
    REQUIRE(cert.d == 1);
    REQUIRE(cert.holds);
    REQUIRE(row_values(cert.rows) == std::vector<Exponent>{3, 5, 7});
    for (const auto& r : cert.rows) REQUIRE(r.v == *r.upper);

    REQUIRE(default_bound_generator(I) == Monomial{0, 0, 0, 1, 1});
    REQUIRE_THROWS_AS(linear_bound_certificate(I, Monomial{1, 0, 1, 0, 0}), DomainError);
    REQUIRE_THROWS_AS(linear_bound_certificate(I, Monomial{1, 1, 1, 0, 0}), DomainError);
}

TEST_CASE("linear bound on pure-power ideals has d = v", "[powers]") {
    for (const auto& I : {MonomialIdeal{{2, 0}, {0, 3}}, MonomialIdeal{{3, 0, 0}, {0, 3, 0}, {0, 0, 2}}}) {
        auto cert = linear_bound_certificate(I, default_bound_generator(I), 2);
        REQUIRE(cert.d == v_oracle(I).value);
        REQUIRE(cert.holds);
    }
}

TEST_CASE("alpha equality class", "[powers]") {
    auto r = check_alpha_equality_class(MonomialIdeal{{5, 0}, {0, 5}, {3, 2}, {2, 3}}, 2);
    REQUIRE(r.base_v == 4);
    REQUIRE(r.holds);
    REQUIRE(row_values(r.rows) == std::vector<Exponent>{9, 14});

    auto q = check_alpha_equality_class(MonomialIdeal{{2, 0}, {0, 2}, {1, 1}}, 2);
    REQUIRE(q.holds);
    REQUIRE(row_values(q.rows) == std::vector<Exponent>{3, 5});

    REQUIRE_THROWS_WITH(check_alpha_equality_class(vt::six_generator_ideal(), 1),
                        Catch::Matchers::ContainsSubstring("class hypothesis not met"));
    REQUIRE_THROWS_AS(check_alpha_equality_class(vt::c5_ideal(), 1), DomainError);
}

TEST_CASE("pure power class", "[powers]") {
    auto r = check_pure_power_class(MonomialIdeal{{2, 0}, {0, 3}}, 3);
    REQUIRE(r.holds);
    REQUIRE(row_values(r.rows) == std::vector<Exponent>{5, 7, 9});

    auto m = check_pure_power_class(MonomialIdeal{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2);
    REQUIRE(m.base_v == 0);
    REQUIRE(row_values(m.rows) == std::vector<Exponent>{1, 2});

    auto z = check_pure_power_class(MonomialIdeal{{3, 0, 0}, {0, 3, 0}, {0, 0, 2}}, 2);
    REQUIRE(z.holds);
    REQUIRE(row_values(z.rows) == std::vector<Exponent>{7, 9});

    REQUIRE_THROWS_WITH(check_pure_power_class(vt::six_generator_ideal(), 1),
                        Catch::Matchers::ContainsSubstring("mixed generators"));
}

TEST_CASE("edge ideal power bounds", "[powers][graph]") {
    auto p5 = check_edge_power_bounds(path(5), 2);
    REQUIRE(p5.base_v == 1);
    REQUIRE(p5.holds);
    REQUIRE(row_values(p5.rows) == std::vector<Exponent>{3, 5});

    auto c5 = check_edge_power_bounds(cycle(5), 2);
    REQUIRE(c5.base_v == 2);
    REQUIRE(c5.holds);
    REQUIRE(row_values(c5.rows) == std::vector<Exponent>{3, 5});

    auto p4 = check_edge_power_bounds(path(4), 2);
    REQUIRE(p4.holds);
    REQUIRE(p4.rows.front().expected == 3);
}

TEST_CASE("powers eventually dominate the base", "[powers]") {
    auto pure = check_power_lower_vs_base(MonomialIdeal{{2, 0}, {0, 3}}, 2);
    REQUIRE(pure.threshold_s == 1);
    REQUIRE(pure.holds);
    REQUIRE(pure.values.front() == std::pair<std::uint64_t, Exponent>{1, 5});
    REQUIRE(pure.first_holding_s == 1);

    auto mixed = check_power_lower_vs_base(vt::six_generator_ideal(), 1);
    REQUIRE(mixed.base_v == 14);
    REQUIRE(mixed.threshold_s == 5);
    REQUIRE(mixed.values.front().second == 17);
    REQUIRE(mixed.holds);

    REQUIRE_THROWS_AS(check_power_lower_vs_base(vt::c5_ideal(), 1), DomainError);
}

TEST_CASE("regularity gap family", "[reg]") {
    auto r = reg_gap_family({5, 5}, 1, 2);
    REQUIRE(r.ideal == MonomialIdeal{{5, 0}, {0, 5}, {4, 2}});
    REQUIRE(r.v == 5);
    REQUIRE(r.reg == 7);
    REQUIRE(r.holds);

    REQUIRE(reg_gap_family({4, 4}, 1, 1).holds);
    auto three = reg_gap_family({4, 5, 3}, 1, 2);
    REQUIRE(three.v == 12 - 6);
    REQUIRE(three.reg == 12 - 4);
    REQUIRE(three.holds);

    REQUIRE_THROWS_AS(reg_gap_family({5}, 1, 1), DomainError);
    REQUIRE_THROWS_AS(reg_gap_family({5, 5}, 0, 1), DomainError);
    REQUIRE_THROWS_AS(reg_gap_family({5, 3}, 1, 2), DomainError);
}

TEST_CASE("v is at most the regularity", "[reg][property]") {
    for (const auto& I : vt::m_primary_corpus(80, 23)) {
        const auto c = check_v_le_reg(I);
        REQUIRE(c.holds);
        REQUIRE(c.v == vt::brute_v(I).value);
    }
    REQUIRE_THROWS_AS(check_v_le_reg(vt::c5_ideal()), DomainError);
}
