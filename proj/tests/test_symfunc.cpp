#include <doctest.h>

#include <stdexcept>

#include "fockforge/symfunc.hpp"
#include "oracles.hpp"

using namespace fockforge;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

SymFunc schur_combo(int bound, std::initializer_list<std::pair<Partition, int>> terms) {
    SymFunc f(Basis::Schur, bound);
    for (const auto& [lambda, c] : terms) f.add(lambda, c);
    return f;
}

}  // namespace

TEST_CASE("power sum multiplication examples") {
    CHECK(mult_by_power_sum(1, SymFunc::schur(P({1}), 4)) == schur_combo(4, {{P({2}), 1}, {P({1, 1}), 1}}));
    CHECK(mult_by_power_sum(2, SymFunc::one(4)) == schur_combo(4, {{P({2}), 1}, {P({1, 1}), -1}}));
    CHECK(mult_by_power_sum(1, SymFunc::one(4)) == SymFunc::schur(P({1}), 4));
    // Truncation drops what exceeds the bound.
    CHECK(mult_by_power_sum(3, SymFunc::schur(P({1}), 3)).is_zero());
}

TEST_CASE("power sum multiplication against tableau expansion") {
    for (int r = 1; r <= 4; ++r)
        for (int k = 0; k + r <= 6; ++k)
            for (const auto& lambda : partitions_of(k)) {
                const SymFunc got = mult_by_power_sum(r, SymFunc::schur(lambda, 6));
                SymFunc want(Basis::Schur, 6);
                for (const auto& [mu, c] : oracle::power_times_schur(r, lambda)) want.add(mu, c);
                CHECK_MESSAGE(got == want, "r=" << r << " lambda=" << to_string(lambda));
            }
}

TEST_CASE("border strips") {
    auto strips = add_border_strips(Partition(), 3);
    CHECK(strips.size() == 3);
    auto removed = remove_border_strips(P({2, 1}), 3);
    REQUIRE(removed.size() == 1);
    CHECK(removed[0] == std::pair<Partition, int>{Partition(), -1});
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int r = 1; r <= 3; ++r) {
                std::map<Partition, int> got;
                for (const auto& [mu, s] : add_border_strips(lambda, r)) got[mu] += s;
                CHECK(got == oracle::add_ribbons(lambda, r));
                std::map<Partition, int> down;
                for (const auto& [mu, s] : remove_border_strips(lambda, r)) down[mu] += s;
                CHECK(down == oracle::remove_ribbons(lambda, r));
            }
}

TEST_CASE("characters are orthogonal") {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                Rational sum = 0;
                for (const auto& rho : parts)
                    sum += Rational(character(a, rho) * character(b, rho)) / Rational(z_value(rho));
                CHECK(sum == (a == b ? 1 : 0));
            }
    }
    CHECK(character(P({2}), P({1, 1})) == 1);
    CHECK(character(P({1, 1}), P({2})) == -1);
}

TEST_CASE("basis changes") {
    CHECK(schur_to_power(P({1}), 4) == SymFunc::power(P({1}), 4));
    SymFunc half(Basis::Power, 4);
    half.add(P({1, 1}), ratio(1, 2));
    half.add(P({2}), ratio(1, 2));
    CHECK(schur_to_power(P({2}), 4) == half);
    CHECK(power_to_schur(P({2}), 4) == schur_combo(4, {{P({2}), 1}, {P({1, 1}), -1}}));
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CHECK(to_schur(schur_to_power(lambda, 6)) == SymFunc::schur(lambda, 6));
            CHECK(to_power(power_to_schur(lambda, 6)) == SymFunc::power(lambda, 6));
        }
}

TEST_CASE("Hall pairing") {
    CHECK(hall_pairing(SymFunc::schur(P({2}), 3), SymFunc::schur(P({2}), 3)) == 1);
    CHECK(hall_pairing(SymFunc::power(P({2}), 3), SymFunc::power(P({2}), 3)) == 2);
    CHECK(hall_pairing(SymFunc::schur(P({2}), 3), SymFunc::schur(P({1, 1}), 3)) == 0);
    CHECK_THROWS_AS(hall_pairing(SymFunc::one(3), SymFunc::one(4)), std::invalid_argument);
    for (int n = 0; n <= 5; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n))
                CHECK(hall_pairing(SymFunc::power(a, 5), SymFunc::power(b, 5)) ==
                      (a == b ? Rational(z_value(a)) : Rational(0)));
}

TEST_CASE("products") {
    CHECK(multiply(SymFunc::schur(P({1}), 4), SymFunc::schur(P({1}), 4)) ==
          schur_combo(4, {{P({2}), 1}, {P({1, 1}), 1}}));
    // s_1 s_2 = s_3 + s_21 (Pieri)
    CHECK(multiply(SymFunc::schur(P({1}), 4), SymFunc::schur(P({2}), 4)) ==
          schur_combo(4, {{P({3}), 1}, {P({2, 1}), 1}}));
}

TEST_CASE("Adams operation") {
    CHECK(plethysm_psi_m(2, SymFunc::power(P({1}), 4)) == SymFunc::power(P({2}), 4));
    CHECK(plethysm_psi_m(3, SymFunc::power(P({2}), 6)) == SymFunc::power(P({6}), 6));
    CHECK(plethysm_psi_m(2, SymFunc::schur(P({1}), 4)) == schur_combo(4, {{P({2}), 1}, {P({1, 1}), -1}}));
    CHECK(plethysm_psi_m(3, SymFunc::one(4)) == SymFunc::one(4));
    CHECK_THROWS_AS(plethysm_psi_m(2, SymFunc::schur(P({3}), 5)), std::domain_error);
    for (const auto& a : {P({1}), P({2}), P({1, 1})})
        for (const auto& b : {P({1}), P({1, 1})}) {
            const auto f = SymFunc::schur(a, 8), g = SymFunc::schur(b, 8);
            CHECK(plethysm_psi_m(2, multiply(f, g)) == multiply(plethysm_psi_m(2, f), plethysm_psi_m(2, g)));
        }
}

TEST_CASE("wreath functions") {
    const auto S = [](const char* t) { return WreathFunc::schur(parse_multipartition(t), 4); };
    CHECK(wreath_pairing(S("[2]|[1]"), S("[2]|[1]")) == 1);
    CHECK(wreath_pairing(S("[2]|[1]"), S("[1]|[2]")) == 0);
    const auto p20 = WreathFunc::power(parse_multipartition("[2]|[]"), 4);
    CHECK(wreath_pairing(p20, p20) == 2);
    CHECK(wreath_pairing(p20, WreathFunc::power(parse_multipartition("[]|[2]"), 4)) == 0);

    CHECK(wreath_mult_by_P(1, 0, WreathFunc::one(2, 4)) == S("[1]|[]"));
    CHECK(wreath_mult_by_P(2, 1, WreathFunc::one(2, 4)) == S("[]|[2]") - S("[]|[1,1]"));
    CHECK(wreath_mult_by_P(2, 1, WreathFunc(2, 4)).is_zero());
    // One-component rule against the ribbon oracle.
    for (const auto& mp : multipartitions_of(3, 2))
        for (int r = 1; r <= 3; ++r) {
            WreathFunc want(2, 6);
            for (const auto& [mu, s] : oracle::add_ribbons(mp[1], r)) want.add(mp.with_component(1, mu), s);
            CHECK(wreath_mult_by_P(r, 1, WreathFunc::schur(mp, 6)) == want);
        }

    CHECK(restrict_to_sym(S("[1]|[]")) == SymFunc::schur(P({1}), 4));
    CHECK(restrict_to_sym(S("[1]|[1]")) == schur_combo(4, {{P({2}), 1}, {P({1, 1}), 1}}));
    for (const char* t : {"[2]|[]", "[]|[2]"})
        CHECK(restrict_to_sym(WreathFunc::power(parse_multipartition(t), 4)) == to_schur(SymFunc::power(P({2}), 4)));

    CHECK(induce_from_sym(SymFunc::power(P({1}), 4), 3) ==
          WreathFunc::power(parse_multipartition("[1]|[]|[]"), 4) + WreathFunc::power(parse_multipartition("[]|[1]|[]"), 4) +
              WreathFunc::power(parse_multipartition("[]|[]|[1]"), 4));
    CHECK(induce_from_sym(SymFunc::one(4), 2) == WreathFunc::one(2, 4));
    CHECK(induce_from_sym(SymFunc::power(P({3}), 4), 1) == WreathFunc::power(parse_multipartition("[3]"), 4));

    // <Ind p_r, P_lambda> = r when lambda is one part r, else 0.
    for (int ell = 1; ell <= 3; ++ell)
        for (int r = 1; r <= 3; ++r) {
            const WreathFunc ind = induce_from_sym(SymFunc::power(P({r}), 4), ell);
            for (const auto& mp : multipartitions_of(r, ell)) {
                int single = 0;
                for (const auto& c : mp.components()) single += c == P({r});
                CHECK(wreath_pairing(ind, WreathFunc::power(mp, 4)) == (single ? r : 0));
            }
            CHECK(wreath_pairing(ind, ind) == r * ell);
        }
}

TEST_CASE("rotation") {
    const auto a = parse_multipartition("[1]|[]");
    CHECK(rotate_tau(a) == parse_multipartition("[]|[1]"));
    const auto one = parse_multipartition("[3,1]");
    CHECK(rotate_tau(one) == one);
    for (const auto& mp : multipartitions_of(4, 3)) {
        CHECK(rotate_tau(rotate_tau(rotate_tau(mp))) == mp);
        CHECK(rotate_tau(mp)[0] == mp[1]);
    }
}

TEST_CASE("degree bound and json") {
    SymFunc f(Basis::Schur, 2);
    CHECK_THROWS_AS(f.add(P({3}), 1), std::domain_error);
    f.add(P({2}), 1);
    f.add(P({2}), -1);
    CHECK(f.is_zero());
    const auto j = to_json(schur_combo(3, {{P({2}), 1}, {P({1, 1}), -1}}));
    CHECK(j["[2]"] == "1");
    CHECK(j["[1,1]"] == "-1");
}
