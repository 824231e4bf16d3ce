#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cycodes/grs.hpp"
#include "cycodes/theorems.hpp"

using namespace cycodes;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

std::vector<uint32_t> subset_of(uint32_t mask, uint32_t e) {
    std::vector<uint32_t> I;
    for (uint32_t i = 0; i < e; ++i)
        if (mask & (1u << i)) I.push_back(i);
    return I;
}

bool has_recipe(const std::vector<ConstructionRecipe>& rs, Claim claim, uint32_t length,
                bool zero, const std::string& provenance) {
    return std::any_of(rs.begin(), rs.end(), [&](const ConstructionRecipe& r) {
        return r.claim == claim && r.length == length && r.include_zero == zero &&
               r.provenance == provenance;
    });
}

/// Class-set size bookkeeping every recipe must satisfy.
void check_shape(const ConstructionRecipe& r) {
    uint32_t n = r.f * uint32_t(r.I.size()) + (r.include_zero ? 1 : 0) +
                 (r.claim == Claim::SigmaEG ? 1 : 0);
    CHECK(r.length == n);
    CHECK(r.e * r.f + 1 == r.q);
}

/// Builds the witnessed code and confirms it is what the recipe promises.
void check_materializes(const FieldContext& F, const ConstructionRecipe& r) {
    CyclotomicContext cyc(F, r.e);
    EvaluationSet S = EvaluationSet::from_classes(cyc, r.I, r.include_zero);
    CodeKind kind = r.claim == Claim::SigmaG ? CodeKind::GRS : CodeKind::EGRS;
    auto code = make_self_dual_code(S, kind);
    REQUIRE(code);
    CHECK(code->length() == r.length);
    CHECK(check_self_dual(F, generator_matrix(*code)));
}

}  // namespace

TEST_CASE("parity formulas on frozen small cases") {
    FieldContext F = FieldContext::build(13, 1);
    CyclotomicContext cyc(F, 2);
    CyclotomicTable T = table_bruteforce(cyc);

    ParityProfile one = parity_profile(T, {0});
    CHECK(one.phi_S == std::vector<uint8_t>{1});
    CHECK(one.phi_S_tilde == std::vector<uint8_t>{1});
    CHECK(one.phi_S_tilde_zero == 0);
    CHECK(one.I_odd_size == 0);

    ParityProfile both = parity_profile(T, {1, 0});  // order not significant
    CHECK(both.I == std::vector<uint32_t>{0, 1});
    CHECK(both.phi_S_tilde_zero == 0);
    CHECK(both.I_odd_size == 1);

    CHECK(kind_of([&] { parity_profile(T, {}); }) == ErrorKind::EmptyIndexSet);
    CHECK(kind_of([&] { parity_profile(T, {2}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { parity_profile(T, {0, 0}); }) == ErrorKind::DuplicateElement);
}

TEST_CASE("parity formulas match the measured parities everywhere") {
    const std::pair<uint64_t, uint32_t> cases[] = {
        {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {17, 1}, {5, 2}, {3, 3}};
    for (auto [p, m] : cases) {
        FieldContext F = FieldContext::build(p, m);
        for (uint32_t e : {2u, 4u}) {
            if ((F.q() - 1) % e != 0) continue;
            CyclotomicContext cyc(F, e);
            CyclotomicTable T = table_bruteforce(cyc);
            for (uint32_t mask = 1; mask < (1u << e); ++mask) {
                std::vector<uint32_t> I = subset_of(mask, e);
                ParityProfile pred = parity_profile(T, I);
                ParityProfile meas = oracle_parity(cyc, I);
                REQUIRE(pred.I == meas.I);
                CHECK(pred.phi_S == meas.phi_S);
                CHECK(pred.phi_S_tilde == meas.phi_S_tilde);
                CHECK(pred.phi_S_tilde_zero == meas.phi_S_tilde_zero);
                CHECK(pred.I_odd_size == meas.I_odd_size);
            }
        }
    }
}

TEST_CASE("per-set case analysis emits the expected claims") {
    FieldContext F13 = FieldContext::build(13, 1);
    CyclotomicTable T2 = table_bruteforce(CyclotomicContext(F13, 2));

    auto squares = recipes_for_index_set(T2, {0});
    REQUIRE(squares.size() == 1);
    CHECK(squares[0].claim == Claim::SigmaG);
    CHECK(squares[0].length == 6);
    CHECK_FALSE(squares[0].include_zero);
    CHECK(squares[0].provenance == "Thm6 case 1.1");
    check_shape(squares[0]);

    auto whole = recipes_for_index_set(T2, {0, 1});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].claim == Claim::SigmaEG);
    CHECK(whole[0].length == 14);
    CHECK(whole[0].include_zero);
    CHECK(whole[0].provenance == "Thm6 case 1.2");

    FieldContext F7 = FieldContext::build(7, 1);
    CyclotomicTable U = table_bruteforce(CyclotomicContext(F7, 2));
    auto both = recipes_for_index_set(U, {0});
    REQUIRE(both.size() == 2);
    CHECK(has_recipe(both, Claim::SigmaEG, 4, false, "Thm6 case 3.1"));
    CHECK(has_recipe(both, Claim::SigmaG, 4, true, "Thm6 case 3.2"));

    // Odd f, even set count: the quartic classes of F_13 pair up.
    CyclotomicTable T4 = table_bruteforce(CyclotomicContext(F13, 4));
    auto pair = recipes_for_index_set(T4, {0, 2});
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].claim == Claim::SigmaG);
    CHECK(pair[0].length == 6);
    CHECK(pair[0].provenance == "Thm6 case 2.1");
}

TEST_CASE("one- and two-class families") {
    FieldContext F13 = FieldContext::build(13, 1);
    CyclotomicTable T = table_bruteforce(CyclotomicContext(F13, 2));
    auto rs = recipes_generic(F13, T);
    REQUIRE(rs.size() == 2);
    CHECK(has_recipe(rs, Claim::SigmaG, 6, false, "Thm8(1)"));
    CHECK(has_recipe(rs, Claim::SigmaEG, 14, true, "Thm8(2)"));
    for (const auto& r : rs) check_shape(r);

    FieldContext F7 = FieldContext::build(7, 1);
    CyclotomicTable U = table_bruteforce(CyclotomicContext(F7, 2));
    auto gs = recipes_generic(F7, U);
    REQUIRE(gs.size() == 3);
    CHECK(has_recipe(gs, Claim::SigmaEG, 4, false, "Thm8(3)"));
    CHECK(has_recipe(gs, Claim::SigmaG, 4, true, "Thm8(3)"));
    CHECK(has_recipe(gs, Claim::SigmaEG, 8, true, "Thm8(4)"));

    FieldContext F17 = FieldContext::build(17, 1);
    CyclotomicTable V4 = table_bruteforce(CyclotomicContext(F17, 4));
    auto quartic = recipes_generic(F17, V4);
    REQUIRE(quartic.size() == 4);
    CHECK(has_recipe(quartic, Claim::SigmaG, 4, false, "Thm8(1)"));
    CHECK(has_recipe(quartic, Claim::SigmaEG, 6, true, "Thm8(1) moreover"));
    CHECK(has_recipe(quartic, Claim::SigmaEG, 10, true, "Thm8(2)"));
    CHECK(has_recipe(quartic, Claim::SigmaG, 8, false, "Thm8(2) moreover"));
}

TEST_CASE("quadratic-class families by residue of q") {
    auto table_of = [](uint64_t p) {
        FieldContext F = FieldContext::build(p, 1);
        return std::pair{F, table_bruteforce(CyclotomicContext(F, 2))};
    };

    {
        auto [F, T] = table_of(13);  // 13 = 5 (mod 8)
        auto rs = recipes_order2(F, T);
        REQUIRE(rs.size() == 1);
        CHECK(has_recipe(rs, Claim::SigmaEG, 14, true, "Thm11(1)"));
    }
    {
        auto [F, T] = table_of(17);  // 17 = 1 (mod 8)
        auto rs = recipes_order2(F, T);
        REQUIRE(rs.size() == 2);
        CHECK(has_recipe(rs, Claim::SigmaEG, 18, true, "Thm11(1)"));
        CHECK(has_recipe(rs, Claim::SigmaEG, 10, true, "Thm11(1) moreover"));
    }
    {
        auto [F, T] = table_of(11);  // 11 = 3 (mod 8)
        auto rs = recipes_order2(F, T);
        REQUIRE(rs.size() == 1);
        CHECK(has_recipe(rs, Claim::SigmaEG, 12, true, "Thm11(2)"));
    }
    {
        auto [F, T] = table_of(7);  // 7 = 7 (mod 8)
        auto rs = recipes_order2(F, T);
        REQUIRE(rs.size() == 3);
        CHECK(has_recipe(rs, Claim::SigmaEG, 8, true, "Thm11(2)"));
        CHECK(has_recipe(rs, Claim::SigmaEG, 4, false, "Thm11(2) moreover"));
        CHECK(has_recipe(rs, Claim::SigmaG, 4, true, "Thm11(2) moreover"));
        for (const auto& r : rs) check_shape(r);
    }
}

TEST_CASE("quartic-class families by residue of p") {
    FieldContext F13 = FieldContext::build(13, 1);
    CyclotomicTable T13 = table_bruteforce(CyclotomicContext(F13, 4));
    auto odd_f = recipes_order4(F13, T13);
    REQUIRE(odd_f.size() == 3);
    CHECK(has_recipe(odd_f, Claim::SigmaG, 6, false, "Thm12(1.2)"));
    CHECK(has_recipe(odd_f, Claim::SigmaEG, 14, true, "Thm12(1.2)"));
    CHECK(has_recipe(odd_f, Claim::SigmaEG, 4, false, "Thm12(1.2)"));
    auto six = std::find_if(odd_f.begin(), odd_f.end(),
                            [](const ConstructionRecipe& r) { return r.length == 6; });
    CHECK(six->I == std::vector<uint32_t>{0, 1});

    FieldContext F17 = FieldContext::build(17, 1);
    CyclotomicTable T17 = table_bruteforce(CyclotomicContext(F17, 4));
    auto even_f = recipes_order4(F17, T17);
    REQUIRE(even_f.size() == 6);
    CHECK(has_recipe(even_f, Claim::SigmaG, 4, false, "Thm12(1.1)"));
    CHECK(has_recipe(even_f, Claim::SigmaG, 8, false, "Thm12(1.1)"));
    CHECK(has_recipe(even_f, Claim::SigmaEG, 6, true, "Thm12(1.1)"));
    CHECK(has_recipe(even_f, Claim::SigmaEG, 10, true, "Thm12(1.1)"));
    CHECK(has_recipe(even_f, Claim::SigmaEG, 18, true, "Thm12(1.1)"));
    CHECK(has_recipe(even_f, Claim::SigmaG, 12, false, "Thm12(1.1) moreover"));

    // p = 3 (mod 4) hands off to the squared-pattern family.
    FieldContext F9 = FieldContext::build(3, 2);
    CyclotomicTable T9 = table_bruteforce(CyclotomicContext(F9, 4));
    auto sp = recipes_order4(F9, T9);
    REQUIRE(sp.size() == 6);
    CHECK(has_recipe(sp, Claim::SigmaG, 2, false, "Thm12(2.2)"));
    CHECK(has_recipe(sp, Claim::SigmaG, 4, false, "Thm12(2.2)"));
    CHECK(has_recipe(sp, Claim::SigmaG, 6, false, "Thm12(2.2)"));
    CHECK(has_recipe(sp, Claim::SigmaEG, 4, true, "Thm12(2.2)"));
    CHECK(has_recipe(sp, Claim::SigmaEG, 6, true, "Thm12(2.2)"));
    CHECK(has_recipe(sp, Claim::SigmaEG, 10, true, "Thm12(2.2)"));
}

TEST_CASE("squared-pattern families and their materialization") {
    FieldContext F9 = FieldContext::build(3, 2);
    CyclotomicTable T9 = table_bruteforce(CyclotomicContext(F9, 4));
    auto rs9 = recipes_semiprimitive(F9, T9);
    REQUIRE(rs9.size() == 6);
    CHECK(has_recipe(rs9, Claim::SigmaG, 2, false, "Thm10(2)"));
    CHECK(has_recipe(rs9, Claim::SigmaG, 4, false, "Thm10(2)"));
    CHECK(has_recipe(rs9, Claim::SigmaG, 6, false, "Thm10(2)"));
    CHECK(has_recipe(rs9, Claim::SigmaEG, 4, true, "Thm10(2)"));
    CHECK(has_recipe(rs9, Claim::SigmaEG, 6, true, "Thm10(2)"));
    CHECK(has_recipe(rs9, Claim::SigmaEG, 10, true, "Thm10(2)"));
    for (const auto& r : rs9) {
        check_shape(r);
        check_materializes(F9, r);
    }

    FieldContext F49 = FieldContext::build(7, 2);
    CyclotomicTable T49 = table_bruteforce(CyclotomicContext(F49, 4));
    auto rs49 = recipes_semiprimitive(F49, T49);
    REQUIRE(rs49.size() == 6);
    CHECK(has_recipe(rs49, Claim::SigmaG, 12, false, "Thm10(1)"));
    CHECK(has_recipe(rs49, Claim::SigmaG, 24, false, "Thm10(1)"));
    CHECK(has_recipe(rs49, Claim::SigmaEG, 14, true, "Thm10(1)"));
    CHECK(has_recipe(rs49, Claim::SigmaEG, 26, true, "Thm10(1)"));
    CHECK(has_recipe(rs49, Claim::SigmaEG, 38, true, "Thm10(1)"));
    CHECK(has_recipe(rs49, Claim::SigmaEG, 50, true, "Thm10(1)"));
    for (const auto& r : rs49) {
        check_shape(r);
        check_materializes(F49, r);
    }

    // The odd-eta with-zero family only uses index sets with even index sum.
    for (const auto& r : rs9)
        if (r.claim == Claim::SigmaEG) {
            uint32_t sum = 0;
            for (uint32_t i : r.I) sum += i;
            CHECK(sum % 2 == 0);
        }
}

TEST_CASE("claim enumeration for F_13 up to quartic classes") {
    FieldContext F = FieldContext::build(13, 1);
    auto rows = enumerate_claims(F, 4);
    REQUIRE(rows.size() == 4);

    CHECK(rows[0].n == 4);
    CHECK(rows[0].claim == Claim::SigmaG);
    CHECK(rows[0].provenance == std::vector<std::string>{"Thm6 case 3.2", "Thm8(3)"});
    CHECK(rows[0].representative.e == 4);
    CHECK(rows[0].representative.I == std::vector<uint32_t>{0});
    CHECK(rows[0].representative.include_zero);
    CHECK(rows[0].representative.provenance == "Thm6 case 3.2");

    CHECK(rows[1].n == 4);
    CHECK(rows[1].claim == Claim::SigmaEG);
    CHECK(rows[1].provenance ==
          std::vector<std::string>{"Thm12(1.2)", "Thm6 case 3.1", "Thm8(3)"});
    CHECK(rows[1].representative.I == std::vector<uint32_t>{0});
    CHECK_FALSE(rows[1].representative.include_zero);

    CHECK(rows[2].n == 6);
    CHECK(rows[2].claim == Claim::SigmaG);
    CHECK(rows[2].provenance ==
          std::vector<std::string>{"Thm12(1.2)", "Thm6 case 1.1", "Thm6 case 2.1", "Thm8(1)"});
    CHECK(rows[2].representative.e == 2);
    CHECK(rows[2].representative.I == std::vector<uint32_t>{0});

    CHECK(rows[3].n == 14);
    CHECK(rows[3].claim == Claim::SigmaEG);
    CHECK(rows[3].provenance == std::vector<std::string>{"Thm11(1)", "Thm12(1.2)",
                                                         "Thm6 case 1.2", "Thm6 case 2.2",
                                                         "Thm8(2)"});
    CHECK(rows[3].representative.e == 2);
    CHECK(rows[3].representative.I == std::vector<uint32_t>{0, 1});
    CHECK(rows[3].representative.include_zero);
    CHECK(rows[3].representative.provenance == "Thm11(1)");
}

TEST_CASE("claim enumeration for the smallest field") {
    FieldContext F = FieldContext::build(3, 1);
    auto rows = enumerate_claims(F, 2);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].n == 4);
    CHECK(rows[0].claim == Claim::SigmaEG);
    CHECK(rows[0].provenance ==
          std::vector<std::string>{"Thm11(2)", "Thm6 case 2.2", "Thm8(4)"});
    CHECK(rows[0].representative.I == std::vector<uint32_t>{0, 1});
}

TEST_CASE("every enumerated representative builds its code") {
    for (uint64_t q : {3, 5, 7, 9, 11, 13}) {
        FieldContext F = q == 9 ? FieldContext::build(3, 2) : FieldContext::build(q, 1);
        for (const ClaimRow& row : enumerate_claims(F, 4)) {
            check_shape(row.representative);
            CHECK(row.representative.length == row.n);
            check_materializes(F, row.representative);
        }
    }
}

TEST_CASE("lengths 2 mod 4 never appear when q is 3 mod 4") {
    for (uint64_t q : {7, 11, 19, 23}) {
        FieldContext F = FieldContext::build(q, 1);
        for (const ClaimRow& row : enumerate_claims(F, 4)) CHECK(row.n % 4 != 2);
    }
}

TEST_CASE("named families are contained in the per-set analysis") {
    FieldContext F = FieldContext::build(17, 1);
    for (uint32_t e : {2u, 4u}) {
        CyclotomicTable T = table_bruteforce(CyclotomicContext(F, e));
        std::vector<ConstructionRecipe> named = recipes_generic(F, T);
        if (e == 2) {
            auto more = recipes_order2(F, T);
            named.insert(named.end(), more.begin(), more.end());
        } else {
            auto more = recipes_order4(F, T);
            named.insert(named.end(), more.begin(), more.end());
        }
        for (const ConstructionRecipe& r : named) {
            CHECK(r.q == 17);
            CHECK(r.e == e);
            CHECK(r.f == 16 / e);
            auto sweep = recipes_for_index_set(T, r.I);
            CHECK(std::any_of(sweep.begin(), sweep.end(), [&](const ConstructionRecipe& s) {
                return s.claim == r.claim && s.length == r.length &&
                       s.include_zero == r.include_zero;
            }));
        }
    }
}

TEST_CASE("claim machinery error reporting") {
    FieldContext F13 = FieldContext::build(13, 1);
    FieldContext F11 = FieldContext::build(11, 1);
    CyclotomicTable T2 = table_bruteforce(CyclotomicContext(F13, 2));
    CyclotomicTable T4 = table_bruteforce(CyclotomicContext(F13, 4));

    CHECK(std::string(to_string(Claim::SigmaG)) == "sigma_g");
    CHECK(std::string(to_string(Claim::SigmaEG)) == "sigma_eg");

    CHECK(kind_of([&] { enumerate_claims(F13, 1); }) == ErrorKind::BadE);
    CHECK(kind_of([&] { enumerate_claims(F13, 14); }) == ErrorKind::CapExceeded);
    CHECK(kind_of([&] { recipes_order2(F13, T4); }) == ErrorKind::WrongE);
    CHECK(kind_of([&] { recipes_order4(F13, T2); }) == ErrorKind::WrongE);
    CHECK(kind_of([&] { recipes_semiprimitive(F13, T4); }) == ErrorKind::NotSemiprimitive);
    CHECK(kind_of([&] { recipes_generic(F11, T2); }) == ErrorKind::ContextMismatch);
}
