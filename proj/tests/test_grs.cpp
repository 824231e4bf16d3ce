#include "doctest.h"

#include <cstdint>
#include <set>

#include "cycodes/grs.hpp"
#include "cycodes/oracle.hpp"

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

EvaluationSet residues(const FieldContext& F, std::initializer_list<uint32_t> vals) {
    std::vector<FieldElement> elems;
    for (uint32_t v : vals) elems.push_back(F.element(v));
    return EvaluationSet::explicit_set(F, std::move(elems));
}

}  // namespace

TEST_CASE("evaluation sets have the canonical order") {
    FieldContext F = FieldContext::build(13, 1);
    CyclotomicContext cyc(F, 4);

    EvaluationSet S = EvaluationSet::from_classes(cyc, {2, 0}, true);
    REQUIRE(S.size() == 7);
    // Class 0 in log order, class 2 in log order, then the adjoined zero.
    std::vector<uint32_t> got;
    for (FieldElement x : S.elements()) got.push_back(x.v);
    CHECK(got == std::vector<uint32_t>{1, 3, 9, 4, 12, 10, 0});
    REQUIRE(S.provenance());
    CHECK(S.provenance()->I == std::vector<uint32_t>{0, 2});
    CHECK(S.provenance()->include_zero);
    CHECK(S.contains(F.element(9)));
    CHECK_FALSE(S.contains(F.element(2)));

    EvaluationSet X = residues(F, {5, 2, 11});
    got.clear();
    for (FieldElement x : X.elements()) got.push_back(x.v);
    CHECK(got == std::vector<uint32_t>{2, 5, 11});
    CHECK_FALSE(X.provenance());

    CHECK(kind_of([&] { EvaluationSet::from_classes(cyc, {}, false); }) ==
          ErrorKind::EmptyIndexSet);
    CHECK(kind_of([&] { EvaluationSet::from_classes(cyc, {4}, false); }) ==
          ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { EvaluationSet::from_classes(cyc, {1, 1}, false); }) ==
          ErrorKind::DuplicateElement);
    CHECK(kind_of([&] { residues(F, {3, 3}); }) == ErrorKind::DuplicateElement);
}

TEST_CASE("delta products") {
    FieldContext F = FieldContext::build(13, 1);
    CyclotomicContext cyc(F, 2);
    EvaluationSet S = EvaluationSet::from_classes(cyc, {0}, false);

    CHECK(delta(S, F.element(1)).v == 6);
    CHECK(F.phi(delta(S, F.element(1))) == 1);

    // Recount one delta by hand: squares are {1,3,4,9,10,12}.
    uint64_t prod = 1;
    for (uint32_t b : {1, 3, 4, 9, 10}) prod = prod * ((12 + 13 - b) % 13) % 13;
    CHECK(delta(S, F.element(12)).v == prod);

    CHECK(kind_of([&] { delta(S, F.element(2)); }) == ErrorKind::NotInSet);
}

TEST_CASE("plain scaling: squares of F_13 give a self-dual [6,3]") {
    FieldContext F = FieldContext::build(13, 1);
    CyclotomicContext cyc(F, 2);
    EvaluationSet S = EvaluationSet::from_classes(cyc, {0}, false);

    auto v = solve_scaling_grs(S);
    REQUIRE(v);
    REQUIRE(v->size() == 6);

    auto code = make_self_dual_code(S, CodeKind::GRS);
    REQUIRE(code);
    CHECK(code->dim == 3);
    CHECK(code->length() == 6);

    Matrix G = generator_matrix(*code);
    CHECK(G.rows == 3);
    CHECK(G.cols == 6);
    CHECK(check_self_dual(F, G));

    MdsResult mds = check_mds(F, G);
    CHECK(mds.is_mds);
    CHECK(mds.method == MdsMethod::AllMinors);
    CHECK(mds.checked == binomial(6, 3));
    CHECK_FALSE(mds.witness);

    CHECK(oracle_min_distance(*code) == 4);
}

TEST_CASE("extended scaling: {1,2,4} over F_7 gives a self-dual [4,2]") {
    FieldContext F = FieldContext::build(7, 1);
    EvaluationSet S = residues(F, {1, 2, 4});

    auto v = solve_scaling_egrs(S);
    REQUIRE(v);

    auto code = make_self_dual_code(S, CodeKind::EGRS);
    REQUIRE(code);
    CHECK(code->dim == 2);
    CHECK(code->length() == 4);

    Matrix G = generator_matrix(*code);
    CHECK(G.at(0, 3).v == 0);
    CHECK(G.at(1, 3).v == 1);
    CHECK(check_self_dual(F, G));
    CHECK(check_mds(F, G).is_mds);
    CHECK(oracle_min_distance(*code) == 3);
}

TEST_CASE("scaling rejects mixed square classes") {
    FieldContext F13 = FieldContext::build(13, 1);
    CyclotomicContext cyc13(F13, 2);
    EvaluationSet all12 = EvaluationSet::from_classes(cyc13, {0, 1}, false);
    CHECK_FALSE(solve_scaling_grs(all12));
    CHECK_FALSE(make_self_dual_code(all12, CodeKind::GRS));

    FieldContext F11 = FieldContext::build(11, 1);
    CyclotomicContext cyc11(F11, 2);
    EvaluationSet squares11 = EvaluationSet::from_classes(cyc11, {0}, false);
    CHECK_FALSE(solve_scaling_egrs(squares11));

    CHECK(kind_of([&] { solve_scaling_grs(residues(F13, {1, 2, 3})); }) == ErrorKind::OddLength);
    CHECK(kind_of([&] { solve_scaling_egrs(all12); }) == ErrorKind::EvenLength);
}

TEST_CASE("solved scalings satisfy the defining equations") {
    // v_a^2 * delta(a) must be constant (lambda) for plain codes and -1 for
    // extended ones, across several fields and sets.
    for (uint64_t p : {5, 13, 17}) {
        FieldContext F = FieldContext::build(p, 1);
        CyclotomicContext cyc(F, 2);
        EvaluationSet S = EvaluationSet::from_classes(cyc, {0}, false);
        if (auto v = solve_scaling_grs(S)) {
            FieldElement c0 = F.mul(F.mul((*v)[0], (*v)[0]), delta(S, S.elements()[0]));
            CHECK((c0 == F.one() || c0 == F.theta()));
            for (size_t i = 0; i < S.size(); ++i) {
                FieldElement ci = F.mul(F.mul((*v)[i], (*v)[i]), delta(S, S.elements()[i]));
                CHECK(ci == c0);
            }
        }
    }
    FieldContext F7 = FieldContext::build(7, 1);
    EvaluationSet S7 = residues(F7, {1, 2, 4});
    auto v = solve_scaling_egrs(S7);
    REQUIRE(v);
    for (size_t i = 0; i < S7.size(); ++i) {
        FieldElement c = F7.mul(F7.mul((*v)[i], (*v)[i]), delta(S7, S7.elements()[i]));
        CHECK(c == F7.neg(F7.one()));
    }
}

TEST_CASE("binomial saturates instead of overflowing") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(22, 11) == 705432);
    CHECK(binomial(64, 32) == 1832624140942590534ull);
    CHECK(binomial(70, 35) == UINT64_MAX);
}

TEST_CASE("minor check flags corrupted generators") {
    FieldContext F = FieldContext::build(13, 1);
    CyclotomicContext cyc(F, 2);
    auto code = make_self_dual_code(EvaluationSet::from_classes(cyc, {0}, false), CodeKind::GRS);
    REQUIRE(code);
    Matrix G = generator_matrix(*code);

    // Duplicate a column: some 3-column selection turns singular.
    Matrix bad = G;
    for (size_t r = 0; r < bad.rows; ++r) bad.at(r, 5) = bad.at(r, 4);

    MdsPolicy all;
    all.method = MdsMethod::AllMinors;
    MdsResult r1 = check_mds(F, bad, all);
    CHECK_FALSE(r1.is_mds);
    REQUIRE(r1.witness);
    CHECK(r1.witness->find("{") != std::string::npos);

    MdsPolicy ex;
    ex.method = MdsMethod::Exhaustive;
    MdsResult r2 = check_mds(F, bad, ex);
    CHECK_FALSE(r2.is_mds);
    CHECK(r2.checked == (13 * 13 * 13 - 1) / 12);

    MdsResult good = check_mds(F, G, ex);
    CHECK(good.is_mds);
    CHECK(oracle_min_distance(F, bad) < 4);
}

TEST_CASE("sampled minors are reproducible") {
    FieldContext F = FieldContext::build(13, 1);
    CyclotomicContext cyc(F, 2);
    auto code = make_self_dual_code(EvaluationSet::from_classes(cyc, {0, 1}, true), CodeKind::EGRS);
    REQUIRE(code);
    Matrix G = generator_matrix(*code);

    MdsPolicy s;
    s.method = MdsMethod::SampledMinors;
    s.samples = 500;
    s.seed = 7;
    MdsResult a = check_mds(F, G, s);
    MdsResult b = check_mds(F, G, s);
    CHECK(a.is_mds);
    CHECK(a.method == MdsMethod::SampledMinors);
    CHECK(a.checked == 500);
    CHECK(a.is_mds == b.is_mds);
    CHECK(a.checked == b.checked);
}

TEST_CASE("mds method selection and budgets") {
    FieldContext F = FieldContext::build(13, 1);
    CyclotomicContext cyc(F, 2);
    auto code = make_self_dual_code(EvaluationSet::from_classes(cyc, {0}, false), CodeKind::GRS);
    REQUIRE(code);
    Matrix G = generator_matrix(*code);

    CHECK(check_mds(F, G).method == MdsMethod::AllMinors);

    MdsPolicy tight;
    tight.minor_cap = 10;  // C(6,3) = 20 too big, q^3 = 2197 words still fine
    CHECK(check_mds(F, G, tight).method == MdsMethod::Exhaustive);

    tight.word_cap = 100;
    CHECK(check_mds(F, G, tight).method == MdsMethod::SampledMinors);

    MdsPolicy fixed;
    fixed.method = MdsMethod::AllMinors;
    fixed.minor_cap = 10;
    CHECK(kind_of([&] { check_mds(F, G, fixed); }) == ErrorKind::BudgetExceeded);

    fixed.method = MdsMethod::Exhaustive;
    fixed.word_cap = 100;
    CHECK(kind_of([&] { check_mds(F, G, fixed); }) == ErrorKind::BudgetExceeded);

    Matrix wide = Matrix::zero(3, 4);
    CHECK(kind_of([&] { check_self_dual(F, wide); }) == ErrorKind::DimensionMismatch);
    Matrix tall = Matrix::zero(4, 3);
    CHECK(kind_of([&] { check_mds(F, tall); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("whole-field and with-zero sets work as evaluation points") {
    // Sets containing 0 are legal; only distinctness matters.
    FieldContext F = FieldContext::build(5, 1);
    EvaluationSet S = residues(F, {0, 1, 2, 3});
    auto code = make_self_dual_code(S, CodeKind::GRS);
    if (code) {
        Matrix G = generator_matrix(*code);
        CHECK(check_self_dual(F, G));
        CHECK(check_mds(F, G).is_mds);
    }
    CHECK(oracle_selfdual_exists(S) == code.has_value());
}
