#include "cycodes/theorems.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cycodes/grs.hpp"

namespace cycodes {

namespace {

std::vector<uint32_t> normalized_index_set(uint32_t e, const std::vector<uint32_t>& I) {
    if (I.empty()) fail(ErrorKind::EmptyIndexSet, "no cyclotomic classes selected");
    std::vector<uint32_t> sorted = I;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            fail(ErrorKind::DuplicateElement, "class index repeated: " + std::to_string(sorted[i]));
    for (uint32_t lambda : sorted)
        if (lambda >= e)
            fail(ErrorKind::IndexOutOfRange, "class index " + std::to_string(lambda) +
                                                 " not below e = " + std::to_string(e));
    return sorted;
}

/// Column parities of the odd-row sums, indexed by column.
std::vector<uint8_t> odd_column_parities(const CyclotomicTable& table) {
    std::vector<uint8_t> par(table.e);
    for (uint32_t j = 0; j < table.e; ++j) par[j] = odd_sum(table, j) & 1u;
    return par;
}

uint32_t count_odd(const std::vector<uint32_t>& I) {
    uint32_t n = 0;
    for (uint32_t i : I) n += i & 1u;
    return n;
}

}  // namespace

ParityProfile parity_profile(const CyclotomicTable& table, const std::vector<uint32_t>& I) {
    std::vector<uint32_t> sorted = normalized_index_set(table.e, I);
    uint64_t e = table.e, f = table.f;
    uint64_t l = sorted.size();
    uint64_t fl = f * l;
    std::vector<uint8_t> op = odd_column_parities(table);

    ParityProfile prof;
    prof.I = sorted;
    prof.I_odd_size = count_odd(sorted);
    for (uint32_t i : sorted) {
        uint8_t shifted = 0;
        for (uint32_t lambda : sorted) shifted ^= op[(lambda + e - i % e) % e];
        uint8_t pS = uint8_t(((fl - 1) * (i + e * f / 2) + shifted) & 1u);
        prof.phi_S.push_back(pS);
        prof.phi_S_tilde.push_back(pS ^ (i & 1u));
    }
    prof.phi_S_tilde_zero = uint8_t((fl * (e / 2) + f * prof.I_odd_size) & 1u);
    return prof;
}

ParityProfile oracle_parity(const CyclotomicContext& cyc, const std::vector<uint32_t>& I) {
    const FieldContext& F = cyc.field();
    std::vector<uint32_t> sorted = normalized_index_set(cyc.e(), I);
    EvaluationSet S = EvaluationSet::from_classes(cyc, sorted, false);
    EvaluationSet St = EvaluationSet::from_classes(cyc, sorted, true);

    ParityProfile prof;
    prof.I = sorted;
    prof.I_odd_size = count_odd(sorted);
    for (uint32_t i : sorted) {
        FieldElement a = cyc.class_elements(i).front();
        prof.phi_S.push_back(uint8_t(F.phi(delta(S, a))));
        prof.phi_S_tilde.push_back(uint8_t(F.phi(delta(St, a))));
    }
    prof.phi_S_tilde_zero = uint8_t(F.phi(delta(St, F.zero())));
    return prof;
}

const char* to_string(Claim c) { return c == Claim::SigmaG ? "sigma_g" : "sigma_eg"; }

std::vector<ConstructionRecipe> recipes_for_index_set(const CyclotomicTable& table,
                                                      const std::vector<uint32_t>& I) {
    std::vector<uint32_t> sorted = normalized_index_set(table.e, I);
    uint32_t e = table.e, f = table.f;
    uint32_t l = uint32_t(sorted.size());
    uint32_t fl = f * l;
    uint32_t he = e / 2;
    std::vector<uint8_t> op = odd_column_parities(table);

    // Per i in I: parity of the aggregated odd-column sum over I - i, and of
    // i plus that sum. The case conditions below are stated on these two.
    std::vector<uint8_t> osum, iosum;
    for (uint32_t i : sorted) {
        uint8_t s = 0;
        for (uint32_t lambda : sorted) s ^= op[(lambda + e - i) % e];
        osum.push_back(s);
        iosum.push_back(uint8_t(s ^ (i & 1u)));
    }
    auto all_equal = [](const std::vector<uint8_t>& v) {
        return std::all_of(v.begin(), v.end(), [&](uint8_t x) { return x == v[0]; });
    };
    auto all_are = [](const std::vector<uint8_t>& v, uint8_t bit) {
        return std::all_of(v.begin(), v.end(), [&](uint8_t x) { return x == bit; });
    };

    std::vector<ConstructionRecipe> out;
    auto emit = [&](Claim claim, uint32_t length, bool zero, const char* label) {
        out.push_back(ConstructionRecipe{uint32_t(table.q), e, f, sorted, zero, claim, length,
                                         std::string("Thm6 case ") + label});
    };

    if (f % 2 == 0) {
        if (all_equal(iosum)) emit(Claim::SigmaG, fl, false, "1.1");
        if (all_are(osum, 0)) emit(Claim::SigmaEG, fl + 2, true, "1.2");
    } else if (l % 2 == 0) {
        if (all_equal(iosum)) emit(Claim::SigmaG, fl, false, "2.1");
        if (count_odd(sorted) % 2 == he % 2 && all_are(osum, 0))
            emit(Claim::SigmaEG, fl + 2, true, "2.2");
    } else {
        if (all_are(osum, uint8_t(he & 1u))) emit(Claim::SigmaEG, fl + 1, false, "3.1");
        uint8_t target = uint8_t((he + count_odd(sorted)) & 1u);
        if (all_are(iosum, target)) emit(Claim::SigmaG, fl + 1, true, "3.2");
    }
    return out;
}

namespace {

/// Looks for one expected outcome of the case analysis on I; empty when the
/// conditions do not hold.
std::optional<ConstructionRecipe> try_recipe(const CyclotomicTable& table,
                                             const std::vector<uint32_t>& I, Claim claim,
                                             uint32_t length, bool include_zero,
                                             const std::string& provenance) {
    for (ConstructionRecipe& r : recipes_for_index_set(table, I)) {
        if (r.claim == claim && r.length == length && r.include_zero == include_zero) {
            r.provenance = provenance;
            return r;
        }
    }
    return std::nullopt;
}

/// Same, but the caller asserts the conditions hold; a miss is a bug.
ConstructionRecipe expect_recipe(const CyclotomicTable& table, const std::vector<uint32_t>& I,
                                 Claim claim, uint32_t length, bool include_zero,
                                 const std::string& provenance) {
    auto r = try_recipe(table, I, claim, length, include_zero, provenance);
    if (!r) fail(ErrorKind::Internal, provenance + ": expected recipe failed parity validation");
    return *r;
}

void require_same_context(const FieldContext& field, const CyclotomicTable& table) {
    if (field.q() != table.q)
        fail(ErrorKind::ContextMismatch, "table built for a different field");
}

std::vector<uint32_t> first_classes(uint32_t l) {
    std::vector<uint32_t> I(l);
    for (uint32_t i = 0; i < l; ++i) I[i] = i;
    return I;
}

std::vector<uint32_t> first_even_classes(uint32_t l) {
    std::vector<uint32_t> I(l);
    for (uint32_t i = 0; i < l; ++i) I[i] = 2 * i;
    return I;
}

/// {0..l-1}, with the top index bumped to l when the plain run's sum has the
/// wrong parity. Needs l < e for the bump to stay in range; callers only bump
/// in that regime.
std::vector<uint32_t> first_classes_with_sum_parity(uint32_t l, uint8_t parity) {
    std::vector<uint32_t> I = first_classes(l);
    if ((uint64_t(l) * (l - 1) / 2) % 2 != parity) I[l - 1] = l;
    return I;
}

std::vector<ConstructionRecipe> semiprimitive_part1(const CyclotomicTable& table,
                                                    const std::string& label) {
    uint32_t e = table.e, f = table.f;
    std::vector<ConstructionRecipe> out;
    for (uint32_t l = 1; l <= e / 2; ++l)
        out.push_back(expect_recipe(table, first_even_classes(l), Claim::SigmaG, l * f, false, label));
    for (uint32_t l = 1; l <= e; ++l)
        out.push_back(expect_recipe(table, first_classes(l), Claim::SigmaEG, l * f + 2, true, label));
    return out;
}

std::vector<ConstructionRecipe> semiprimitive_part2(const CyclotomicTable& table,
                                                    const std::string& label) {
    uint32_t e = table.e, f = table.f;
    std::vector<ConstructionRecipe> out;
    for (uint32_t l = 1; l <= e - 1; l += 2)
        out.push_back(expect_recipe(table, first_classes(l), Claim::SigmaG, l * f, false, label));
    for (uint32_t l = 2; l <= e / 2; l += 2)
        out.push_back(expect_recipe(table, first_even_classes(l), Claim::SigmaG, l * f, false, label));
    for (uint32_t l = 2; l <= e; l += 2) {
        std::vector<uint32_t> I =
            l == e ? first_classes(l) : first_classes_with_sum_parity(l, 0);
        out.push_back(expect_recipe(table, I, Claim::SigmaEG, l * f + 2, true, label));
    }
    for (uint32_t l = 1; l + 1 <= e / 2; l += 2)
        out.push_back(
            expect_recipe(table, first_even_classes(l), Claim::SigmaEG, l * f + 2, true, label));
    return out;
}

std::vector<ConstructionRecipe> semiprimitive_part3(const CyclotomicTable& table,
                                                    const std::string& label) {
    uint32_t e = table.e, f = table.f;
    std::vector<ConstructionRecipe> out;
    for (uint32_t l = 1; l <= e - 1; l += 2)
        out.push_back(expect_recipe(table, first_classes(l), Claim::SigmaG, l * f, false, label));
    for (uint32_t l = 2; l + 1 <= e / 2; l += 2)
        out.push_back(expect_recipe(table, first_even_classes(l), Claim::SigmaG, l * f, false, label));
    for (uint32_t l = 2; l <= e; l += 2) {
        std::vector<uint32_t> I =
            l == e ? first_classes(l) : first_classes_with_sum_parity(l, 1);
        out.push_back(expect_recipe(table, I, Claim::SigmaEG, l * f + 2, true, label));
    }
    return out;
}

std::vector<ConstructionRecipe> semiprimitive_family(const CyclotomicTable& table,
                                                     const SemiprimitiveParams& params,
                                                     const std::string& p1, const std::string& p2,
                                                     const std::string& p3) {
    if (params.eta % 2 == 0) return semiprimitive_part1(table, p1);
    if (table.e % 4 == 0) return semiprimitive_part2(table, p2);
    return semiprimitive_part3(table, p3);
}

}  // namespace

std::vector<ConstructionRecipe> recipes_generic(const FieldContext& field,
                                                const CyclotomicTable& table) {
    require_same_context(field, table);
    uint32_t e = table.e, f = table.f, he = e / 2;
    std::vector<ConstructionRecipe> out;

    if (f % 2 == 0) {
        out.push_back(expect_recipe(table, {0}, Claim::SigmaG, f, false, "Thm8(1)"));
        if (odd_sum(table, 0) % 2 == 0)
            out.push_back(expect_recipe(table, {0}, Claim::SigmaEG, f + 2, true, "Thm8(1) moreover"));
        out.push_back(expect_recipe(table, {0, he}, Claim::SigmaEG, 2 * f + 2, true, "Thm8(2)"));
        if (e % 4 == 0)
            out.push_back(expect_recipe(table, {0, he}, Claim::SigmaG, 2 * f, false, "Thm8(2) moreover"));
    } else {
        if (odd_sum(table, 0) % 2 == he % 2) {
            out.push_back(expect_recipe(table, {0}, Claim::SigmaEG, f + 1, false, "Thm8(3)"));
            out.push_back(expect_recipe(table, {0}, Claim::SigmaG, f + 1, true, "Thm8(3)"));
        }
        if (he % 2 == 1) {
            for (uint32_t i = 1; i < e; i += 2) {
                if (odd_sum(table, 0) % 2 != odd_sum(table, i) % 2) continue;
                out.push_back(
                    expect_recipe(table, {0, i}, Claim::SigmaEG, 2 * f + 2, true, "Thm8(4)"));
                break;
            }
        }
    }
    return out;
}

std::vector<ConstructionRecipe> recipes_semiprimitive(const FieldContext& field,
                                                      const CyclotomicTable& table) {
    require_same_context(field, table);
    auto params = semiprimitive_for_field(field, table.e);
    if (!params)
        fail(ErrorKind::NotSemiprimitive,
             "field does not fit the squared semiprimitive pattern for e = " +
                 std::to_string(table.e));
    return semiprimitive_family(table, *params, "Thm10(1)", "Thm10(2)", "Thm10(3)");
}

std::vector<ConstructionRecipe> recipes_order2(const FieldContext& field,
                                               const CyclotomicTable& table) {
    require_same_context(field, table);
    if (table.e != 2) fail(ErrorKind::WrongE, "quadratic families need e = 2");
    uint32_t q = uint32_t(table.q), f = table.f;
    std::vector<ConstructionRecipe> out;

    if (q % 4 == 1) {
        out.push_back(expect_recipe(table, {0, 1}, Claim::SigmaEG, 2 * f + 2, true, "Thm11(1)"));
        if (q % 8 == 1)
            out.push_back(expect_recipe(table, {0}, Claim::SigmaEG, f + 2, true, "Thm11(1) moreover"));
    } else {
        out.push_back(expect_recipe(table, {0, 1}, Claim::SigmaEG, 2 * f + 2, true, "Thm11(2)"));
        if (q % 8 == 7) {
            out.push_back(expect_recipe(table, {0}, Claim::SigmaEG, f + 1, false, "Thm11(2) moreover"));
            out.push_back(expect_recipe(table, {1}, Claim::SigmaG, f + 1, true, "Thm11(2) moreover"));
        }
    }
    return out;
}

std::vector<ConstructionRecipe> recipes_order4(const FieldContext& field,
                                               const CyclotomicTable& table) {
    require_same_context(field, table);
    if (table.e != 4) fail(ErrorKind::WrongE, "quartic families need e = 4");
    uint32_t f = table.f;
    std::vector<ConstructionRecipe> out;

    if (field.p() % 4 == 1) {
        if (f % 2 == 0) {
            out.push_back(expect_recipe(table, {0}, Claim::SigmaG, f, false, "Thm12(1.1)"));
            out.push_back(expect_recipe(table, {0, 2}, Claim::SigmaG, 2 * f, false, "Thm12(1.1)"));
            out.push_back(expect_recipe(table, {0}, Claim::SigmaEG, f + 2, true, "Thm12(1.1)"));
            out.push_back(expect_recipe(table, {0, 2}, Claim::SigmaEG, 2 * f + 2, true, "Thm12(1.1)"));
            out.push_back(
                expect_recipe(table, {0, 1, 2, 3}, Claim::SigmaEG, 4 * f + 2, true, "Thm12(1.1)"));
            if (odd_sum(table, 1) % 2 == 1)
                out.push_back(
                    expect_recipe(table, {0, 1, 2}, Claim::SigmaG, 3 * f, false, "Thm12(1.1) moreover"));
            else
                out.push_back(expect_recipe(table, {0, 1, 2}, Claim::SigmaEG, 3 * f + 2, true,
                                            "Thm12(1.1) moreover"));
        } else {
            auto two_f = try_recipe(table, {0, 1}, Claim::SigmaG, 2 * f, false, "Thm12(1.2)");
            if (!two_f) two_f = try_recipe(table, {0, 3}, Claim::SigmaG, 2 * f, false, "Thm12(1.2)");
            if (!two_f) fail(ErrorKind::Internal, "Thm12(1.2): neither index pair validates");
            out.push_back(*two_f);
            out.push_back(
                expect_recipe(table, {0, 1, 2, 3}, Claim::SigmaEG, 4 * f + 2, true, "Thm12(1.2)"));
            out.push_back(expect_recipe(table, {0}, Claim::SigmaEG, f + 1, false, "Thm12(1.2)"));
        }
    } else {
        auto params = semiprimitive_for_field(field, 4);
        if (!params)
            fail(ErrorKind::Internal, "p = 3 (mod 4) with 4 | q-1 must be semiprimitive");
        auto sub = semiprimitive_family(table, *params, "Thm12(2.1)", "Thm12(2.2)", "Thm12(2.2)");
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

namespace {

/// Deterministic preference order for the representative recipe of a row.
bool recipe_before(const ConstructionRecipe& a, const ConstructionRecipe& b) {
    if (a.e != b.e) return a.e < b.e;
    if (a.I.size() != b.I.size()) return a.I.size() < b.I.size();
    if (a.I != b.I) return a.I < b.I;
    if (a.include_zero != b.include_zero) return !a.include_zero;
    return a.provenance < b.provenance;
}

}  // namespace

std::vector<ClaimRow> enumerate_claims(const FieldContext& field, uint32_t e_max, uint32_t e_cap) {
    if (e_max < 2) fail(ErrorKind::BadE, "e_max must be at least 2");
    if (e_max > e_cap)
        fail(ErrorKind::CapExceeded, "e_max " + std::to_string(e_max) + " above the sweep cap " +
                                         std::to_string(e_cap));

    std::map<std::pair<uint32_t, Claim>, ClaimRow> rows;
    auto absorb = [&](const ConstructionRecipe& r) {
        auto key = std::make_pair(r.length, r.claim);
        auto [it, fresh] = rows.try_emplace(key);
        ClaimRow& row = it->second;
        if (fresh) {
            row.n = r.length;
            row.claim = r.claim;
            row.representative = r;
        } else if (recipe_before(r, row.representative)) {
            row.representative = r;
        }
        if (std::find(row.provenance.begin(), row.provenance.end(), r.provenance) ==
            row.provenance.end())
            row.provenance.push_back(r.provenance);
    };

    for (uint32_t e = 2; e <= e_max; e += 2) {
        if ((field.q() - 1) % e != 0) continue;
        CyclotomicContext cyc(field, e);
        CyclotomicTable table = table_bruteforce(cyc);

        std::vector<uint32_t> I;
        for (uint32_t mask = 1; mask < (1u << e); ++mask) {
            I.clear();
            for (uint32_t i = 0; i < e; ++i)
                if (mask & (1u << i)) I.push_back(i);
            for (const ConstructionRecipe& r : recipes_for_index_set(table, I)) absorb(r);
        }

        for (const ConstructionRecipe& r : recipes_generic(field, table)) absorb(r);
        if (e == 2)
            for (const ConstructionRecipe& r : recipes_order2(field, table)) absorb(r);
        if (e == 4)
            for (const ConstructionRecipe& r : recipes_order4(field, table)) absorb(r);
        if (semiprimitive_for_field(field, e))
            for (const ConstructionRecipe& r : recipes_semiprimitive(field, table)) absorb(r);
    }

    std::vector<ClaimRow> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows) {
        std::sort(row.provenance.begin(), row.provenance.end());
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end(), [](const ClaimRow& a, const ClaimRow& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.claim < b.claim;
    });
    return out;
}

}  // namespace cycodes
