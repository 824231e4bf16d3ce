#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycodes/cyclotomy.hpp"
#include "cycodes/field.hpp"

namespace cycodes {

/// Predicted parities of the delta products over S (the union of the classes
/// of I) and over S-with-zero, derived from a cyclotomic table alone. Entry
/// order is parallel to the sorted I.
struct ParityProfile {
    std::vector<uint32_t> I;
    std::vector<uint8_t> phi_S;        // parity of phi(delta_S(a)) for a in class i
    std::vector<uint8_t> phi_S_tilde;  // same over S with 0 adjoined
    uint8_t phi_S_tilde_zero = 0;      // parity at the adjoined 0
    uint32_t I_odd_size = 0;
};

/// Table-only evaluation of the parity formulas: no field multiplication is
/// involved, which is what makes the later enumeration cheap.
/// EmptyIndexSet / IndexOutOfRange / DuplicateElement on a bad I.
ParityProfile parity_profile(const CyclotomicTable& table, const std::vector<uint32_t>& I);

/// The same profile measured the slow way: one representative per class,
/// delta computed as an explicit product over the set. Ground truth for
/// parity_profile in tests and sweeps.
ParityProfile oracle_parity(const CyclotomicContext& cyc, const std::vector<uint32_t>& I);

enum class Claim { SigmaG, SigmaEG };

const char* to_string(Claim c);

/// A checkable membership claim: length n belongs to the named family over
/// F_q, witnessed by the classes of I (plus 0 when include_zero), ready to be
/// materialized into a code of that length.
struct ConstructionRecipe {
    uint32_t q = 0;
    uint32_t e = 0;
    uint32_t f = 0;
    std::vector<uint32_t> I;
    bool include_zero = false;
    Claim claim = Claim::SigmaG;
    uint32_t length = 0;
    std::string provenance;
};

/// The parity case analysis for one index set. Splits on (f mod 2, |I| mod 2)
/// and tests the matching pair of conditions; yields zero, one, or two
/// recipes tagged "case 1.1" .. "case 3.2".
std::vector<ConstructionRecipe> recipes_for_index_set(const CyclotomicTable& table,
                                                      const std::vector<uint32_t>& I);

/// Named one- and two-class families (provenance "Thm8(1)".."Thm8(4)"):
/// even f gives lengths f and 2f+2 unconditionally, f+2 and 2f when column
/// parities allow; odd f gives f+1 and a searched 2f+2 variant. Every
/// candidate is revalidated through recipes_for_index_set before emission.
std::vector<ConstructionRecipe> recipes_generic(const FieldContext& field,
                                                const CyclotomicTable& table);

/// Families available when (q, e) fits the squared semiprimitive pattern
/// (provenance "Thm10(1)".."Thm10(3)"): runs of lengths lf and lf+2 whose l
/// ranges depend on the parity of eta. NotSemiprimitive if the pattern
/// does not apply. Witness index sets are constructed deterministically
/// (even classes first, lexicographically smallest adjustment last).
std::vector<ConstructionRecipe> recipes_semiprimitive(const FieldContext& field,
                                                      const CyclotomicTable& table);

/// Quadratic-class families, e = 2 only (provenance "Thm11(1)"/"Thm11(2)"
/// plus "moreover" refinements keyed on q mod 8). WrongE otherwise.
std::vector<ConstructionRecipe> recipes_order2(const FieldContext& field,
                                               const CyclotomicTable& table);

/// Quartic-class families, e = 4 only (provenance "Thm12(...)"): the
/// p = 1 (mod 4) branch keys its refinements on the parity of (odd, 1);
/// the p = 3 (mod 4) branch is the semiprimitive pattern in disguise.
/// WrongE otherwise.
std::vector<ConstructionRecipe> recipes_order4(const FieldContext& field,
                                               const CyclotomicTable& table);

/// One row of the deduplicated claim table: every way we proved n belongs to
/// the family, plus one canonical recipe that materializes it.
struct ClaimRow {
    uint32_t n = 0;
    Claim claim = Claim::SigmaG;
    std::vector<std::string> provenance;  // sorted, unique
    ConstructionRecipe representative;
};

/// Union of all recipe sources over every even e | q-1 with e <= e_max:
/// the exhaustive index-set sweep (2^e - 1 subsets per e) plus the named
/// families. Rows sorted by (n, claim); provenance merged. CapExceeded when
/// e_max > e_cap, BadE when e_max < 2.
std::vector<ClaimRow> enumerate_claims(const FieldContext& field, uint32_t e_max,
                                       uint32_t e_cap = 12);

}  // namespace cycodes
