#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycodes/cyclotomy.hpp"
#include "cycodes/field.hpp"
#include "cycodes/grs.hpp"

namespace cycodes {

/// Exact minimum distance by normalized codeword enumeration: one message per
/// projective class (first nonzero coordinate fixed to 1), codeword updated
/// incrementally. Returns 0 when a nonzero message maps to the zero word.
/// BudgetExceeded when the message count passes word_cap.
uint32_t oracle_min_distance(const FieldContext& field, const Matrix& generator,
                             uint64_t word_cap = 10'000'000);

uint32_t oracle_min_distance(const CodeInstance& code, uint64_t word_cap = 10'000'000);

/// Definitional search for a self-dual code on the given evaluation points:
/// tries every vector of nonzero column multipliers and tests G * G^T = 0
/// directly. The kind is forced by parity (even point count: plain code on S;
/// odd: one extra position evaluating the top coefficient). Deliberately
/// ignores the character-sum machinery so it can arbitrate against it.
/// BudgetExceeded when (q-1)^length passes cap.
bool oracle_selfdual_exists(const EvaluationSet& S, uint64_t cap = 10'000'000);

struct OracleMismatch {
    std::string input;
    std::string expected;
    std::string got;
};

/// Outcome of one cross-check run: how many individual comparisons agreed and
/// every disagreement, spelled out.
struct OracleReport {
    std::string subject;
    uint64_t agreements = 0;
    std::vector<OracleMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Structural identities every cyclotomic table must satisfy: the two index
/// rewrites (negate-and-shift, multiply-by-p), the symmetry keyed on the
/// parity of f, and the row and column sum formulas.
OracleReport check_table_identities(const CyclotomicTable& table, uint64_t p);

/// Brute-force table against every closed form applicable to (q, e),
/// cell for cell.
OracleReport compare_tables(const FieldContext& field, uint32_t e);

/// parity_profile against oracle_parity for every nonempty index set over
/// Z_e: each per-element parity, the adjoined-zero parity included.
OracleReport compare_parities(const FieldContext& field, uint32_t e);

/// Exact relations between odd-row and even-row column sums, including the
/// forced half-and-half splits when e = 2 (mod 4).
OracleReport check_column_parity_relations(const CyclotomicTable& table);

/// Parity pattern of the odd-row column sums in the semiprimitive case:
/// column 0 even, the rest alternating with the parity of eta.
OracleReport check_semiprimitive_parities(const CyclotomicTable& table,
                                          const SemiprimitiveParams& params);

/// Solver verdict against the definitional search, over every point set of
/// size 1..max_size drawn from the field. Existence must match exactly in
/// both directions.
OracleReport compare_necessity(const FieldContext& field, uint32_t max_size,
                               uint64_t word_cap = 10'000'000);

}  // namespace cycodes
