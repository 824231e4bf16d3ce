#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycodes/cyclotomy.hpp"
#include "cycodes/field.hpp"

namespace cycodes {

/// How an evaluation set was assembled, when it came from cyclotomic classes.
struct SetProvenance {
    uint32_t e = 0;
    std::vector<uint32_t> I;  // ascending class indices
    bool include_zero = false;
};

/// Ordered set of distinct evaluation points. Class-built sets list the
/// classes of I in ascending index, each class in ascending discrete-log
/// order, with 0 last if present; explicit sets are sorted by packed value.
/// The ordering is part of the contract: generator matrices and certificates
/// derived from equal sets are byte-identical.
class EvaluationSet {
public:
    /// Union of the classes indexed by I, plus 0 if include_zero.
    /// EmptyIndexSet on empty I, IndexOutOfRange on an index >= e,
    /// DuplicateElement on a repeated index.
    static EvaluationSet from_classes(const CyclotomicContext& cyc, const std::vector<uint32_t>& I,
                                      bool include_zero);

    /// DuplicateElement on repeated points.
    static EvaluationSet explicit_set(const FieldContext& field, std::vector<FieldElement> elems);

    const FieldContext& field() const { return *field_; }
    const std::vector<FieldElement>& elements() const { return elements_; }
    size_t size() const { return elements_.size(); }
    bool contains(FieldElement a) const;
    const std::optional<SetProvenance>& provenance() const { return provenance_; }

private:
    EvaluationSet() = default;
    const FieldContext* field_ = nullptr;
    std::vector<FieldElement> elements_;
    std::optional<SetProvenance> provenance_;
};

/// Product of (a - b) over all b in S other than a. NotInSet if a is outside
/// S. Never zero, since evaluation points are distinct.
FieldElement delta(const EvaluationSet& S, FieldElement a);

/// Column scalings v making the evaluation code over S self-dual.
///
/// The plain variant needs |S| even (OddLength otherwise) and succeeds iff
/// phi(delta(a)) is the same for every a in S; then v_a^2 = c / delta(a) for
/// c in {1, theta} of matching parity. The extended variant needs |S| odd
/// (EvenLength otherwise) and succeeds iff phi(-delta(a)) = 0 for every a;
/// then v_a^2 = -1 / delta(a). Square roots are taken canonically, so the
/// result is deterministic. nullopt means no scaling exists.
std::optional<std::vector<FieldElement>> solve_scaling_grs(const EvaluationSet& S);
std::optional<std::vector<FieldElement>> solve_scaling_egrs(const EvaluationSet& S);

enum class CodeKind { GRS, EGRS };

const char* to_string(CodeKind k);

/// Row-major matrix over one field.
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<FieldElement> data;

    static Matrix zero(size_t rows, size_t cols);
    FieldElement& at(size_t r, size_t c) { return data[r * cols + c]; }
    FieldElement at(size_t r, size_t c) const { return data[r * cols + c]; }
};

/// A self-dual evaluation code: length 2k, dimension k. GRS evaluates at all
/// points of eval_set; EGRS additionally appends the coefficient of x^(k-1),
/// so its eval_set holds length()-1 points.
struct CodeInstance {
    CodeKind kind = CodeKind::GRS;
    EvaluationSet eval_set;
    std::vector<FieldElement> scaling;
    uint32_t dim = 0;

    uint32_t length() const;
};

/// Solves the matching scaling problem and assembles the code.
/// nullopt when the parity criterion rules the scaling out.
std::optional<CodeInstance> make_self_dual_code(const EvaluationSet& S, CodeKind kind);

/// k x n Vandermonde-style generator: row j is v_i * a_i^j, plus a final
/// column (0,...,0,1) for EGRS.
Matrix generator_matrix(const CodeInstance& code);

/// True iff G * G^T = 0. DimensionMismatch unless cols == 2 * rows.
bool check_self_dual(const FieldContext& F, const Matrix& G);

/// Binomial coefficient, saturating at UINT64_MAX instead of overflowing.
uint64_t binomial(uint64_t n, uint64_t k);

enum class MdsMethod {
    AllMinors,       // every k-subset of columns, via the systematic form
    Exhaustive,      // true minimum distance by codeword enumeration
    SampledMinors,   // random k-subsets of columns, seeded and reproducible
};

const char* to_string(MdsMethod m);

struct MdsPolicy {
    std::optional<MdsMethod> method;  // nullopt: cheapest exact method in budget, else sampling
    uint64_t minor_cap = 1000000;     // AllMinors allowed while C(n, k) <= minor_cap
    uint64_t word_cap = 10000000;     // Exhaustive allowed while q^k <= word_cap
    uint32_t samples = 10000;
    uint64_t seed = 0;
};

struct MdsResult {
    bool is_mds = false;
    MdsMethod method = MdsMethod::AllMinors;
    uint64_t checked = 0;                 // minors tested or words enumerated
    std::optional<std::string> witness;   // failing column set / distance, when not MDS
};

/// Decides whether the code generated by G (full row rank expected) is MDS.
/// A fixed method that exceeds its budget is BudgetExceeded; sampling accepts
/// any size. DimensionMismatch if rows > cols or rows == 0.
MdsResult check_mds(const FieldContext& F, const Matrix& G, const MdsPolicy& policy = {});

}  // namespace cycodes
