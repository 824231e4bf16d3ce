#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycodes/field.hpp"

namespace cycodes {

/// Partition of the multiplicative group of GF(q) into e cosets of the index-e
/// subgroup: class lambda holds theta^(lambda + e*j) for j = 0..f-1, where
/// q - 1 = e*f. Class membership is the discrete log reduced mod e.
class CyclotomicContext {
public:
    /// BadE unless e is even, at least 2, and divides q-1.
    CyclotomicContext(const FieldContext& field, uint32_t e);

    const FieldContext& field() const { return *field_; }
    uint32_t e() const { return e_; }
    uint32_t f() const { return f_; }

    /// Class index of a nonzero element; ZeroArgument on 0.
    uint32_t class_of(FieldElement x) const;

    /// Elements of class lambda in ascending discrete-log order.
    const std::vector<FieldElement>& class_elements(uint32_t lambda) const;

private:
    const FieldContext* field_;
    uint32_t e_, f_;
    std::vector<std::vector<FieldElement>> classes_;
};

enum class TableSource { BruteForce, ClosedFormE2, ClosedFormE4, Semiprimitive };

const char* to_string(TableSource s);

/// e x e matrix of cyclotomic numbers: entry (i, j) counts elements x of
/// class i with x + 1 in class j.
struct CyclotomicTable {
    uint32_t e = 0;
    uint32_t f = 0;
    uint64_t q = 0;
    TableSource source = TableSource::BruteForce;
    int t_sign = 0;  // resolved sign of t for the order-4 closed form, else 0
    std::vector<uint32_t> values;  // row-major, e*e

    uint32_t at(uint32_t i, uint32_t j) const;
};

/// Definitional count for one cell: walks class i and tests x + 1. This is the
/// source of truth the closed forms are checked against.
uint32_t cyclotomic_number_bruteforce(const CyclotomicContext& cyc, uint32_t i, uint32_t j);

/// Full table in one pass over the multiplicative group.
CyclotomicTable table_bruteforce(const CyclotomicContext& cyc);

/// Closed form for e = 2, split on the parity of f. WrongE unless e == 2.
CyclotomicTable table_e2(const CyclotomicContext& cyc);

/// The unique normalized representation q = s^2 + 4t^2 with s = 1 (mod 4) and
/// t >= 0, preferring gcd(s, q) = 1 when such a representation exists.
/// Requires q a prime power with q = 1 (mod 4); NoDecomposition otherwise.
struct QuarticParams {
    int64_t s = 0;
    uint64_t t = 0;
};
QuarticParams decompose_quartic(uint64_t q);

/// Closed form for e = 4. The sign of t is resolved against one brute-force
/// cell; SignResolutionFailure if neither sign matches (an arithmetic bug).
CyclotomicTable table_e4(const CyclotomicContext& cyc);

/// Parameters of the semiprimitive family: p^t_min = -1 (mod e) with t_min
/// minimal, m = t_min * s_exp, r = p^m, q = r^2, R = r * (-1)^s_exp,
/// eta = (R - 1) / e.
struct SemiprimitiveParams {
    uint64_t p = 0;
    uint32_t e = 0;
    uint32_t t_min = 0;
    uint32_t s_exp = 0;
    uint32_t m = 0;
    uint64_t r = 0;
    uint64_t q = 0;
    int64_t R = 0;
    int64_t eta = 0;
};

/// NotSemiprimitive if e < 4, e odd, p | e, or no power of p is -1 mod e.
SemiprimitiveParams make_semiprimitive(uint64_t p, uint32_t e, uint32_t s_exp);

/// Params matching an already-built field, if its (q, e) fits the pattern.
std::optional<SemiprimitiveParams> semiprimitive_for_field(const FieldContext& field, uint32_t e);

/// Closed form for the semiprimitive family (f is even): diagonal-free cells
/// are eta^2, first row/column and diagonal are eta^2 + eta, and cell (0,0) is
/// eta^2 - (e-3)*eta - 1.
CyclotomicTable table_semiprimitive(const SemiprimitiveParams& params);

/// (odd, i): sum of column i over odd rows.
uint32_t odd_sum(const CyclotomicTable& t, uint32_t i);

/// (I, J): sum of cells over i in I, j in J. Indices are reduced mod e.
uint64_t set_sum(const CyclotomicTable& t, const std::vector<uint32_t>& I,
                 const std::vector<uint32_t>& J);

/// (odd, I - i): sum of (odd, lambda - i) over lambda in I.
uint64_t odd_sum_shifted(const CyclotomicTable& t, const std::vector<uint32_t>& I, uint32_t i);

}  // namespace cycodes
