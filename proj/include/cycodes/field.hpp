#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cycodes/error.hpp"

namespace cycodes {

/// Element of a finite field GF(p^m), stored as the base-p packed value of
/// its polynomial-basis coefficient vector: v = c0 + c1*p + ... + c_{m-1}*p^{m-1}.
/// Only meaningful together with the FieldContext that produced it.
struct FieldElement {
    uint32_t v = 0;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

struct FieldSpec {
    uint64_t p = 0;
    uint32_t m = 0;
    std::vector<uint32_t> modulus;  // monic, length m+1, low degree first
};

/// Immutable arithmetic context for GF(p^m), p an odd prime.
///
/// Construction picks the lexicographically first irreducible monic modulus of
/// degree m (coefficient vectors enumerated as base-p counters, constant term
/// fastest) and the least primitive element theta in the same packed-value
/// order, then fills dense log/exp tables. Everything downstream (quadratic
/// character, square roots, cyclotomic classes) reads those tables, so two
/// builds with the same (p, m) are bit-identical.
class FieldContext {
public:
    static constexpr uint64_t kDefaultCap = uint64_t(1) << 20;

    static FieldContext build(uint64_t p, uint32_t m, uint64_t cap = kDefaultCap);

    const FieldSpec& spec() const { return spec_; }
    uint64_t p() const { return spec_.p; }
    uint32_t m() const { return spec_.m; }
    uint32_t q() const { return q_; }
    FieldElement theta() const { return theta_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }

    /// Bounds-checked wrap of a packed value.
    FieldElement element(uint64_t packed) const;
    FieldElement from_coeffs(std::span<const uint32_t> coeffs) const;
    std::vector<uint32_t> coeffs(FieldElement x) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;  // DivisionByZero on 0
    FieldElement pow(FieldElement a, uint64_t k) const;  // pow(x, 0) == 1

    /// Discrete log base theta; ZeroArgument on 0.
    uint32_t log(FieldElement x) const;
    /// theta^(l mod (q-1)).
    FieldElement exp(uint64_t l) const;

    /// Parity of the discrete log: 0 for nonzero squares, 1 for non-squares.
    /// ZeroArgument on 0.
    int phi(FieldElement x) const;

    /// Square root, canonicalized to the root whose log lies in [0, (q-1)/2).
    /// sqrt(0) = 0; empty when x is a non-square.
    std::optional<FieldElement> sqrt(FieldElement x) const;

    /// m == 1: decimal residue. m > 1: comma-joined coefficients "c0,c1,...".
    std::string to_string(FieldElement x) const;
    FieldElement parse(const std::string& s) const;

    bool same_spec(const FieldContext& other) const;

private:
    FieldContext() = default;

    FieldSpec spec_;
    uint32_t q_ = 0;
    FieldElement theta_;
    std::vector<uint32_t> log_;  // indexed by packed value; log_[0] is a sentinel
    std::vector<uint32_t> exp_;  // size q-1
};

bool is_prime(uint64_t n);

/// Distinct prime factors, ascending.
std::vector<uint64_t> prime_factors(uint64_t n);

/// All odd prime powers q = p^m <= limit, as (p, m, q), ascending in q.
struct PrimePower {
    uint64_t p;
    uint32_t m;
    uint64_t q;
};
std::vector<PrimePower> odd_prime_powers_upto(uint64_t limit);

}  // namespace cycodes
