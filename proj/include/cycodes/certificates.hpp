#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycodes/cyclotomy.hpp"
#include "cycodes/field.hpp"
#include "cycodes/grs.hpp"
#include "cycodes/theorems.hpp"

namespace cycodes {

/// Self-contained record of one constructed code: the full field spec (so a
/// replay never depends on ambient defaults), the class selection, the solved
/// column multipliers, the generator matrix, and both check outcomes.
struct SelfDualCertificate {
    uint64_t p = 0;
    uint32_t m = 0;
    uint32_t q = 0;
    std::vector<uint32_t> modulus;  // monic, low degree first
    std::string theta;
    uint32_t e = 0;
    std::vector<uint32_t> I;
    bool include_zero = false;
    CodeKind kind = CodeKind::GRS;
    uint32_t k = 0;
    std::vector<std::string> v;          // column multipliers, element strings
    std::vector<std::string> generator;  // row-major k x 2k, element strings
    bool self_dual = false;
    MdsResult mds;
    uint64_t samples = 0;  // recorded only for the sampled method
    uint64_t seed = 0;
};

/// Builds the code on the classes of I (plus 0 when include_zero) and packages
/// it with its checks. Empty when the scaling criterion rejects the set.
std::optional<SelfDualCertificate> build_certificate(const CyclotomicContext& cyc,
                                                     const std::vector<uint32_t>& I,
                                                     bool include_zero, CodeKind kind,
                                                     const MdsPolicy& policy = {});

/// The same, driven by a recipe. ContextMismatch when the recipe was derived
/// for a different q.
std::optional<SelfDualCertificate> materialize(const FieldContext& field,
                                               const ConstructionRecipe& recipe,
                                               const MdsPolicy& policy = {});

/// Canonical JSON rendering: fixed schema, alphabetical keys, no volatile
/// fields, so equal certificates serialize byte-identically.
std::string certificate_to_json(const SelfDualCertificate& cert);

/// ParseError unless the text is valid JSON with the full expected shape.
SelfDualCertificate certificate_from_json(const std::string& text);

struct VerifyReport {
    bool pass = false;
    std::vector<std::string> failures;
};

/// Replays a certificate from scratch: rebuilds the field from (p, m),
/// confirms the recorded modulus and theta match the canonical construction,
/// re-solves the multipliers, recomputes the generator, and re-runs both
/// checks with the recorded method. Every disagreement lands in failures.
VerifyReport verify_certificate(const SelfDualCertificate& cert,
                                uint64_t q_cap = FieldContext::kDefaultCap);

}  // namespace cycodes
