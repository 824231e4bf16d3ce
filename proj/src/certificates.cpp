#include "cycodes/certificates.hpp"

#include "json.hpp"

namespace cycodes {

namespace {

using nlohmann::json;

template <typename T>
T field_of(const json& j, const char* key) {
    if (!j.contains(key)) fail(ErrorKind::ParseError, std::string("missing key: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        fail(ErrorKind::ParseError, std::string("bad value for key: ") + key);
    }
}

CodeKind parse_kind(const std::string& s) {
    if (s == "grs") return CodeKind::GRS;
    if (s == "egrs") return CodeKind::EGRS;
    fail(ErrorKind::ParseError, "unknown kind: " + s);
}

MdsMethod parse_method(const std::string& s) {
    if (s == "all_minors") return MdsMethod::AllMinors;
    if (s == "exhaustive") return MdsMethod::Exhaustive;
    if (s == "sampled_minors") return MdsMethod::SampledMinors;
    fail(ErrorKind::ParseError, "unknown mds method: " + s);
}

}  // namespace

std::optional<SelfDualCertificate> build_certificate(const CyclotomicContext& cyc,
                                                     const std::vector<uint32_t>& I,
                                                     bool include_zero, CodeKind kind,
                                                     const MdsPolicy& policy) {
    const FieldContext& F = cyc.field();
    EvaluationSet S = EvaluationSet::from_classes(cyc, I, include_zero);
    auto code = make_self_dual_code(S, kind);
    if (!code) return std::nullopt;
    Matrix G = generator_matrix(*code);

    SelfDualCertificate cert;
    cert.p = F.p();
    cert.m = F.m();
    cert.q = F.q();
    cert.modulus = F.spec().modulus;
    cert.theta = F.to_string(F.theta());
    cert.e = cyc.e();
    cert.I = S.provenance()->I;
    cert.include_zero = include_zero;
    cert.kind = kind;
    cert.k = code->dim;
    cert.v.reserve(code->scaling.size());
    for (FieldElement x : code->scaling) cert.v.push_back(F.to_string(x));
    cert.generator.reserve(G.rows * G.cols);
    for (size_t r = 0; r < G.rows; ++r)
        for (size_t c = 0; c < G.cols; ++c) cert.generator.push_back(F.to_string(G.at(r, c)));
    cert.self_dual = check_self_dual(F, G);
    cert.mds = check_mds(F, G, policy);
    if (cert.mds.method == MdsMethod::SampledMinors) {
        cert.samples = policy.samples;
        cert.seed = policy.seed;
    }
    return cert;
}

std::optional<SelfDualCertificate> materialize(const FieldContext& field,
                                               const ConstructionRecipe& recipe,
                                               const MdsPolicy& policy) {
    if (field.q() != recipe.q)
        fail(ErrorKind::ContextMismatch,
             "recipe was derived for q = " + std::to_string(recipe.q));
    CyclotomicContext cyc(field, recipe.e);
    CodeKind kind = recipe.claim == Claim::SigmaG ? CodeKind::GRS : CodeKind::EGRS;
    return build_certificate(cyc, recipe.I, recipe.include_zero, kind, policy);
}

std::string certificate_to_json(const SelfDualCertificate& cert) {
    json mds;
    mds["method"] = to_string(cert.mds.method);
    mds["result"] = cert.mds.is_mds;
    if (cert.mds.method == MdsMethod::SampledMinors) {
        mds["samples"] = cert.samples;
        mds["seed"] = cert.seed;
    }

    json j;
    j["q"] = cert.q;
    j["p"] = cert.p;
    j["m"] = cert.m;
    j["modulus"] = cert.modulus;
    j["theta"] = cert.theta;
    j["e"] = cert.e;
    j["I"] = cert.I;
    j["include_zero"] = cert.include_zero;
    j["kind"] = to_string(cert.kind);
    j["k"] = cert.k;
    j["v"] = cert.v;
    j["generator"] = cert.generator;
    j["checks"] = {{"self_dual", cert.self_dual}, {"mds", mds}};
    return j.dump(2) + "\n";
}

SelfDualCertificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& err) {
        fail(ErrorKind::ParseError, std::string("not valid JSON: ") + err.what());
    }
    if (!j.is_object()) fail(ErrorKind::ParseError, "certificate must be a JSON object");

    SelfDualCertificate cert;
    cert.p = field_of<uint64_t>(j, "p");
    cert.m = field_of<uint32_t>(j, "m");
    cert.q = field_of<uint32_t>(j, "q");
    cert.modulus = field_of<std::vector<uint32_t>>(j, "modulus");
    cert.theta = field_of<std::string>(j, "theta");
    cert.e = field_of<uint32_t>(j, "e");
    cert.I = field_of<std::vector<uint32_t>>(j, "I");
    cert.include_zero = field_of<bool>(j, "include_zero");
    cert.kind = parse_kind(field_of<std::string>(j, "kind"));
    cert.k = field_of<uint32_t>(j, "k");
    cert.v = field_of<std::vector<std::string>>(j, "v");
    cert.generator = field_of<std::vector<std::string>>(j, "generator");

    json checks = field_of<json>(j, "checks");
    cert.self_dual = field_of<bool>(checks, "self_dual");
    json mds = field_of<json>(checks, "mds");
    cert.mds.method = parse_method(field_of<std::string>(mds, "method"));
    cert.mds.is_mds = field_of<bool>(mds, "result");
    if (mds.contains("samples")) cert.samples = field_of<uint64_t>(mds, "samples");
    if (mds.contains("seed")) cert.seed = field_of<uint64_t>(mds, "seed");
    return cert;
}

VerifyReport verify_certificate(const SelfDualCertificate& cert, uint64_t q_cap) {
    VerifyReport rep;
    auto flag = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };

    try {
        FieldContext F = FieldContext::build(cert.p, cert.m, q_cap);
        if (F.q() != cert.q)
            flag("context mismatch: p^m gives q = " + std::to_string(F.q()) + ", recorded " +
                 std::to_string(cert.q));
        if (F.spec().modulus != cert.modulus)
            flag("context mismatch: recorded modulus is not the canonical one");
        if (F.to_string(F.theta()) != cert.theta)
            flag("context mismatch: recorded theta is not the canonical one (" +
                 F.to_string(F.theta()) + ")");
        if (!rep.failures.empty()) return rep;

        CyclotomicContext cyc(F, cert.e);
        EvaluationSet S = EvaluationSet::from_classes(cyc, cert.I, cert.include_zero);
        uint32_t n = uint32_t(S.size()) + (cert.kind == CodeKind::EGRS ? 1 : 0);
        if (n != 2 * cert.k)
            flag("recorded k = " + std::to_string(cert.k) + " does not match length " +
                 std::to_string(n));

        auto code = make_self_dual_code(S, cert.kind);
        if (!code) {
            flag("scaling criterion fails on replay");
            return rep;
        }

        if (code->scaling.size() != cert.v.size()) {
            flag("multiplier count differs: replayed " + std::to_string(code->scaling.size()) +
                 ", recorded " + std::to_string(cert.v.size()));
        } else {
            for (size_t i = 0; i < cert.v.size(); ++i)
                if (F.to_string(code->scaling[i]) != cert.v[i])
                    flag("multiplier " + std::to_string(i) + " differs: recorded " + cert.v[i] +
                         ", replayed " + F.to_string(code->scaling[i]));
        }

        Matrix G = generator_matrix(*code);
        if (cert.generator.size() != G.rows * G.cols) {
            flag("generator has " + std::to_string(cert.generator.size()) +
                 " entries, replay has " + std::to_string(G.rows * G.cols));
        } else {
            for (size_t r = 0; r < G.rows; ++r)
                for (size_t c = 0; c < G.cols; ++c) {
                    const std::string& recorded = cert.generator[r * G.cols + c];
                    if (recorded != F.to_string(G.at(r, c)))
                        flag("generator entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") differs: recorded " + recorded + ", replayed " +
                             F.to_string(G.at(r, c)));
                }
        }

        bool sd = check_self_dual(F, G);
        if (!sd) flag("replayed code is not self-dual");
        if (sd != cert.self_dual)
            flag(std::string("self_dual flag differs: recorded ") +
                 (cert.self_dual ? "true" : "false"));

        MdsPolicy policy;
        policy.method = cert.mds.method;
        if (cert.mds.method == MdsMethod::SampledMinors && cert.samples > 0)
            policy.samples = uint32_t(cert.samples);
        policy.seed = cert.seed;
        MdsResult mds = check_mds(F, G, policy);
        if (mds.is_mds != cert.mds.is_mds)
            flag(std::string("mds result differs: recorded ") +
                 (cert.mds.is_mds ? "true" : "false") + ", replayed " +
                 (mds.is_mds ? "true" : "false"));
    } catch (const Error& err) {
        flag(std::string("replay error: ") + err.what());
    }

    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace cycodes
