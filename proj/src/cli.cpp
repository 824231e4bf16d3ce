#include "cycodes/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycodes/certificates.hpp"
#include "cycodes/cyclotomy.hpp"
#include "cycodes/field.hpp"
#include "cycodes/grs.hpp"
#include "cycodes/theorems.hpp"

namespace cycodes {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

std::string join_indices(const std::vector<uint32_t>& I, const std::string& sep) {
    std::vector<std::string> parts;
    parts.reserve(I.size());
    for (uint32_t i : I) parts.push_back(std::to_string(i));
    return join(parts, sep);
}

std::vector<uint32_t> parse_index_list(const std::string& text) {
    std::vector<uint32_t> I;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::ParseError, "bad class index: '" + item + "'");
        I.push_back(uint32_t(std::stoul(item)));
    }
    if (I.empty()) fail(ErrorKind::ParseError, "empty class index list");
    return I;
}

std::string modulus_string(const std::vector<uint32_t>& modulus) {
    std::vector<std::string> parts;
    parts.reserve(modulus.size());
    for (uint32_t c : modulus) parts.push_back(std::to_string(c));
    return join(parts, ",");
}

std::string render_field(const FieldContext& F, const std::string& format) {
    int phi_neg = F.phi(F.neg(F.one()));
    if (format == "json") {
        json j;
        j["q"] = F.q();
        j["p"] = F.p();
        j["m"] = F.m();
        j["modulus"] = F.spec().modulus;
        j["theta"] = F.to_string(F.theta());
        j["phi_minus_one"] = phi_neg;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string s = "q,p,m,modulus,theta,phi_minus_one\n";
        s += std::to_string(F.q()) + "," + std::to_string(F.p()) + "," + std::to_string(F.m()) +
             "," + csv_quote(modulus_string(F.spec().modulus)) + "," +
             csv_quote(F.to_string(F.theta())) + "," + std::to_string(phi_neg) + "\n";
        return s;
    }
    std::string s;
    s += "q = " + std::to_string(F.q()) + "\n";
    s += "p = " + std::to_string(F.p()) + "\n";
    s += "m = " + std::to_string(F.m()) + "\n";
    s += "modulus = " + modulus_string(F.spec().modulus) + "\n";
    s += "theta = " + F.to_string(F.theta()) + "\n";
    s += "phi(-1) = " + std::to_string(phi_neg) + "\n";
    return s;
}

std::string render_table(const CyclotomicTable& t, const std::string& format) {
    if (format == "json") {
        json j;
        j["e"] = t.e;
        j["f"] = t.f;
        j["q"] = t.q;
        j["source"] = to_string(t.source);
        if (t.t_sign != 0) j["t_sign"] = t.t_sign;
        json rows = json::array();
        for (uint32_t i = 0; i < t.e; ++i) {
            json row = json::array();
            for (uint32_t j2 = 0; j2 < t.e; ++j2) row.push_back(t.at(i, j2));
            rows.push_back(row);
        }
        j["values"] = rows;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string s = "e,f,q,source\n";
        s += std::to_string(t.e) + "," + std::to_string(t.f) + "," + std::to_string(t.q) + "," +
             to_string(t.source) + std::string("\n");
        for (uint32_t i = 0; i < t.e; ++i) {
            for (uint32_t j = 0; j < t.e; ++j) s += (j ? "," : "") + std::to_string(t.at(i, j));
            s += "\n";
        }
        return s;
    }
    std::string s = "q = " + std::to_string(t.q) + ", e = " + std::to_string(t.e) +
                    ", f = " + std::to_string(t.f) + ", source = " + to_string(t.source) + "\n";
    for (uint32_t i = 0; i < t.e; ++i) {
        for (uint32_t j = 0; j < t.e; ++j) s += (j ? " " : "") + std::to_string(t.at(i, j));
        s += "\n";
    }
    return s;
}

std::string render_claims(const std::vector<ClaimRow>& rows, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const ClaimRow& row : rows) {
            json j;
            j["q"] = row.representative.q;
            j["n"] = row.n;
            j["claim"] = to_string(row.claim);
            j["provenance"] = row.provenance;
            j["I"] = row.representative.I;
            j["include_zero"] = row.representative.include_zero;
            j["e"] = row.representative.e;
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string s = "q,n,claim,provenance,I,include_zero\n";
        for (const ClaimRow& row : rows) {
            s += std::to_string(row.representative.q) + "," + std::to_string(row.n) + "," +
                 to_string(row.claim) + std::string(",") + csv_quote(join(row.provenance, "; ")) +
                 "," + csv_quote(join_indices(row.representative.I, ",")) + "," +
                 (row.representative.include_zero ? "true" : "false") + "\n";
        }
        return s;
    }
    std::string s;
    for (const ClaimRow& row : rows) {
        s += "n=" + std::to_string(row.n) + " " + to_string(row.claim) +
             std::string("  e=") + std::to_string(row.representative.e) + " I={" +
             join_indices(row.representative.I, ",") + "}" +
             (row.representative.include_zero ? "+0" : "") + "  via " +
             join(row.provenance, "; ") + "\n";
    }
    return s;
}

std::string render_verify(const VerifyReport& rep, const std::string& format) {
    if (format == "json") {
        json j;
        j["pass"] = rep.pass;
        j["failures"] = rep.failures;
        return j.dump(2) + "\n";
    }
    std::string s = rep.pass ? "PASS\n" : "FAIL\n";
    for (const std::string& f : rep.failures) s += "  - " + f + "\n";
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"MDS self-dual code construction over odd prime power fields"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_path;
    uint64_t q_cap = FieldContext::kDefaultCap;
    uint32_t e_cap = 12;
    uint64_t seed = 0;
    uint32_t samples = 10000;
    std::string mds_method = "auto";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", output_path, "Write the result to this file instead of stdout");
    app.add_option("--q-cap", q_cap, "Largest field size the tool will build")
        ->envname("CYCODES_Q_CAP");
    app.add_option("--e-cap", e_cap, "Largest class count a sweep may use")
        ->envname("CYCODES_E_CAP");
    app.add_option("--seed", seed, "Seed for the sampled minor check");
    app.add_option("--samples", samples, "Sample count for the sampled minor check");
    app.add_option("--mds-method", mds_method, "Force one minimum-distance check")
        ->check(CLI::IsMember({"auto", "all_minors", "exhaustive", "sampled_minors"}));

    uint64_t p = 0;
    uint32_t m = 1, e = 0;
    std::string index_list, source = "brute", kind_name = "auto", cert_path;
    bool include_zero = false;
    uint32_t e_max = 0;

    CLI::App* cmd_field = app.add_subcommand("field", "Print the canonical field construction");
    cmd_field->add_option("p", p, "Characteristic (odd prime)")->required();
    cmd_field->add_option("m", m, "Extension degree")->required();

    CLI::App* cmd_cyclo = app.add_subcommand("cyclo", "Print a cyclotomic number table");
    cmd_cyclo->add_option("p", p, "Characteristic (odd prime)")->required();
    cmd_cyclo->add_option("m", m, "Extension degree")->required();
    cmd_cyclo->add_option("e", e, "Class count (even, dividing q-1)")->required();
    cmd_cyclo->add_option("--source", source, "Table construction: brute or closed")
        ->check(CLI::IsMember({"brute", "closed"}));

    CLI::App* cmd_search =
        app.add_subcommand("search", "Enumerate provable lengths for one field");
    cmd_search->add_option("p", p, "Characteristic (odd prime)")->required();
    cmd_search->add_option("m", m, "Extension degree")->required();
    cmd_search->add_option("--e-max", e_max, "Largest class count to sweep (default: e-cap)");

    CLI::App* cmd_construct =
        app.add_subcommand("construct", "Build one code and emit its certificate");
    cmd_construct->add_option("p", p, "Characteristic (odd prime)")->required();
    cmd_construct->add_option("m", m, "Extension degree")->required();
    cmd_construct->add_option("e", e, "Class count (even, dividing q-1)")->required();
    cmd_construct->add_option("I", index_list, "Comma-separated class indices")->required();
    cmd_construct->add_flag("--zero", include_zero, "Adjoin 0 to the evaluation set");
    cmd_construct->add_option("--kind", kind_name, "grs, egrs, or auto (by point parity)")
        ->check(CLI::IsMember({"grs", "egrs", "auto"}));

    CLI::App* cmd_verify = app.add_subcommand("verify", "Replay and check a certificate file");
    cmd_verify->add_option("file", cert_path, "Certificate JSON path")->required();

    // Shared options like --format are declared once on the parent, so
    // subcommands must hand unmatched flags back up.
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cycodes");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << ex.get_name() << ": " << ex.what() << "\n";
        return 2;
    }

    auto deliver = [&](const std::string& text) -> int {
        if (output_path.empty()) {
            out << text;
            return 0;
        }
        std::ofstream f(output_path, std::ios::binary);
        if (!f) {
            err << "cannot open output file: " << output_path << "\n";
            return 2;
        }
        f << text;
        return 0;
    };

    try {
        if (*cmd_field) {
            FieldContext F = FieldContext::build(p, m, q_cap);
            return deliver(render_field(F, format));
        }

        if (*cmd_cyclo) {
            FieldContext F = FieldContext::build(p, m, q_cap);
            CyclotomicContext cyc(F, e);
            CyclotomicTable t;
            if (source == "brute") {
                t = table_bruteforce(cyc);
            } else if (e == 2) {
                t = table_e2(cyc);
            } else if (e == 4) {
                t = table_e4(cyc);
            } else if (auto params = semiprimitive_for_field(F, e)) {
                t = table_semiprimitive(*params);
            } else {
                fail(ErrorKind::WrongE, "no closed form applies to e = " + std::to_string(e) +
                                            " over q = " + std::to_string(F.q()));
            }
            return deliver(render_table(t, format));
        }

        if (*cmd_search) {
            FieldContext F = FieldContext::build(p, m, q_cap);
            uint32_t bound = e_max == 0 ? e_cap : e_max;
            std::vector<ClaimRow> rows = enumerate_claims(F, bound, e_cap);
            return deliver(render_claims(rows, format));
        }

        if (*cmd_construct) {
            FieldContext F = FieldContext::build(p, m, q_cap);
            CyclotomicContext cyc(F, e);
            std::vector<uint32_t> I = parse_index_list(index_list);

            CodeKind kind;
            if (kind_name == "auto") {
                size_t points = EvaluationSet::from_classes(cyc, I, include_zero).size();
                kind = points % 2 == 0 ? CodeKind::GRS : CodeKind::EGRS;
            } else {
                kind = kind_name == "grs" ? CodeKind::GRS : CodeKind::EGRS;
            }

            MdsPolicy policy;
            policy.seed = seed;
            policy.samples = samples;
            if (mds_method == "all_minors") policy.method = MdsMethod::AllMinors;
            if (mds_method == "exhaustive") policy.method = MdsMethod::Exhaustive;
            if (mds_method == "sampled_minors") policy.method = MdsMethod::SampledMinors;

            auto cert = build_certificate(cyc, I, include_zero, kind, policy);
            if (!cert) {
                err << (kind == CodeKind::GRS ? "criterion fails: phi values differ"
                                              : "criterion fails: phi(-delta) nonzero")
                    << "\n";
                return 1;
            }
            return deliver(certificate_to_json(*cert));
        }

        if (*cmd_verify) {
            std::ifstream f(cert_path, std::ios::binary);
            if (!f) fail(ErrorKind::ParseError, "cannot read certificate file: " + cert_path);
            std::ostringstream buf;
            buf << f.rdbuf();
            SelfDualCertificate cert = certificate_from_json(buf.str());
            VerifyReport rep = verify_certificate(cert, q_cap);
            int rc = deliver(render_verify(rep, format));
            if (rc != 0) return rc;
            return rep.pass ? 0 : 1;
        }
    } catch (const Error& ex) {
        err << ex.what() << "\n";
        switch (ex.kind()) {
            case ErrorKind::Internal:
            case ErrorKind::SignResolutionFailure:
            case ErrorKind::NoDecomposition:
                return 3;
            default:
                return 2;
        }
    }
    return 2;
}

}  // namespace cycodes
