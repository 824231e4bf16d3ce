#include "cycodes/oracle.hpp"

#include <algorithm>

#include "cycodes/theorems.hpp"

namespace cycodes {

namespace {

std::string index_pair(uint32_t i, uint32_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

/// Records one comparison into a report.
void note(OracleReport& rep, bool agree, std::string input, uint64_t expected, uint64_t got) {
    if (agree) {
        ++rep.agreements;
    } else {
        rep.mismatches.push_back(
            {std::move(input), std::to_string(expected), std::to_string(got)});
    }
}

}  // namespace

uint32_t oracle_min_distance(const FieldContext& field, const Matrix& generator,
                             uint64_t word_cap) {
    uint32_t k = generator.rows, n = generator.cols;
    if (k == 0 || n == 0) fail(ErrorKind::DimensionMismatch, "generator must be nonempty");
    uint64_t q = field.q();

    uint64_t count = 0;  // messages with first nonzero coordinate = 1
    for (uint32_t i = 0; i < k && count <= word_cap; ++i) count = count * q + 1;
    if (count > word_cap)
        fail(ErrorKind::BudgetExceeded,
             "codeword enumeration needs " + std::to_string(count) + " words, cap is " +
                 std::to_string(word_cap));

    std::vector<FieldElement> cw(n);
    std::vector<uint32_t> digits;
    auto shift = [&](uint32_t pos, uint32_t from, uint32_t to) {
        FieldElement diff = field.sub(field.element(to), field.element(from));
        for (uint32_t j = 0; j < n; ++j)
            cw[j] = field.add(cw[j], field.mul(diff, generator.at(pos, j)));
    };

    uint32_t best = n + 1;
    for (uint32_t lead = 0; lead < k; ++lead) {
        for (uint32_t j = 0; j < n; ++j) cw[j] = generator.at(lead, j);
        digits.assign(k - 1 - lead, 0);
        while (true) {
            uint32_t w = 0;
            for (const FieldElement& c : cw) w += c.v != 0;
            if (w < best) best = w;
            if (best == 0) return 0;

            size_t idx = 0;
            while (idx < digits.size() && digits[idx] == q - 1) {
                shift(lead + 1 + uint32_t(idx), uint32_t(q - 1), 0);
                digits[idx] = 0;
                ++idx;
            }
            if (idx == digits.size()) break;
            shift(lead + 1 + uint32_t(idx), digits[idx], digits[idx] + 1);
            ++digits[idx];
        }
    }
    return best;
}

uint32_t oracle_min_distance(const CodeInstance& code, uint64_t word_cap) {
    return oracle_min_distance(code.eval_set.field(), generator_matrix(code), word_cap);
}

bool oracle_selfdual_exists(const EvaluationSet& S, uint64_t cap) {
    const FieldContext& field = S.field();
    uint32_t pts = uint32_t(S.size());
    bool extended = pts % 2 == 1;
    uint32_t n = pts + (extended ? 1 : 0);
    uint32_t k = n / 2;
    uint64_t q = field.q();

    uint64_t total = 1;
    for (uint32_t i = 0; i < n && total <= cap; ++i) total *= q - 1;
    if (total > cap)
        fail(ErrorKind::BudgetExceeded, "multiplier search needs " + std::to_string(total) +
                                            " vectors, cap is " + std::to_string(cap));

    // Rows before scaling: powers of the points, plus the top-coefficient
    // column when the point count is odd.
    std::vector<std::vector<FieldElement>> rows(k, std::vector<FieldElement>(n));
    for (uint32_t r = 0; r < k; ++r) {
        for (uint32_t j = 0; j < pts; ++j) rows[r][j] = field.pow(S.elements()[j], r);
        if (extended) rows[r][pts] = r == k - 1 ? field.one() : field.zero();
    }

    std::vector<uint32_t> digits(n, 1);
    std::vector<FieldElement> v(n);
    while (true) {
        for (uint32_t j = 0; j < n; ++j) v[j] = field.element(digits[j]);
        bool good = true;
        for (uint32_t r = 0; r < k && good; ++r) {
            for (uint32_t s = r; s < k && good; ++s) {
                FieldElement acc = field.zero();
                for (uint32_t j = 0; j < n; ++j)
                    acc = field.add(acc, field.mul(field.mul(v[j], rows[r][j]),
                                                   field.mul(v[j], rows[s][j])));
                if (acc.v != 0) good = false;
            }
        }
        if (good) return true;

        uint32_t idx = 0;
        while (idx < n && digits[idx] == q - 1) {
            digits[idx] = 1;
            ++idx;
        }
        if (idx == n) break;
        ++digits[idx];
    }
    return false;
}

OracleReport check_table_identities(const CyclotomicTable& table, uint64_t p) {
    uint32_t e = table.e, f = table.f;
    uint64_t pe = p % e;
    OracleReport rep;
    rep.subject =
        "table identities q=" + std::to_string(table.q) + " e=" + std::to_string(e);

    for (uint32_t i = 0; i < e; ++i) {
        uint64_t row_sum = 0, col_sum = 0;
        for (uint32_t j = 0; j < e; ++j) {
            uint32_t a = table.at(i, j);
            row_sum += a;
            col_sum += table.at(j, i);

            uint32_t neg = table.at((e - i) % e, (j + e - i) % e);
            note(rep, a == neg, index_pair(i, j) + " vs negated-shifted", a, neg);

            uint32_t mult = table.at(uint32_t(pe * i % e), uint32_t(pe * j % e));
            note(rep, a == mult, index_pair(i, j) + " vs p-multiplied", a, mult);

            uint32_t sym = f % 2 == 0 ? table.at(j, i)
                                      : table.at((j + e / 2) % e, (i + e / 2) % e);
            note(rep, a == sym, index_pair(i, j) + " vs transposed", a, sym);
        }
        uint32_t theta_i = f % 2 == 0 ? i == 0 : i == e / 2;
        note(rep, row_sum == uint64_t(f) - theta_i, "row " + std::to_string(i) + " sum",
             f - theta_i, row_sum);
        note(rep, col_sum == uint64_t(f) - (i == 0 ? 1 : 0),
             "column " + std::to_string(i) + " sum", f - (i == 0 ? 1 : 0), col_sum);
    }
    return rep;
}

OracleReport compare_tables(const FieldContext& field, uint32_t e) {
    CyclotomicContext cyc(field, e);
    CyclotomicTable brute = table_bruteforce(cyc);

    OracleReport rep;
    rep.subject = "closed forms vs brute force q=" + std::to_string(field.q()) +
                  " e=" + std::to_string(e);

    std::vector<CyclotomicTable> closed;
    if (e == 2) closed.push_back(table_e2(cyc));
    if (e == 4) closed.push_back(table_e4(cyc));
    if (auto params = semiprimitive_for_field(field, e))
        closed.push_back(table_semiprimitive(*params));

    for (const CyclotomicTable& c : closed)
        for (uint32_t i = 0; i < e; ++i)
            for (uint32_t j = 0; j < e; ++j)
                note(rep, c.at(i, j) == brute.at(i, j),
                     std::string(to_string(c.source)) + " " + index_pair(i, j),
                     brute.at(i, j), c.at(i, j));
    return rep;
}

OracleReport compare_parities(const FieldContext& field, uint32_t e) {
    CyclotomicContext cyc(field, e);
    CyclotomicTable table = table_bruteforce(cyc);

    OracleReport rep;
    rep.subject = "parity formulas vs direct products q=" + std::to_string(field.q()) +
                  " e=" + std::to_string(e);

    std::vector<uint32_t> I;
    for (uint32_t mask = 1; mask < (1u << e); ++mask) {
        I.clear();
        for (uint32_t i = 0; i < e; ++i)
            if (mask & (1u << i)) I.push_back(i);

        ParityProfile pred = parity_profile(table, I);
        EvaluationSet S = EvaluationSet::from_classes(cyc, I, false);
        EvaluationSet St = EvaluationSet::from_classes(cyc, I, true);

        std::string tag = "I=mask" + std::to_string(mask);
        for (size_t idx = 0; idx < I.size(); ++idx) {
            for (FieldElement a : cyc.class_elements(I[idx])) {
                std::string where = tag + " a=" + field.to_string(a);
                note(rep, field.phi(delta(S, a)) == pred.phi_S[idx], where + " over S",
                     pred.phi_S[idx], uint64_t(field.phi(delta(S, a))));
                note(rep, field.phi(delta(St, a)) == pred.phi_S_tilde[idx],
                     where + " over S+0", pred.phi_S_tilde[idx],
                     uint64_t(field.phi(delta(St, a))));
            }
        }
        note(rep, field.phi(delta(St, field.zero())) == pred.phi_S_tilde_zero,
             tag + " a=0 over S+0", pred.phi_S_tilde_zero,
             uint64_t(field.phi(delta(St, field.zero()))));
    }
    return rep;
}

OracleReport check_column_parity_relations(const CyclotomicTable& table) {
    uint32_t e = table.e, f = table.f;
    OracleReport rep;
    rep.subject = "odd/even column sum relations q=" + std::to_string(table.q) +
                  " e=" + std::to_string(e);

    auto even_sum = [&](uint32_t i) {
        uint32_t s = 0;
        for (uint32_t r = 0; r < e; r += 2) s += table.at(r, i % e);
        return s;
    };

    for (uint32_t i = 0; i < e; ++i) {
        uint32_t odd_i = odd_sum(table, i);
        note(rep, odd_i + even_sum(i) == f - (i == 0 ? 1 : 0),
             "odd+even column " + std::to_string(i), f - (i == 0 ? 1 : 0),
             odd_i + even_sum(i));

        uint32_t mirror = (e - i) % e;
        bool pair_with_odd = f % 2 == 0 ? i % 2 == 0 : (i + e / 2) % 2 == 0;
        uint32_t partner = pair_with_odd ? odd_sum(table, mirror) : even_sum(mirror);
        note(rep, odd_i == partner,
             "column " + std::to_string(i) + (pair_with_odd ? " vs odd " : " vs even ") +
                 std::to_string(mirror),
             partner, odd_i);
    }

    if (e % 4 == 2) {
        if (f % 2 == 0) {
            note(rep, odd_sum(table, e / 2) == f / 2, "odd column e/2", f / 2,
                 odd_sum(table, e / 2));
            note(rep, even_sum(e / 2) == f / 2, "even column e/2", f / 2, even_sum(e / 2));
        } else {
            note(rep, odd_sum(table, 0) == (f - 1) / 2, "odd column 0", (f - 1) / 2,
                 odd_sum(table, 0));
            note(rep, even_sum(0) == (f - 1) / 2, "even column 0", (f - 1) / 2, even_sum(0));
        }
    }
    return rep;
}

OracleReport check_semiprimitive_parities(const CyclotomicTable& table,
                                          const SemiprimitiveParams& params) {
    OracleReport rep;
    rep.subject = "semiprimitive column parities q=" + std::to_string(table.q) +
                  " e=" + std::to_string(table.e);

    note(rep, table.f % 2 == 0, "f parity", 0, table.f % 2);
    note(rep, odd_sum(table, 0) % 2 == 0, "odd column 0 parity", 0, odd_sum(table, 0) % 2);

    auto parity = [](int64_t x) { return uint64_t(((x % 2) + 2) % 2); };
    uint64_t base = parity((params.R - 1) / 2);
    uint64_t eta_bit = parity(params.eta);
    for (uint32_t i = 1; i < table.e; ++i) {
        uint64_t expect = i % 2 == 0 ? base : (base + eta_bit) % 2;
        note(rep, odd_sum(table, i) % 2 == expect, "odd column " + std::to_string(i) + " parity",
             expect, odd_sum(table, i) % 2);
    }
    return rep;
}

OracleReport compare_necessity(const FieldContext& field, uint32_t max_size,
                               uint64_t word_cap) {
    OracleReport rep;
    rep.subject = "solver vs definitional search q=" + std::to_string(field.q());
    uint32_t q = uint32_t(field.q());

    std::vector<FieldElement> pick;
    for (uint32_t size = 1; size <= max_size && size <= q; ++size) {
        std::vector<uint32_t> idx(size);
        for (uint32_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            pick.clear();
            for (uint32_t i : idx) pick.push_back(field.element(i));
            EvaluationSet S = EvaluationSet::explicit_set(field, pick);
            CodeKind kind = size % 2 == 0 ? CodeKind::GRS : CodeKind::EGRS;

            bool solver = make_self_dual_code(S, kind).has_value();
            bool oracle = oracle_selfdual_exists(S, word_cap);
            if (solver == oracle) {
                ++rep.agreements;
            } else {
                std::string input = "S={";
                for (size_t j = 0; j < pick.size(); ++j)
                    input += (j ? " " : "") + field.to_string(pick[j]);
                input += "} ";
                input += to_string(kind);
                rep.mismatches.push_back(
                    {std::move(input), oracle ? "exists" : "none", solver ? "exists" : "none"});
            }

            uint32_t i = size;
            while (i > 0 && idx[i - 1] == q - size + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (uint32_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return rep;
}

}  // namespace cycodes
