#include "cycodes/cyclotomy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cycodes {

const char* to_string(TableSource s) {
    switch (s) {
        case TableSource::BruteForce: return "brute_force";
        case TableSource::ClosedFormE2: return "closed_e2";
        case TableSource::ClosedFormE4: return "closed_e4";
        case TableSource::Semiprimitive: return "semiprimitive";
    }
    return "unknown";
}

CyclotomicContext::CyclotomicContext(const FieldContext& field, uint32_t e) : field_(&field) {
    uint32_t q = field.q();
    if (e < 2 || e % 2 != 0 || (q - 1) % e != 0)
        fail(ErrorKind::BadE,
             "e must be even and divide q-1; got e=" + std::to_string(e) +
                 ", q=" + std::to_string(q));
    e_ = e;
    f_ = (q - 1) / e;
    classes_.assign(e, {});
    for (uint32_t lambda = 0; lambda < e; ++lambda) {
        classes_[lambda].reserve(f_);
        for (uint32_t j = 0; j < f_; ++j)
            classes_[lambda].push_back(field.exp(lambda + uint64_t(e) * j));
    }
}

uint32_t CyclotomicContext::class_of(FieldElement x) const {
    return field_->log(x) % e_;
}

const std::vector<FieldElement>& CyclotomicContext::class_elements(uint32_t lambda) const {
    if (lambda >= e_) fail(ErrorKind::IndexOutOfRange, "class index out of range");
    return classes_[lambda];
}

uint32_t CyclotomicTable::at(uint32_t i, uint32_t j) const {
    if (i >= e || j >= e) fail(ErrorKind::IndexOutOfRange, "table index out of range");
    return values[size_t(i) * e + j];
}

uint32_t cyclotomic_number_bruteforce(const CyclotomicContext& cyc, uint32_t i, uint32_t j) {
    if (i >= cyc.e() || j >= cyc.e()) fail(ErrorKind::IndexOutOfRange, "class index out of range");
    const FieldContext& F = cyc.field();
    uint32_t count = 0;
    for (FieldElement x : cyc.class_elements(i)) {
        FieldElement y = F.add(x, F.one());
        if (y.v != 0 && cyc.class_of(y) == j) ++count;
    }
    return count;
}

CyclotomicTable table_bruteforce(const CyclotomicContext& cyc) {
    const FieldContext& F = cyc.field();
    uint32_t e = cyc.e();
    CyclotomicTable t;
    t.e = e;
    t.f = cyc.f();
    t.q = F.q();
    t.source = TableSource::BruteForce;
    t.values.assign(size_t(e) * e, 0);
    for (uint64_t l = 0; l + 1 < F.q(); ++l) {
        FieldElement x = F.exp(l);
        FieldElement y = F.add(x, F.one());
        if (y.v == 0) continue;
        uint32_t i = uint32_t(l % e);
        uint32_t j = cyc.class_of(y);
        ++t.values[size_t(i) * e + j];
    }
    return t;
}

CyclotomicTable table_e2(const CyclotomicContext& cyc) {
    if (cyc.e() != 2) fail(ErrorKind::WrongE, "order-2 closed form needs e == 2");
    uint32_t f = cyc.f();
    CyclotomicTable t;
    t.e = 2;
    t.f = f;
    t.q = cyc.field().q();
    t.source = TableSource::ClosedFormE2;
    t.values.assign(4, 0);
    if (f % 2 == 0) {
        t.values[0] = f / 2 - 1;                       // (0,0)
        t.values[1] = t.values[2] = t.values[3] = f / 2;
    } else {
        t.values[1] = (f + 1) / 2;                     // (0,1)
        t.values[0] = t.values[2] = t.values[3] = (f - 1) / 2;
    }
    return t;
}

QuarticParams decompose_quartic(uint64_t q) {
    if (q % 4 != 1)
        fail(ErrorKind::NoDecomposition,
             "q = " + std::to_string(q) + " is not 1 mod 4");
    uint64_t p = 0;
    for (uint64_t d = 3; d * d <= q; d += 2) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;

    std::vector<QuarticParams> candidates;
    for (uint64_t t = 0; 4 * t * t <= q; ++t) {
        uint64_t rest = q - 4 * t * t;
        uint64_t s0 = uint64_t(std::llround(std::sqrt(double(rest))));
        while (s0 * s0 > rest) --s0;
        while ((s0 + 1) * (s0 + 1) <= rest) ++s0;
        if (s0 * s0 != rest || s0 % 2 == 0) continue;
        int64_t s = (s0 % 4 == 1) ? int64_t(s0) : -int64_t(s0);
        candidates.push_back({s, t});
    }
    if (candidates.empty())
        fail(ErrorKind::NoDecomposition, "no representation q = s^2 + 4t^2");

    // Prefer the primary representation, the one with s coprime to p. For
    // p = 3 (mod 4) only t = 0 exists and s is then a power of p.
    std::vector<QuarticParams> coprime;
    for (const auto& c : candidates)
        if (std::llabs(c.s) % int64_t(p) != 0) coprime.push_back(c);
    if (coprime.size() > 1)
        fail(ErrorKind::Internal, "ambiguous quartic decomposition for q=" + std::to_string(q));
    if (coprime.size() == 1) return coprime[0];
    if (candidates.size() > 1)
        fail(ErrorKind::Internal, "ambiguous quartic decomposition for q=" + std::to_string(q));
    return candidates[0];
}

namespace {

// Order-4 table layouts. Five distinct values A..E; which cell holds which
// value depends on the parity of f. Entries are 16 times smaller than the
// bracketed expressions below.
CyclotomicTable build_e4(uint64_t q, uint32_t f, int64_t s, int64_t t, int t_sign) {
    int64_t A, B, C, D, E;
    const char* layout;
    if (f % 2 == 0) {
        A = int64_t(q) - 11 - 6 * s;
        B = int64_t(q) - 3 + 2 * s + 8 * t;
        C = int64_t(q) - 3 + 2 * s;
        D = int64_t(q) - 3 + 2 * s - 8 * t;
        E = int64_t(q) + 1 - 2 * s;
        layout = "ABCD" "BDEE" "CECE" "DEEB";
    } else {
        A = int64_t(q) - 7 + 2 * s;
        B = int64_t(q) + 1 + 2 * s - 8 * t;
        C = int64_t(q) + 1 - 6 * s;
        D = int64_t(q) + 1 + 2 * s + 8 * t;
        E = int64_t(q) - 3 - 2 * s;
        layout = "ABCD" "EEDB" "AEAE" "EDBE";
    }
    int64_t vals[5] = {A, B, C, D, E};
    CyclotomicTable tab;
    tab.e = 4;
    tab.f = f;
    tab.q = q;
    tab.source = TableSource::ClosedFormE4;
    tab.t_sign = t_sign;
    tab.values.assign(16, 0);
    for (int cell = 0; cell < 16; ++cell) {
        int64_t v = vals[layout[cell] - 'A'];
        if (v < 0 || v % 16 != 0)
            fail(ErrorKind::SignResolutionFailure,
                 "order-4 closed form produced a non-integral cell for q=" + std::to_string(q));
        tab.values[cell] = uint32_t(v / 16);
    }
    return tab;
}

}  // namespace

CyclotomicTable table_e4(const CyclotomicContext& cyc) {
    if (cyc.e() != 4) fail(ErrorKind::WrongE, "order-4 closed form needs e == 4");
    uint64_t q = cyc.field().q();
    QuarticParams params = decompose_quartic(q);
    uint32_t f = cyc.f();

    // Both signs of t give valid-looking tables with B and D swapped; one
    // brute-force cell pins which sign matches this field's theta.
    CyclotomicTable plus = build_e4(q, f, params.s, int64_t(params.t), +1);
    CyclotomicTable minus = build_e4(q, f, params.s, -int64_t(params.t), -1);
    uint32_t probe = cyclotomic_number_bruteforce(cyc, 0, 1);
    if (plus.at(0, 1) == probe) return plus;
    if (minus.at(0, 1) == probe) return minus;
    fail(ErrorKind::SignResolutionFailure,
         "neither t sign matches brute force for q=" + std::to_string(q));
}

SemiprimitiveParams make_semiprimitive(uint64_t p, uint32_t e, uint32_t s_exp) {
    if (e < 4 || e % 2 != 0)
        fail(ErrorKind::NotSemiprimitive, "semiprimitive family needs even e >= 4");
    if (s_exp == 0) fail(ErrorKind::NotSemiprimitive, "s must be positive");
    if (std::gcd(p, uint64_t(e)) != 1)
        fail(ErrorKind::NotSemiprimitive, "p must be coprime to e");

    uint32_t t_min = 0;
    uint64_t pw = 1;
    for (uint32_t t = 1; t <= 2 * e; ++t) {
        pw = (pw * (p % e)) % e;
        if (pw == e - 1) {
            t_min = t;
            break;
        }
        if (pw == 1) break;  // cycled without hitting -1
    }
    if (t_min == 0)
        fail(ErrorKind::NotSemiprimitive,
             "no power of " + std::to_string(p) + " is -1 mod " + std::to_string(e));

    SemiprimitiveParams out;
    out.p = p;
    out.e = e;
    out.t_min = t_min;
    out.s_exp = s_exp;
    out.m = t_min * s_exp;
    out.r = 1;
    for (uint32_t i = 0; i < out.m; ++i) out.r *= p;
    out.q = out.r * out.r;
    out.R = (s_exp % 2 == 0) ? int64_t(out.r) : -int64_t(out.r);
    if ((out.R - 1) % int64_t(e) != 0)
        fail(ErrorKind::Internal, "R - 1 not divisible by e");
    out.eta = (out.R - 1) / int64_t(e);
    return out;
}

std::optional<SemiprimitiveParams> semiprimitive_for_field(const FieldContext& field, uint32_t e) {
    if (e < 4 || e % 2 != 0 || field.m() % 2 != 0) return std::nullopt;
    if ((field.q() - 1) % e != 0) return std::nullopt;
    SemiprimitiveParams probe;
    try {
        probe = make_semiprimitive(field.p(), e, 1);
    } catch (const Error&) {
        return std::nullopt;
    }
    uint32_t half = field.m() / 2;
    if (half % probe.t_min != 0) return std::nullopt;
    return make_semiprimitive(field.p(), e, half / probe.t_min);
}

CyclotomicTable table_semiprimitive(const SemiprimitiveParams& params) {
    uint32_t e = params.e;
    int64_t eta = params.eta;
    CyclotomicTable t;
    t.e = e;
    t.f = uint32_t((params.q - 1) / e);
    t.q = params.q;
    t.source = TableSource::Semiprimitive;
    t.values.assign(size_t(e) * e, 0);
    auto put = [&](uint32_t i, uint32_t j, int64_t v) {
        if (v < 0) fail(ErrorKind::Internal, "negative cyclotomic number");
        t.values[size_t(i) * e + j] = uint32_t(v);
    };
    put(0, 0, eta * eta - int64_t(e - 3) * eta - 1);
    for (uint32_t i = 1; i < e; ++i) {
        put(0, i, eta * eta + eta);
        put(i, 0, eta * eta + eta);
        put(i, i, eta * eta + eta);
    }
    for (uint32_t i = 1; i < e; ++i)
        for (uint32_t j = 1; j < e; ++j)
            if (i != j) put(i, j, eta * eta);
    return t;
}

uint32_t odd_sum(const CyclotomicTable& t, uint32_t i) {
    if (i >= t.e) fail(ErrorKind::IndexOutOfRange, "column index out of range");
    uint32_t sum = 0;
    for (uint32_t row = 1; row < t.e; row += 2) sum += t.at(row, i);
    return sum;
}

uint64_t set_sum(const CyclotomicTable& t, const std::vector<uint32_t>& I,
                 const std::vector<uint32_t>& J) {
    uint64_t sum = 0;
    for (uint32_t i : I)
        for (uint32_t j : J) sum += t.at(i % t.e, j % t.e);
    return sum;
}

uint64_t odd_sum_shifted(const CyclotomicTable& t, const std::vector<uint32_t>& I, uint32_t i) {
    uint64_t sum = 0;
    for (uint32_t lambda : I) {
        uint32_t col = (lambda % t.e + t.e - i % t.e) % t.e;
        sum += odd_sum(t, col);
    }
    return sum;
}

}  // namespace cycodes
