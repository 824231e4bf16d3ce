#include "cycodes/grs.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "cycodes/oracle.hpp"

namespace cycodes {

namespace {

uint64_t pow_saturating(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

std::string join_columns(const std::vector<size_t>& cols) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "}";
    return os.str();
}

/// In-place elimination on a d x d buffer; true iff the matrix is invertible.
bool nonsingular(const FieldContext& F, std::vector<FieldElement>& m, size_t d) {
    for (size_t c = 0; c < d; ++c) {
        size_t pivot = d;
        for (size_t r = c; r < d; ++r) {
            if (m[r * d + c] != F.zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == d) return false;
        if (pivot != c) {
            for (size_t j = c; j < d; ++j) std::swap(m[pivot * d + j], m[c * d + j]);
        }
        FieldElement pinv = F.inv(m[c * d + c]);
        for (size_t r = c + 1; r < d; ++r) {
            if (m[r * d + c] == F.zero()) continue;
            FieldElement factor = F.mul(m[r * d + c], pinv);
            for (size_t j = c; j < d; ++j)
                m[r * d + j] = F.sub(m[r * d + j], F.mul(factor, m[c * d + j]));
        }
    }
    return true;
}

/// Advances a strictly increasing index vector over {0..limit-1}; false when
/// the last combination has been consumed.
bool next_combination(std::vector<size_t>& idx, size_t limit) {
    size_t j = idx.size();
    while (j > 0) {
        --j;
        if (idx[j] + (idx.size() - j) < limit) {
            ++idx[j];
            for (size_t t = j + 1; t < idx.size(); ++t) idx[t] = idx[t - 1] + 1;
            return true;
        }
    }
    return false;
}

/// 1 / delta(a) for every a of S, in set order. These are the coefficients
/// writing x^(n-1)'s leading behavior into Lagrange form, so they must
/// annihilate all lower powers; that identity is cheap and catches most
/// arithmetic regressions, hence the hard check here.
std::vector<FieldElement> inverse_delta_vector(const EvaluationSet& S) {
    const FieldContext& F = S.field();
    const auto& pts = S.elements();
    size_t n = pts.size();
    std::vector<FieldElement> u(n);
    for (size_t i = 0; i < n; ++i) u[i] = F.inv(delta(S, pts[i]));

    std::vector<FieldElement> pw(n, F.one());
    for (size_t j = 0; j + 1 < n; ++j) {
        FieldElement acc = F.zero();
        for (size_t i = 0; i < n; ++i) {
            acc = F.add(acc, F.mul(u[i], pw[i]));
            pw[i] = F.mul(pw[i], pts[i]);
        }
        if (acc != F.zero()) fail(ErrorKind::Internal, "interpolation identity violated");
    }
    FieldElement top = F.zero();
    for (size_t i = 0; i < n; ++i) top = F.add(top, F.mul(u[i], pw[i]));
    if (top != F.one()) fail(ErrorKind::Internal, "interpolation identity violated at top power");
    return u;
}

}  // namespace

EvaluationSet EvaluationSet::from_classes(const CyclotomicContext& cyc,
                                          const std::vector<uint32_t>& I, bool include_zero) {
    if (I.empty()) fail(ErrorKind::EmptyIndexSet, "no cyclotomic classes selected");
    std::vector<uint32_t> sorted = I;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            fail(ErrorKind::DuplicateElement, "class index repeated: " + std::to_string(sorted[i]));
    for (uint32_t lambda : sorted)
        if (lambda >= cyc.e())
            fail(ErrorKind::IndexOutOfRange, "class index " + std::to_string(lambda) +
                                                 " not below e = " + std::to_string(cyc.e()));

    EvaluationSet s;
    s.field_ = &cyc.field();
    s.elements_.reserve(size_t(sorted.size()) * cyc.f() + (include_zero ? 1 : 0));
    for (uint32_t lambda : sorted) {
        const auto& cls = cyc.class_elements(lambda);
        s.elements_.insert(s.elements_.end(), cls.begin(), cls.end());
    }
    if (include_zero) s.elements_.push_back(s.field_->zero());
    s.provenance_ = SetProvenance{cyc.e(), std::move(sorted), include_zero};
    return s;
}

EvaluationSet EvaluationSet::explicit_set(const FieldContext& field,
                                          std::vector<FieldElement> elems) {
    if (elems.empty()) fail(ErrorKind::EmptyIndexSet, "empty evaluation set");
    for (FieldElement a : elems) field.element(a.v);  // range check
    std::sort(elems.begin(), elems.end());
    for (size_t i = 0; i + 1 < elems.size(); ++i)
        if (elems[i] == elems[i + 1])
            fail(ErrorKind::DuplicateElement,
                 "evaluation point repeated: " + field.to_string(elems[i]));
    EvaluationSet s;
    s.field_ = &field;
    s.elements_ = std::move(elems);
    return s;
}

bool EvaluationSet::contains(FieldElement a) const {
    return std::find(elements_.begin(), elements_.end(), a) != elements_.end();
}

FieldElement delta(const EvaluationSet& S, FieldElement a) {
    const FieldContext& F = S.field();
    if (!S.contains(a)) fail(ErrorKind::NotInSet, "delta asked outside the evaluation set");
    FieldElement prod = F.one();
    for (FieldElement b : S.elements()) {
        if (b == a) continue;
        prod = F.mul(prod, F.sub(a, b));
    }
    return prod;
}

std::optional<std::vector<FieldElement>> solve_scaling_grs(const EvaluationSet& S) {
    const FieldContext& F = S.field();
    size_t n = S.size();
    if (n % 2 != 0) fail(ErrorKind::OddLength, "plain scaling needs an even point count");
    std::vector<FieldElement> u = inverse_delta_vector(S);

    int parity = F.phi(u[0]);
    for (FieldElement ui : u)
        if (F.phi(ui) != parity) return std::nullopt;

    FieldElement lambda = parity == 0 ? F.one() : F.theta();
    std::vector<FieldElement> v(n);
    for (size_t i = 0; i < n; ++i) {
        auto root = F.sqrt(F.mul(lambda, u[i]));
        if (!root) fail(ErrorKind::Internal, "square lost its root");
        v[i] = *root;
    }
    return v;
}

std::optional<std::vector<FieldElement>> solve_scaling_egrs(const EvaluationSet& S) {
    const FieldContext& F = S.field();
    size_t n = S.size();
    if (n % 2 == 0) fail(ErrorKind::EvenLength, "extended scaling needs an odd point count");
    std::vector<FieldElement> u = inverse_delta_vector(S);

    for (FieldElement ui : u)
        if (F.phi(F.neg(ui)) != 0) return std::nullopt;

    std::vector<FieldElement> v(n);
    for (size_t i = 0; i < n; ++i) {
        auto root = F.sqrt(F.neg(u[i]));
        if (!root) fail(ErrorKind::Internal, "square lost its root");
        v[i] = *root;
    }
    return v;
}

const char* to_string(CodeKind k) { return k == CodeKind::GRS ? "grs" : "egrs"; }

Matrix Matrix::zero(size_t rows, size_t cols) {
    return Matrix{rows, cols, std::vector<FieldElement>(rows * cols, FieldElement{0})};
}

uint32_t CodeInstance::length() const {
    return uint32_t(eval_set.size()) + (kind == CodeKind::EGRS ? 1 : 0);
}

std::optional<CodeInstance> make_self_dual_code(const EvaluationSet& S, CodeKind kind) {
    auto v = kind == CodeKind::GRS ? solve_scaling_grs(S) : solve_scaling_egrs(S);
    if (!v) return std::nullopt;
    uint32_t dim = (uint32_t(S.size()) + (kind == CodeKind::EGRS ? 1 : 0)) / 2;
    return CodeInstance{kind, S, std::move(*v), dim};
}

Matrix generator_matrix(const CodeInstance& code) {
    const FieldContext& F = code.eval_set.field();
    const auto& pts = code.eval_set.elements();
    uint32_t k = code.dim;
    uint32_t n = code.length();
    Matrix G = Matrix::zero(k, n);
    for (size_t i = 0; i < pts.size(); ++i) {
        FieldElement pw = F.one();
        for (uint32_t j = 0; j < k; ++j) {
            G.at(j, i) = F.mul(code.scaling[i], pw);
            pw = F.mul(pw, pts[i]);
        }
    }
    if (code.kind == CodeKind::EGRS) G.at(k - 1, n - 1) = F.one();
    return G;
}

bool check_self_dual(const FieldContext& F, const Matrix& G) {
    if (G.cols != 2 * G.rows)
        fail(ErrorKind::DimensionMismatch, "self-dual needs length twice the dimension");
    for (size_t r = 0; r < G.rows; ++r) {
        for (size_t s = r; s < G.rows; ++s) {
            FieldElement acc = F.zero();
            for (size_t c = 0; c < G.cols; ++c) acc = F.add(acc, F.mul(G.at(r, c), G.at(s, c)));
            if (acc != F.zero()) return false;
        }
    }
    return true;
}

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        uint64_t mult = n - k + i;
        // r * mult = i * C(n-k+i, i), so after cancelling gcds the leftover
        // part of i divides mult and both divisions below are exact.
        uint64_t g = std::gcd(r, i);
        mult /= i / g;
        r /= g;
        if (r > UINT64_MAX / mult) return UINT64_MAX;
        r *= mult;
    }
    return r;
}

const char* to_string(MdsMethod m) {
    switch (m) {
        case MdsMethod::AllMinors: return "all_minors";
        case MdsMethod::Exhaustive: return "exhaustive";
        case MdsMethod::SampledMinors: return "sampled_minors";
    }
    return "unknown";
}

namespace {

/// Every k-column minor, after one row reduction. Reducing G to [I | A]
/// leaves exactly the square submatrices of A to test: picking columns
/// T from [I | A] and expanding along the identity part gives, up to sign,
/// the A-submatrix on the complementary rows. Summing over sizes this is
/// C(n, k) minors priced as one elimination plus C(n, k) - 1 small ones.
MdsResult all_minors(const FieldContext& F, const Matrix& G) {
    size_t k = G.rows, n = G.cols;
    MdsResult res;
    res.method = MdsMethod::AllMinors;

    Matrix M = G;
    for (size_t c = 0; c < k; ++c) {
        size_t pivot = k;
        for (size_t r = c; r < k; ++r) {
            if (M.at(r, c) != F.zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == k) {
            res.is_mds = false;
            res.checked = 1;
            std::vector<size_t> lead(k);
            for (size_t i = 0; i < k; ++i) lead[i] = i;
            res.witness = "singular minor at columns " + join_columns(lead);
            return res;
        }
        if (pivot != c)
            for (size_t j = 0; j < n; ++j) std::swap(M.at(pivot, j), M.at(c, j));
        FieldElement pinv = F.inv(M.at(c, c));
        for (size_t j = 0; j < n; ++j) M.at(c, j) = F.mul(M.at(c, j), pinv);
        for (size_t r = 0; r < k; ++r) {
            if (r == c || M.at(r, c) == F.zero()) continue;
            FieldElement factor = M.at(r, c);
            for (size_t j = 0; j < n; ++j)
                M.at(r, j) = F.sub(M.at(r, j), F.mul(factor, M.at(c, j)));
        }
    }
    res.checked = 1;

    size_t w = n - k;
    std::vector<FieldElement> buf;
    for (size_t d = 1; d <= std::min(k, w); ++d) {
        std::vector<size_t> rows(d), cols(d);
        buf.assign(d * d, F.zero());
        for (size_t i = 0; i < d; ++i) rows[i] = i;
        do {
            for (size_t i = 0; i < d; ++i) cols[i] = i;
            do {
                for (size_t r = 0; r < d; ++r)
                    for (size_t c = 0; c < d; ++c) buf[r * d + c] = M.at(rows[r], k + cols[c]);
                ++res.checked;
                if (!nonsingular(F, buf, d)) {
                    res.is_mds = false;
                    std::vector<size_t> picked;
                    for (size_t r = 0, t = 0; r < k; ++r) {
                        while (t < d && rows[t] < r) ++t;
                        if (t == d || rows[t] != r) picked.push_back(r);
                    }
                    for (size_t c : cols) picked.push_back(k + c);
                    res.witness = "singular minor at columns " + join_columns(picked);
                    return res;
                }
            } while (next_combination(cols, w));
        } while (next_combination(rows, k));
    }
    res.is_mds = true;
    return res;
}

MdsResult exhaustive(const FieldContext& F, const Matrix& G, uint64_t word_cap) {
    size_t k = G.rows, n = G.cols;
    MdsResult res;
    res.method = MdsMethod::Exhaustive;
    uint32_t d = oracle_min_distance(F, G, word_cap);
    res.checked = (pow_saturating(F.q(), uint32_t(k)) - 1) / (F.q() - 1);
    res.is_mds = d == n - k + 1;
    if (!res.is_mds)
        res.witness = "minimum distance " + std::to_string(d) + ", MDS needs " +
                      std::to_string(n - k + 1);
    return res;
}

MdsResult sampled_minors(const FieldContext& F, const Matrix& G, uint32_t samples,
                         uint64_t seed) {
    size_t k = G.rows, n = G.cols;
    MdsResult res;
    res.method = MdsMethod::SampledMinors;
    std::mt19937_64 rng(seed);
    std::vector<size_t> idx(n), pick(k);
    std::vector<FieldElement> buf(k * k);
    for (uint32_t s = 0; s < samples; ++s) {
        for (size_t i = 0; i < n; ++i) idx[i] = i;
        for (size_t i = 0; i < k; ++i) {
            size_t j = i + size_t(rng() % (n - i));
            std::swap(idx[i], idx[j]);
        }
        pick.assign(idx.begin(), idx.begin() + k);
        std::sort(pick.begin(), pick.end());
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < k; ++c) buf[r * k + c] = G.at(r, pick[c]);
        ++res.checked;
        if (!nonsingular(F, buf, k)) {
            res.is_mds = false;
            res.witness = "singular minor at columns " + join_columns(pick);
            return res;
        }
    }
    res.is_mds = true;  // no counterexample among the samples
    return res;
}

}  // namespace

MdsResult check_mds(const FieldContext& F, const Matrix& G, const MdsPolicy& policy) {
    size_t k = G.rows, n = G.cols;
    if (k == 0 || k > n) fail(ErrorKind::DimensionMismatch, "generator must be k x n with k <= n");

    uint64_t minors = binomial(n, k);
    uint64_t words = pow_saturating(F.q(), uint32_t(k));
    MdsMethod method;
    if (policy.method) {
        method = *policy.method;
        if (method == MdsMethod::AllMinors && minors > policy.minor_cap)
            fail(ErrorKind::BudgetExceeded, "C(n, k) = " + std::to_string(minors) +
                                                " exceeds minor cap " +
                                                std::to_string(policy.minor_cap));
        if (method == MdsMethod::Exhaustive && words > policy.word_cap)
            fail(ErrorKind::BudgetExceeded,
                 "q^k exceeds word cap " + std::to_string(policy.word_cap));
    } else if (minors <= policy.minor_cap) {
        method = MdsMethod::AllMinors;
    } else if (words <= policy.word_cap) {
        method = MdsMethod::Exhaustive;
    } else {
        method = MdsMethod::SampledMinors;
    }

    switch (method) {
        case MdsMethod::AllMinors: return all_minors(F, G);
        case MdsMethod::Exhaustive: return exhaustive(F, G, policy.word_cap);
        case MdsMethod::SampledMinors: return sampled_minors(F, G, policy.samples, policy.seed);
    }
    fail(ErrorKind::Internal, "unreachable");
}

}  // namespace cycodes
