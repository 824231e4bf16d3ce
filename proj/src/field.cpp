#include "cycodes/field.hpp"

#include <algorithm>
#include <sstream>

namespace cycodes {

namespace {

// Coefficient vectors for construction-time polynomial arithmetic over Z_p.
// Once the log/exp tables exist none of this runs again.
using Poly = std::vector<uint32_t>;

void unpack(uint64_t v, uint64_t p, uint32_t m, Poly& out) {
    out.assign(m, 0);
    for (uint32_t i = 0; i < m && v != 0; ++i) {
        out[i] = uint32_t(v % p);
        v /= p;
    }
}

uint64_t pack(const Poly& c, uint64_t p) {
    uint64_t v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

int degree(const Poly& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return int(i);
    return -1;
}

// a mod b, b monic of positive degree.
Poly poly_mod(Poly a, const Poly& b, uint64_t p) {
    int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) {
        uint64_t c = a[da];  // leading coefficient; b is monic
        int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            uint64_t t = (uint64_t(b[i]) * c) % p;
            a[i + shift] = uint32_t((a[i + shift] + p - t) % p);
        }
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, uint64_t p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = uint32_t((prod[i + j] + uint64_t(a[i]) * b[j]) % p);
        }
    }
    return poly_mod(std::move(prod), mod, p);
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, uint64_t p, uint32_t m) {
    if (m == 1) return true;
    Poly div;
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t v = 0; v < count; ++v) {
            unpack(v, p, d, div);
            div.resize(d + 1, 0);
            div[d] = 1;
            Poly r = poly_mod(f, div, p);
            if (degree(r) < 0) return false;
        }
    }
    return true;
}

Poly poly_pow_mod(Poly base, uint64_t k, const Poly& mod, uint64_t p) {
    Poly result{1};
    while (k > 0) {
        if (k & 1) result = poly_mul_mod(result, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        k >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<PrimePower> odd_prime_powers_upto(uint64_t limit) {
    std::vector<PrimePower> out;
    for (uint64_t q = 3; q <= limit; q += 2) {
        auto ps = prime_factors(q);
        if (ps.size() != 1) continue;
        uint64_t p = ps[0];
        uint32_t m = 0;
        uint64_t t = q;
        while (t > 1) {
            t /= p;
            ++m;
        }
        uint64_t check = 1;
        for (uint32_t i = 0; i < m; ++i) check *= p;
        if (check == q) out.push_back({p, m, q});
    }
    return out;
}

FieldContext FieldContext::build(uint64_t p, uint32_t m, uint64_t cap) {
    if (m == 0) fail(ErrorKind::BadDegree, "extension degree must be at least 1");
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        fail(ErrorKind::NotAPrime, "p must be an odd prime, got " + std::to_string(p));

    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > cap)
            fail(ErrorKind::CapExceeded,
                 "p^m exceeds the field size cap " + std::to_string(cap));
    }

    FieldContext ctx;
    ctx.spec_.p = p;
    ctx.spec_.m = m;
    ctx.q_ = uint32_t(q);

    // Lexicographically first irreducible monic modulus x^m + c_{m-1}x^{m-1} + ... + c_0,
    // enumerating the low coefficients as a base-p counter.
    Poly f;
    uint64_t found = q;  // sentinel: loop below always succeeds
    for (uint64_t v = 0; v < q; ++v) {
        unpack(v, p, m, f);
        f.resize(m + 1, 0);
        f[m] = 1;
        if (is_irreducible(f, p, m)) {
            found = v;
            break;
        }
    }
    if (found == q) fail(ErrorKind::Internal, "no irreducible modulus found");
    unpack(found, p, m, f);
    f.resize(m + 1, 0);
    f[m] = 1;
    ctx.spec_.modulus.assign(f.begin(), f.end());

    // Least primitive element in packed-value order.
    const Poly& mod = f;
    auto primes = prime_factors(q - 1);
    uint64_t theta = 0;
    Poly cand;
    for (uint64_t v = 2; v < q; ++v) {
        unpack(v, p, m, cand);
        bool primitive = true;
        for (uint64_t r : primes) {
            Poly t = poly_pow_mod(cand, (q - 1) / r, mod, p);
            if (degree(t) == 0 && t[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            theta = v;
            break;
        }
    }
    if (theta == 0) fail(ErrorKind::Internal, "no primitive element found");
    ctx.theta_ = {uint32_t(theta)};

    ctx.exp_.assign(q - 1, 0);
    ctx.log_.assign(q, UINT32_MAX);
    Poly g;
    unpack(theta, p, m, g);
    Poly cur{1};
    for (uint64_t i = 0; i < q - 1; ++i) {
        uint64_t v = pack(cur, p);
        ctx.exp_[i] = uint32_t(v);
        if (ctx.log_[v] != UINT32_MAX)
            fail(ErrorKind::Internal, "exp table collision; element not primitive");
        ctx.log_[v] = uint32_t(i);
        cur = poly_mul_mod(cur, g, mod, p);
    }
    if (degree(cur) != 0 || cur[0] != 1)
        fail(ErrorKind::Internal, "theta^(q-1) != 1");
    return ctx;
}

FieldElement FieldContext::element(uint64_t packed) const {
    if (packed >= q_)
        fail(ErrorKind::IndexOutOfRange,
             "packed value " + std::to_string(packed) + " out of range for q=" + std::to_string(q_));
    return {uint32_t(packed)};
}

FieldElement FieldContext::from_coeffs(std::span<const uint32_t> coeffs) const {
    if (coeffs.size() != spec_.m)
        fail(ErrorKind::BadDegree, "coefficient vector must have length m");
    uint64_t v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= spec_.p)
            fail(ErrorKind::IndexOutOfRange, "coefficient out of range");
        v = v * spec_.p + coeffs[i];
    }
    return {uint32_t(v)};
}

std::vector<uint32_t> FieldContext::coeffs(FieldElement x) const {
    std::vector<uint32_t> c(spec_.m, 0);
    uint64_t v = x.v;
    for (uint32_t i = 0; i < spec_.m && v != 0; ++i) {
        c[i] = uint32_t(v % spec_.p);
        v /= spec_.p;
    }
    return c;
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
    // Digit-wise mod p on the packed values.
    uint64_t p = spec_.p;
    uint64_t va = a.v, vb = b.v, out = 0, mult = 1;
    for (uint32_t i = 0; i < spec_.m; ++i) {
        uint64_t d = (va % p + vb % p) % p;
        out += d * mult;
        mult *= p;
        va /= p;
        vb /= p;
    }
    return {uint32_t(out)};
}

FieldElement FieldContext::neg(FieldElement a) const {
    uint64_t p = spec_.p;
    uint64_t va = a.v, out = 0, mult = 1;
    for (uint32_t i = 0; i < spec_.m; ++i) {
        uint64_t d = va % p;
        out += (d == 0 ? 0 : p - d) * mult;
        mult *= p;
        va /= p;
    }
    return {uint32_t(out)};
}

FieldElement FieldContext::sub(FieldElement a, FieldElement b) const {
    return add(a, neg(b));
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
    if (a.v == 0 || b.v == 0) return {0};
    uint64_t l = uint64_t(log_[a.v]) + log_[b.v];
    if (l >= q_ - 1) l -= q_ - 1;
    return {exp_[l]};
}

FieldElement FieldContext::inv(FieldElement a) const {
    if (a.v == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    uint32_t l = log_[a.v];
    return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElement FieldContext::pow(FieldElement a, uint64_t k) const {
    if (a.v == 0) return k == 0 ? one() : zero();
    uint64_t l = (uint64_t(log_[a.v]) * (k % (q_ - 1))) % (q_ - 1);
    return {exp_[l]};
}

uint32_t FieldContext::log(FieldElement x) const {
    if (x.v == 0) fail(ErrorKind::ZeroArgument, "log of zero");
    return log_[x.v];
}

FieldElement FieldContext::exp(uint64_t l) const {
    return {exp_[l % (q_ - 1)]};
}

int FieldContext::phi(FieldElement x) const {
    if (x.v == 0) fail(ErrorKind::ZeroArgument, "phi of zero");
    return int(log_[x.v] & 1);
}

std::optional<FieldElement> FieldContext::sqrt(FieldElement x) const {
    if (x.v == 0) return zero();
    uint32_t l = log_[x.v];
    if (l & 1) return std::nullopt;
    // l/2 < (q-1)/2, so this root is the canonical one.
    return FieldElement{exp_[l / 2]};
}

std::string FieldContext::to_string(FieldElement x) const {
    if (spec_.m == 1) return std::to_string(x.v);
    auto c = coeffs(x);
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

FieldElement FieldContext::parse(const std::string& s) const {
    std::vector<uint32_t> c;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t pos = 0;
        unsigned long val = 0;
        try {
            val = std::stoul(part, &pos);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "bad element string '" + s + "'");
        }
        if (pos != part.size())
            fail(ErrorKind::ParseError, "bad element string '" + s + "'");
        c.push_back(uint32_t(val));
    }
    if (spec_.m == 1) {
        if (c.size() != 1 || c[0] >= spec_.p)
            fail(ErrorKind::ParseError, "bad residue '" + s + "'");
        return {c[0]};
    }
    if (c.size() != spec_.m)
        fail(ErrorKind::ParseError,
             "expected " + std::to_string(spec_.m) + " coefficients in '" + s + "'");
    for (uint32_t d : c)
        if (d >= spec_.p) fail(ErrorKind::ParseError, "coefficient out of range in '" + s + "'");
    return from_coeffs(c);
}

bool FieldContext::same_spec(const FieldContext& other) const {
    return spec_.p == other.spec_.p && spec_.m == other.spec_.m &&
           spec_.modulus == other.spec_.modulus && theta_ == other.theta_;
}

}  // namespace cycodes
