#include "hullforge/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace hullforge {

namespace {

constexpr uint32_t kMaxQ = 1024;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense coefficient vectors over Z_p, ascending degree, used only during
// field construction (irreducibility checks, modulus search).
using ZpPoly = std::vector<int>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic-normalized on the fly
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, int p) {
    zp_trim(a);
    int db = static_cast<int>(b.size()) - 1;
    // inverse of leading coefficient of b
    int lead = b[db], lead_inv = 0;
    for (int t = 1; t < p; ++t)
        if (lead * t % p == 1) lead_inv = t;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        int c = a[da] * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            int& ai = a[da - db + i];
            ai = ((ai - c * b[i]) % p + p) % p;
        }
        zp_trim(a);
    }
    return a;
}

bool zp_irreducible(const ZpPoly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            ZpPoly g(d + 1, 0);
            long t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (zp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest (coefficients compared ascending-degree) monic
// irreducible of degree m over GF(p).
ZpPoly default_modulus(int p, int m) {
    if (m == 1) return {0, 1};  // x
    long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        // digit order: c0 is the most significant comparison key
        ZpPoly f(m + 1, 0);
        long t = idx;
        for (int i = m - 1; i >= 0; --i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (zp_irreducible(f, p)) return f;
    }
    throw InvalidField("no irreducible modulus found");  // unreachable
}

std::mutex registry_mutex;
std::map<std::pair<std::pair<int, int>, std::vector<int>>, std::unique_ptr<Field>>& registry() {
    static std::map<std::pair<std::pair<int, int>, std::vector<int>>, std::unique_ptr<Field>> r;
    return r;
}

}  // namespace

const Field& Field::get(int p, int m) { return get(p, m, default_modulus(p, m)); }

const Field& Field::get(int p, int m, const std::vector<int>& modulus) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = std::make_pair(std::make_pair(p, m), modulus);
    auto& r = registry();
    auto it = r.find(key);
    if (it == r.end()) it = r.emplace(key, std::unique_ptr<Field>(new Field(p, m, modulus))).first;
    return *it->second;
}

Field::Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw InvalidField("characteristic must be prime");
    if (m < 1) throw InvalidField("extension degree must be >= 1");
    uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= static_cast<uint64_t>(p);
        if (q > kMaxQ) throw InvalidField("field order exceeds 1024");
    }
    q_ = static_cast<uint32_t>(q);
    if (modulus_.size() != static_cast<size_t>(m + 1) || modulus_[m] != 1)
        throw InvalidField("modulus must be monic of degree m");
    for (int c : modulus_)
        if (c < 0 || c >= p) throw InvalidField("modulus coefficient out of range");
    if (!zp_irreducible(modulus_, p)) throw InvalidField("modulus is reducible");

    // multiplicative log/exp tables through the smallest-rep generator
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    for (uint32_t g = 1; g < q_; ++g) {
        uint32_t x = 1, ord = 0;
        do {
            x = mul_slow(x, g);
            ++ord;
        } while (x != 1);
        if (ord == q_ - 1) {
            gen_ = g;
            break;
        }
    }
    uint32_t x = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_slow(x, gen_);
    }
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
    // digits of a and b base p, schoolbook product, reduce mod modulus
    std::vector<int> da(m_), db(m_), prod(2 * m_ - 1, 0);
    uint32_t t = a;
    for (int i = 0; i < m_; ++i) {
        da[i] = static_cast<int>(t % p_);
        t /= p_;
    }
    t = b;
    for (int i = 0; i < m_; ++i) {
        db[i] = static_cast<int>(t % p_);
        t /= p_;
    }
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m_; ++i) prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    uint32_t r = 0;
    for (int i = m_ - 1; i >= 0; --i) r = r * p_ + prod[i];
    return r;
}

uint32_t Field::q0() const {
    if (!has_hermitian()) throw NoHermitianStructure("field has odd extension degree, no conjugation");
    uint32_t r = 1;
    for (int i = 0; i < m_ / 2; ++i) r *= p_;
    return r;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    uint32_t r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t Field::neg(uint32_t a) const {
    uint32_t r = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        r += mult * ((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero();
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t Field::div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (e == 0) return 1;  // including 0^0 = 1
    if (a == 0) return 0;
    return exp_[static_cast<uint32_t>((static_cast<uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

uint32_t Field::conj(uint32_t a) const { return pow(a, q0()); }

std::optional<uint32_t> Field::sqrt(uint32_t a) const {
    if (p_ == 2) return pow(a, q_ / 2);  // squaring is a bijection
    for (uint32_t r = 0; r < q_; ++r)
        if (mul(r, r) == a) return r;
    return std::nullopt;
}

uint32_t Field::order(uint32_t a) const {
    if (a == 0) throw DivisionByZero("order of zero is undefined");
    uint32_t x = a, ord = 1;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

}  // namespace hullforge
