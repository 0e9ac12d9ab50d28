#include "hullforge/eaqec.hpp"

#include <cmath>
#include <sstream>

namespace hullforge {

std::pair<EaqecParams, EaqecParams> css_from_hull(size_t n, size_t k, size_t d, size_t d_dual,
                                                  size_t h, uint32_t q) {
    if (h > k || h > n - k) throw PreconditionFailed("h must satisfy 0 <= h <= min(k, n-k)");
    EaqecParams first{n, k - h, d, n - k - h, q, false};
    EaqecParams second{n, n - k - h, d_dual, k - h, q, false};
    return {first, second};
}

std::pair<EaqecParams, EaqecParams> css_from_hull(const LinearCode& c, Kind kind) {
    size_t h = c.hull_dim(kind);
    size_t d = c.distance();
    size_t d_dual = c.dual(kind).distance();
    uint32_t q = kind == Kind::euclidean ? c.field().q() : c.field().q0();
    return css_from_hull(c.n(), c.k(), d, d_dual, h, q);
}

std::optional<size_t> singleton_k_max(const EaqecParams& p) {
    if (2 * p.d > p.n + 2) return std::nullopt;
    return p.n + p.c + 2 - 2 * p.d;
}

SingletonClass classify(const EaqecParams& p) {
    size_t lhs = 2 * p.d + p.k, rhs = p.n + p.c;
    if (lhs > rhs + 2) return SingletonClass::bound_violated;
    if (lhs == rhs + 2) return SingletonClass::mds;
    if (lhs == rhs) return SingletonClass::almost_mds;
    return SingletonClass::other;
}

const char* to_string(SingletonClass c) {
    switch (c) {
        case SingletonClass::mds: return "MDS";
        case SingletonClass::almost_mds: return "almostMDS";
        case SingletonClass::other: return "other";
        case SingletonClass::bound_violated: return "boundViolated";
    }
    return "?";
}

std::string table_emit(const std::vector<TableRow>& rows, bool symbolic) {
    std::ostringstream out;
    for (const TableRow& r : rows) {
        if (r.n != 2 * r.k) throw PreconditionFailed("table rows must be self-dual: n = 2k");
        if (symbolic) {
            out << "[[" << r.n << ", " << r.k << "-h, " << r.d << ", " << r.k << "-h]]_" << r.q0
                << '\t' << "singleton=";
            if (2 * r.d > r.n + 2)
                out << "n/a";
            else
                out << r.n + r.k + 2 - 2 * r.d << "-h";
            out << '\n';
        } else {
            for (size_t h = 0; h <= r.k; ++h) {
                EaqecParams p = css_from_hull(r.n, r.k, r.d, r.d, h, r.q0).first;
                out << "[[" << p.n << ", " << p.k << ", " << p.d << ", " << p.c << "]]_" << p.q
                    << '\t' << "singleton=";
                auto s = singleton_k_max(p);
                if (s)
                    out << *s;
                else
                    out << "n/a";
                out << '\n';
            }
        }
    }
    return out.str();
}

EaqecParams family_params(Family kind, size_t n, size_t k, size_t h, unsigned s) {
    uint64_t q = 1ULL << s;
    if (kind == Family::cor72) {
        if (s < 2) throw PreconditionFailed("requires q = 2^s >= 4");
        if (2 * k > n) throw PreconditionFailed("requires k <= n/2");
        if (n > q - 1) throw PreconditionFailed("requires n <= q - 1");
        if (h > k) throw PreconditionFailed("requires 0 <= h <= k");
        return {n, n - k - h, k + 1, k - h, static_cast<uint32_t>(q), false};
    }
    if (n % 2 != 0) throw PreconditionFailed("requires even n");
    uint64_t cap = q + static_cast<uint64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(q)))) - 2;
    if (n < 4 || n > cap) throw PreconditionFailed("requires 4 <= n <= 2^s + floor(2^(s/2+1)) - 2");
    if (h > n / 2) throw PreconditionFailed("requires 0 <= h <= n/2");
    return {n, n / 2 - h, n / 2, n / 2 - h, static_cast<uint32_t>(q), true};
}

}  // namespace hullforge
