#include "hullforge/hull_analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

namespace hullforge {

namespace {

constexpr uint64_t kMaxCandidates = 1000000;

uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

size_t thread_count() {
    if (const char* env = std::getenv("HULLFORGE_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<size_t>(v);
    }
    return 1;
}

// Smallest representative per square class (Euclidean) or norm class
// (Hermitian) among the nonzero elements, ascending.
std::vector<uint32_t> class_reps(const Field& f, Kind kind) {
    if (kind == Kind::hermitian && !f.has_hermitian()) throw NoHermitianStructure();
    std::set<uint32_t> seen;
    std::vector<uint32_t> reps;
    for (uint32_t t = 1; t < f.q(); ++t) {
        uint32_t key = kind == Kind::euclidean ? f.mul(t, t) : f.pow(t, f.q0() + 1);
        if (seen.insert(key).second) reps.push_back(t);
    }
    return reps;
}

void consider(const LinearCode& c, Kind kind, const std::vector<uint32_t>& v, MaxHullReport& best) {
    size_t h = c.scale(v).hull_dim(kind);
    if (best.witness_v.empty() || h > best.best_h || (h == best.best_h && v < best.witness_v)) {
        best.best_h = h;
        best.witness_v = v;
    }
}

}  // namespace

MaxHullReport max_hull_exhaustive(const LinearCode& c, Kind kind) {
    const Field& f = c.field();
    size_t n = c.n();
    std::vector<uint32_t> reps = class_reps(f, kind);
    uint64_t total = 1;
    for (size_t i = 1; i < n; ++i) {
        total *= reps.size();
        if (total > kMaxCandidates)
            throw SearchSpaceTooLarge("candidate count " + std::to_string(reps.size()) + "^" +
                                      std::to_string(n - 1) + " exceeds " + std::to_string(kMaxCandidates));
    }

    // index -> scaling vector, coordinate 1 most significant so that scan
    // order is lexicographic order of the witnesses
    auto decode = [&](uint64_t idx) {
        std::vector<uint32_t> v(n, 1);
        for (size_t i = n; i-- > 1;) {
            v[i] = reps[idx % reps.size()];
            idx /= reps.size();
        }
        return v;
    };

    size_t nthreads = std::min<size_t>(thread_count(), static_cast<size_t>(total));
    std::vector<MaxHullReport> partial(nthreads);
    auto run = [&](size_t t) {
        for (uint64_t idx = t; idx < total; idx += nthreads) consider(c, kind, decode(idx), partial[t]);
    };
    if (nthreads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    MaxHullReport best = partial[0];
    for (size_t t = 1; t < nthreads; ++t) {
        const MaxHullReport& p = partial[t];
        if (p.witness_v.empty()) continue;
        if (best.witness_v.empty() || p.best_h > best.best_h ||
            (p.best_h == best.best_h && p.witness_v < best.witness_v)) {
            best.best_h = p.best_h;
            best.witness_v = p.witness_v;
        }
    }
    best.exhaustive = true;
    best.candidates_tried = total;
    return best;
}

MaxHullReport max_hull_randomized(const LinearCode& c, Kind kind, uint64_t trials, uint64_t seed) {
    if (trials < 1) throw PreconditionFailed("trials must be >= 1");
    const Field& f = c.field();
    size_t n = c.n();
    MaxHullReport best;
    consider(c, kind, std::vector<uint32_t>(n, 1), best);
    uint64_t state = seed;
    for (uint64_t t = 1; t < trials; ++t) {
        std::vector<uint32_t> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = static_cast<uint32_t>(splitmix64(state) % (f.q() - 1)) + 1;
        consider(c, kind, v, best);
    }
    best.exhaustive = false;
    best.candidates_tried = trials;
    return best;
}

std::optional<size_t> schur_lower_bound(const LinearCode& c, const LinearCode& c1, Kind kind) {
    const Field& f = c.field();
    if (&f != &c1.field() || c.n() != c1.n() || !c.contains(c1))
        throw NotASubcode("second argument is not a subcode of the first");
    if (kind == Kind::euclidean && f.p() != 2)
        throw EvenCharacteristicRequired("the Euclidean Schur bound needs characteristic 2");
    if (kind == Kind::hermitian && !f.has_hermitian()) throw NoHermitianStructure();
    size_t k1 = c1.k();
    if (k1 == 0) return 0;

    LinearCode square = kind == Kind::euclidean
                            ? schur_product(c1, c1)
                            : schur_product(c1, LinearCode::from_generator(c1.generator().conjugate()));
    LinearCode d = square.dual();

    std::optional<std::vector<uint32_t>> w;
    try {
        if (kind == Kind::euclidean) {
            w = d.full_weight_codeword();
        } else {
            // first full-weight word whose coordinates all lie in the norm
            // subfield GF(q0), so each is a norm v^{q0+1}
            d.for_each_codeword([&](const std::vector<uint32_t>& word, const std::vector<uint32_t>&) {
                for (uint32_t x : word)
                    if (x == 0 || f.conj(x) != x) return true;
                w = word;
                return false;
            });
        }
    } catch (const TooLargeToEnumerate&) {
        return std::nullopt;
    }
    if (!w) return std::nullopt;

    std::vector<uint32_t> v(c.n());
    for (size_t i = 0; i < c.n(); ++i) {
        if (kind == Kind::euclidean) {
            v[i] = *f.sqrt((*w)[i]);
        } else {
            uint32_t found = 0;
            for (uint32_t t = 1; t < f.q(); ++t)
                if (f.pow(t, f.q0() + 1) == (*w)[i]) {
                    found = t;
                    break;
                }
            if (found == 0) throw TheoremCaseViolation("coordinate is not a norm");
            v[i] = found;
        }
    }
    if (c.scale(v).hull_dim(kind) < k1)
        throw TheoremCaseViolation("Schur witness does not certify the claimed hull bound");
    return k1;
}

size_t dim1_max_hull(const LinearCode& c) {
    if (c.k() != 1) throw PreconditionFailed("requires a one-dimensional code");
    const Field& f = c.field();
    if (f.q() < 3) throw PreconditionFailed("requires q >= 3");
    size_t wt = 0;
    for (uint32_t x : c.generator().row(0))
        if (x != 0) ++wt;
    // For a generator g of weight w, the hull of v.C is nonzero exactly when
    // sum v_i^2 g_i^2 = 0 over the support. Each term ranges over all nonzero
    // squares independently, so the answer is 1 iff 0 is a sum of w nonzero
    // squares. (For w >= 2 this can fail: over GF(3) the only nonzero square
    // is 1, so it needs 3 | w; over GF(7) no two nonzero squares sum to 0.)
    std::set<uint32_t> squares;
    for (uint32_t t = 1; t < f.q(); ++t) squares.insert(f.mul(t, t));
    std::set<uint32_t> sums = {0};
    for (size_t i = 0; i < wt; ++i) {
        std::set<uint32_t> next;
        for (uint32_t x : sums)
            for (uint32_t s : squares) next.insert(f.add(x, s));
        sums = std::move(next);
    }
    return wt >= 1 && sums.count(0) ? 1 : 0;
}

}  // namespace hullforge
