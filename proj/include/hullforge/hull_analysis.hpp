#ifndef HULLFORGE_HULL_ANALYSIS_HPP
#define HULLFORGE_HULL_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hullforge/code.hpp"

namespace hullforge {

/// Result of a maximal-hull search over full-weight scaling vectors.
struct MaxHullReport {
    size_t best_h = 0;
    std::vector<uint32_t> witness_v;  // hull(scale(C, witness_v)) has dim best_h
    bool exhaustive = false;
    uint64_t candidates_tried = 0;
};

/// Exact maximum of dim hull(v·C) over all full-weight v. The search space is
/// canonicalized: the first coordinate is fixed to 1 (a global scalar leaves
/// v·C unchanged) and every other coordinate ranges over one representative
/// per square class (Euclidean) or norm class (Hermitian), since the hull of
/// v·C depends only on v² resp. v^{q0+1} coordinate-wise. At most 10^6
/// candidates are accepted; beyond that SearchSpaceTooLarge is thrown with
/// the count. Honors HULLFORGE_THREADS; the merged result is deterministic
/// (largest h, then lexicographically smallest witness).
MaxHullReport max_hull_exhaustive(const LinearCode& c, Kind kind);

/// Randomized lower bound on the maximal hull dimension. Trial 1 is always
/// the all-ones vector; later trials draw coordinates from a splitmix64
/// stream seeded with `seed` (state += 0x9E3779B97F4A7C15; z = state;
/// z = (z ^ z>>30) * 0xBF58476D1CE4E5B9; z = (z ^ z>>27) * 0x94D049BB133111EB;
/// output z ^ z>>31; coordinate = output mod (q-1) + 1). Deterministic for a
/// given (trials, seed). Ties keep the lexicographically smallest witness.
MaxHullReport max_hull_randomized(const LinearCode& c, Kind kind, uint64_t trials, uint64_t seed);

/// Schur-square lower bound: if the dual of C1 ⋆ C1 contains a full-weight
/// word w (Euclidean, characteristic 2) — or, for the Hermitian kind, the
/// dual of C1 ⋆ conj(C1) contains a full-weight word with all coordinates in
/// the norm subfield — then dim C1 is a certified lower bound on the maximal
/// hull dimension of C. The witness v with v² = w (resp. v^{q0+1} = w) is
/// constructed and the bound re-verified through the hull oracle. Returns
/// nullopt when no such word exists or the codeword enumeration exceeds the
/// 2^24 cutoff (no conclusion either way).
std::optional<size_t> schur_lower_bound(const LinearCode& c, const LinearCode& c1,
                                        Kind kind = Kind::euclidean);

/// Maximal Euclidean hull dimension of a one-dimensional code over GF(q),
/// q >= 3. A weight-1 generator always gives 0. For weight w >= 2 the answer
/// is 1 exactly when 0 is a sum of w nonzero squares of GF(q) — always true
/// in even characteristic, but e.g. false over GF(3) unless 3 | w, and false
/// over GF(7) for w = 2. Agrees with max_hull_exhaustive by construction.
size_t dim1_max_hull(const LinearCode& c);

}  // namespace hullforge

#endif
