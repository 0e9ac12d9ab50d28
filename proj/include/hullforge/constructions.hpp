#ifndef HULLFORGE_CONSTRUCTIONS_HPP
#define HULLFORGE_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hullforge/code.hpp"
#include "hullforge/poly.hpp"

namespace hullforge {

// ---------------------------------------------------------------------------
// cyclic / constacyclic / BCH machinery

/// Orbit of i under multiplication by q modulo n, sorted.
std::set<uint64_t> cyclotomic_coset(uint64_t q, uint64_t n, uint64_t i);

/// Minimal polynomial over GF(q) of beta^i, where beta is the canonical
/// primitive n-th root of unity in the splitting field GF(q^m'). Monic,
/// degree = coset size, coefficients verified to lie in GF(q).
Poly minimal_poly(const Field& f, uint64_t n, uint64_t i);

/// BCH generator: lcm of the minimal polynomials of beta^b .. beta^{b+delta-2}
/// (exponents mod n). Divides x^n - 1; the cyclic code it generates has
/// distance >= delta.
Poly bch_generator(const Field& f, uint64_t n, uint64_t delta, uint64_t b);

/// The [n, n - deg g] lambda-constacyclic code with the shifted-generator
/// matrix. lambda = 1 is cyclic, lambda = -1 negacyclic. g must divide
/// x^n - lambda.
LinearCode constacyclic_code(const Poly& g, uint32_t lambda, size_t n);

/// Generator of the dual: x^k·h(1/x)/h(0) with h = (x^n - lambda)/g. The
/// lambda^{-1}-constacyclic code it generates equals the dual.
Poly constacyclic_dual_generator(const Poly& g, uint32_t lambda, size_t n);

struct ConstacyclicTransform {
    LinearCode code;
    Poly generator;
    uint32_t lambda;              // twist of the resulting code
    std::vector<uint32_t> witness_v;
};

/// x -> -x on a cyclic code over odd characteristic: the code generated by
/// g(-x), negacyclic for odd n, cyclic for even n. witness_v = (1,-1,1,...).
ConstacyclicTransform negate_variable(const Poly& g, size_t n);

/// x -> eta·x with eta^n = ±1: v = (1, eta, ..., eta^{n-1}). Applied to a
/// lambda_in-constacyclic code (default cyclic), the result is the
/// (lambda_in·eta^n)-constacyclic code generated by the monic normalization
/// of g(eta·x).
ConstacyclicTransform eta_transform(const Poly& g, size_t n, uint32_t eta, uint32_t lambda_in = 1);

// ---------------------------------------------------------------------------
// hull-dimension transforms

struct ScaledCodeWitness {
    LinearCode code;
    std::vector<uint32_t> witness_v;
    std::vector<size_t> perm;     // column permutation applied before scaling
    uint32_t lambda;
};

/// Self-dual [2n, n] code -> equivalent code with hull dimension exactly h,
/// 0 <= h < n. The standard-form permutation is part of the witness.
ScaledCodeWitness selfdual_to_hull(const LinearCode& c, size_t h, Kind kind);

enum class DisturbCase { w2_zero, w1_zero, generic };

struct LambdaDisturbResult {
    LinearCode code;
    uint32_t lambda;
    size_t position;
    DisturbCase which;
    uint32_t w1, w2, c;           // decomposition data, for verification
};

/// LCD code over GF(2^s), s >= 2, with d >= 2, d⊥ >= 2 and LCD shortenings
/// at `position` -> the lambda-disturbed code with hull dimension exactly 1.
LambdaDisturbResult lambda_disturb(const LinearCode& c, size_t position);

/// Convenience search: first position 0..n-1 whose shortening hypotheses hold.
LambdaDisturbResult lambda_disturb_search(const LinearCode& c);

// ---------------------------------------------------------------------------
// GRS / twisted RS families

struct GrsSpec {
    const Field* field;
    std::vector<uint32_t> points;       // pairwise distinct
    std::vector<uint32_t> multipliers;  // all nonzero, same length
    size_t k;
};

struct TrsSpec {
    const Field* field;
    std::vector<uint32_t> subgroup;     // a multiplicative subgroup of F*
    uint32_t eta;                       // nonzero twist
    size_t k;
};

/// Evaluation code with generator rows (v_j · a_j^i), i = 0..k-1. MDS.
LinearCode grs(const GrsSpec& spec);

/// Plain RS(n, k): all multipliers 1.
LinearCode rs(const Field& f, const std::vector<uint32_t>& points, size_t k);

/// The full-weight kernel vector of the (n-1)×n Vandermonde system,
/// normalized to first coordinate 1. Satisfies RS(n,k)^⊥ = x·RS(n,n-k).
std::vector<uint32_t> rs_dual_vector(const Field& f, const std::vector<uint32_t>& points);

struct HullCodeWitness {
    LinearCode code;
    std::vector<uint32_t> witness_v;
};

/// GRS code over GF(2^s) with hull dimension exactly l, nonzero distinct
/// points, 0 <= l <= min(k, n-k).
HullCodeWitness grs_with_hull(const Field& f, const std::vector<uint32_t>& points, size_t k, size_t l);

/// Twisted RS code: evaluation of span{1 + eta·x^k, x, ..., x^{k-1}} at the
/// subgroup. MDS when eta is outside the subgroup.
LinearCode trs(const TrsSpec& spec);

/// The companion code C_{alpha, -eta, n-k} built from the dual basis, plus
/// the Vandermonde vector x with x·(that code) = dual(trs(spec)).
struct TrsDual {
    LinearCode companion;
    std::vector<uint32_t> x;
};
TrsDual trs_dual(const TrsSpec& spec);

/// Twisted RS code over GF(2^s), n | q-1, k <= n/2, with hull dimension
/// exactly l for 1 <= l <= k-2.
HullCodeWitness trs_with_hull(const TrsSpec& spec, size_t l);

/// The multiplicative subgroup of order n (requires n | q-1).
std::vector<uint32_t> multiplicative_subgroup(const Field& f, size_t n);

}  // namespace hullforge

#endif
