#ifndef HULLFORGE_EAQEC_HPP
#define HULLFORGE_EAQEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullforge/code.hpp"

namespace hullforge {

/// Parameters of an entanglement-assisted quantum code [[n, k, d, c]]_q:
/// length n, dimension k, distance d, c consumed maximally entangled pairs.
struct EaqecParams {
    size_t n = 0;
    size_t k = 0;
    size_t d = 1;
    size_t c = 0;
    uint32_t q = 2;
    bool d_is_lower_bound = false;  // d printed as ">= d" (almost-MDS family)

    bool operator==(const EaqecParams&) const = default;
};

enum class SingletonClass { mds, almost_mds, other, bound_violated };

/// CSS derivation from a classical [n, k, d]_q code with hull dimension h
/// (dual distance d_dual): the pair [[n, k-h, d, n-k-h]]_q and
/// [[n, n-k-h, d_dual, k-h]]_q. `q` is the EAQEC base field order (for a
/// Hermitian input over GF(q0^2) pass q0).
std::pair<EaqecParams, EaqecParams> css_from_hull(size_t n, size_t k, size_t d, size_t d_dual,
                                                  size_t h, uint32_t q);

/// Same derivation from an actual code: h, d and d_dual are computed by the
/// hull oracle and codeword enumeration. For the Hermitian kind the base
/// field order of the outputs is q0.
std::pair<EaqecParams, EaqecParams> css_from_hull(const LinearCode& c, Kind kind);

/// Quantum Singleton cap on k: n + c + 2 - 2d, defined only when
/// d <= (n+2)/2; nullopt outside the bound's stated domain.
std::optional<size_t> singleton_k_max(const EaqecParams& p);

/// MDS iff 2d + k = n + c + 2; almost MDS iff 2d + k = n + c;
/// bound_violated iff 2d + k > n + c + 2 (inconsistent input).
SingletonClass classify(const EaqecParams& p);

const char* to_string(SingletonClass c);

/// One Hermitian self-dual input row for the table emitter.
struct TableRow {
    size_t n;
    size_t k;  // must equal n/2
    size_t d;
    uint32_t q0;
};

/// Emits one line per (row, h) pair — or one symbolic line per row — in the
/// format `[[n, k, d, c]]_q<TAB>singleton=<v>`, LF-terminated. In symbolic
/// mode h stays a formal symbol: `[[6, 3-h, 4, 3-h]]_2<TAB>singleton=3-h`.
std::string table_emit(const std::vector<TableRow>& rows, bool symbolic);

enum class Family { cor72, cor73 };

/// Closed-form families: cor72 gives the MDS code [[n, n-k-h, k+1, k-h]]_q
/// with q = 2^s >= 4, k <= n/2, n <= q-1, 0 <= h <= k; cor73 gives the
/// almost-MDS code [[n, n/2-h, >=n/2, n/2-h]]_{2^s} with n even,
/// 4 <= n <= 2^s + floor(2^{s/2+1}) - 2, 0 <= h <= n/2 (k is ignored).
EaqecParams family_params(Family kind, size_t n, size_t k, size_t h, unsigned s);

}  // namespace hullforge

#endif
