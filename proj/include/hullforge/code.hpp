#ifndef HULLFORGE_CODE_HPP
#define HULLFORGE_CODE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hullforge/matrix.hpp"

namespace hullforge {

/// Inner product selector. Hermitian requires a field of square order.
enum class Kind { euclidean, hermitian };

enum class Predicate {
    lcd,
    self_dual,
    self_orthogonal,
    hermitian_lcd,
    hermitian_self_dual,
    hermitian_self_orthogonal,
};

/// Exact weight distribution A_0..A_n of a code with q^k codewords.
struct WeightDistribution {
    std::vector<uint64_t> counts;
    size_t length() const { return counts.size() - 1; }
};

struct StandardForm {
    std::vector<size_t> perm;  // column permutation moving pivots first
    GFMatrix p;                // the non-identity block of (I_k | P)
};

/// Codeword-enumeration cutoff: operations that walk all q^k messages refuse
/// beyond this bound instead of silently approximating.
constexpr double kEnumerationLimit = 16777216.0;  // 2^24

/// A linear [n, k] code: a field, a length and a canonical RREF generator.
/// Code equality is equality of the canonical generator.
class LinearCode {
   public:
    /// Canonicalizes via RREF; dependent rows are dropped.
    static LinearCode from_generator(const GFMatrix& rows);
    static LinearCode zero_code(const Field& f, size_t n);
    static LinearCode full_space(const Field& f, size_t n);

    const Field& field() const { return *f_; }
    size_t n() const { return n_; }
    size_t k() const { return gen_.rows(); }
    const GFMatrix& generator() const { return gen_; }

    LinearCode dual() const;
    LinearCode hermitian_dual() const;
    LinearCode dual(Kind kind) const;

    /// The hull C ∩ C^⊥ (or C ∩ C^⊥h) and its dimension. Cross-checked
    /// against k - rank(G·G^T) (resp. G·conj(G)^T) internally.
    std::pair<LinearCode, size_t> hull(Kind kind) const;
    size_t hull_dim(Kind kind) const;

    /// Exact minimum nonzero weight by message-space enumeration.
    /// Zero code has no nonzero word; returns 0 in that case.
    size_t distance() const;
    size_t dual_distance() const;

    WeightDistribution weight_distribution() const;

    bool predicate(Predicate p) const;

    /// v·C for a full-weight vector v.
    LinearCode scale(const std::vector<uint32_t>& v) const;
    /// Codewords with zero i-th coordinate, coordinate deleted (length n-1).
    LinearCode shorten(size_t i) const;
    /// First full-weight codeword in lexicographic message order, if any.
    std::optional<std::vector<uint32_t>> full_weight_codeword() const;
    /// Column permutation realizing the (I_k | P) standard form. For
    /// (Hermitian) self-dual input the identity P·P^T = -I is verified.
    StandardForm standard_form() const;

    bool contains(const LinearCode& sub) const;
    bool contains_word(const std::vector<uint32_t>& v) const;

    bool operator==(const LinearCode& o) const { return f_ == o.f_ && n_ == o.n_ && gen_ == o.gen_; }

    /// Visits every codeword (including zero) in lexicographic message
    /// order; the callback returns false to stop early. Returns false when
    /// stopped. Throws TooLargeToEnumerate past the q^k cutoff.
    template <typename Fn>
    bool for_each_codeword(Fn&& fn) const;

    static void check_enumerable(const Field& f, size_t k);

   private:
    LinearCode(const Field& f, size_t n, GFMatrix gen) : f_(&f), n_(n), gen_(std::move(gen)) {}

    const Field* f_;
    size_t n_;
    GFMatrix gen_;
};

/// Span of all componentwise products of codeword pairs (basis-row products
/// suffice by bilinearity). schur_product(c, c) is the Schur square.
LinearCode schur_product(const LinearCode& c1, const LinearCode& c2);

/// The MacWilliams identity a self-dual code's weight distribution must
/// satisfy, evaluated in exact big-integer arithmetic for every 0 <= v <= 2n.
/// A false result certifies that no equivalent code is self-dual.
bool macwilliams_selfdual_check(const WeightDistribution& w, uint32_t q);

template <typename Fn>
bool LinearCode::for_each_codeword(Fn&& fn) const {
    check_enumerable(*f_, k());
    const size_t kk = k();
    std::vector<std::vector<uint32_t>> acc(kk + 1, std::vector<uint32_t>(n_, 0));
    // odometer over message digits, digit 0 most significant
    std::vector<uint32_t> digits(kk, 0);
    size_t level = 0;
    while (true) {
        if (level == kk) {
            if (!fn(static_cast<const std::vector<uint32_t>&>(acc[kk]), static_cast<const std::vector<uint32_t>&>(digits)))
                return false;
            // backtrack to the deepest level with an unexhausted digit
            while (level > 0 && digits[level - 1] + 1 == f_->q()) {
                digits[level - 1] = 0;
                --level;
            }
            if (level == 0) return true;
            ++digits[level - 1];
            --level;  // recompute from the digit that changed
        }
        // acc[level+1] = acc[level] + digits[level]*row(level)
        const size_t i = level;
        auto& out = acc[i + 1];
        const auto& in = acc[i];
        const uint32_t c = digits[i];
        for (size_t j = 0; j < n_; ++j) out[j] = f_->add(in[j], f_->mul(c, gen_.at(i, j)));
        ++level;
    }
}

}  // namespace hullforge

#endif
