#ifndef HULLFORGE_FIELD_HPP
#define HULLFORGE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hullforge/error.hpp"

namespace hullforge {

class FieldElement;

/// Exact arithmetic in GF(p^m) for small prime powers (q <= 1024).
///
/// Elements are integers in [0, q) encoding the polynomial-basis coefficient
/// vector base p, least-significant digit = constant coefficient. Fields are
/// interned: Field::get returns a reference with program lifetime, so two
/// codes over "the same" field share one Field object and element mixing is
/// detectable by pointer comparison.
class Field {
   public:
    /// Field with the default modulus: the lexicographically smallest monic
    /// irreducible of degree m over GF(p), coefficients compared from the
    /// constant term up. Deterministic across runs and platforms.
    static const Field& get(int p, int m);

    /// Field with an explicit monic irreducible modulus, coefficients
    /// ascending, size m+1. Throws InvalidField if reducible or non-monic.
    static const Field& get(int p, int m, const std::vector<int>& modulus);

    int p() const { return p_; }
    int m() const { return m_; }
    uint32_t q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    /// True when m is even, so the field carries the Hermitian structure
    /// GF(q0^2) with q0 = p^(m/2).
    bool has_hermitian() const { return m_ % 2 == 0; }
    /// Subfield order q0 = sqrt(q). Throws NoHermitianStructure for odd m.
    uint32_t q0() const;

    // Arithmetic on integer reps. All exact, all total except div/inv by 0.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const;
    /// Repeated-squaring a^e with the convention 0^0 = 1.
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// The conjugation x -> x^q0 of the Hermitian inner product.
    uint32_t conj(uint32_t a) const;
    /// Square root: unique a^(q/2) in characteristic 2; exhaustive scan in
    /// odd characteristic (smallest rep wins), nullopt for non-squares.
    std::optional<uint32_t> sqrt(uint32_t a) const;

    /// Multiplicative order of a nonzero element.
    uint32_t order(uint32_t a) const;
    /// Smallest-rep generator of the multiplicative group.
    uint32_t generator() const { return gen_; }

    FieldElement element(uint32_t rep) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool operator==(const Field& o) const { return this == &o; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    Field(int p, int m, std::vector<int> modulus);

    uint32_t mul_slow(uint32_t a, uint32_t b) const;  // polynomial mult mod modulus

    int p_, m_;
    uint32_t q_;
    std::vector<int> modulus_;
    uint32_t gen_ = 0;
    std::vector<uint32_t> exp_;  // exp_[i] = gen^i, i in [0, q-1)
    std::vector<uint32_t> log_;  // log_[a] for a != 0
};

/// A field element bound to its Field. Immutable value; operations between
/// elements of distinct fields throw FieldMismatch.
class FieldElement {
   public:
    FieldElement(const Field& f, uint32_t rep) : f_(&f), rep_(rep) {
        if (rep >= f.q()) throw IndexOutOfRange("element rep out of range");
    }

    uint32_t rep() const { return rep_; }
    const Field& field() const { return *f_; }
    bool is_zero() const { return rep_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {*f_, f_->add(rep_, same(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {*f_, f_->sub(rep_, same(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {*f_, f_->mul(rep_, same(o))}; }
    FieldElement operator/(const FieldElement& o) const { return {*f_, f_->div(rep_, same(o))}; }
    FieldElement operator-() const { return {*f_, f_->neg(rep_)}; }
    FieldElement pow(uint64_t e) const { return {*f_, f_->pow(rep_, e)}; }
    FieldElement conj() const { return {*f_, f_->conj(rep_)}; }
    FieldElement inv() const { return {*f_, f_->inv(rep_)}; }

    bool operator==(const FieldElement& o) const { return f_ == o.f_ && rep_ == o.rep_; }

   private:
    uint32_t same(const FieldElement& o) const {
        if (f_ != o.f_) throw FieldMismatch();
        return o.rep_;
    }
    const Field* f_;
    uint32_t rep_;
};

inline FieldElement Field::element(uint32_t rep) const { return FieldElement(*this, rep); }
inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }

}  // namespace hullforge

#endif
