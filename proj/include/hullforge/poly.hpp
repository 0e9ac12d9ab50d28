#ifndef HULLFORGE_POLY_HPP
#define HULLFORGE_POLY_HPP

#include <cstdint>
#include <vector>

#include "hullforge/field.hpp"

namespace hullforge {

/// Dense univariate polynomial over one finite field, coefficients ascending,
/// canonical (no trailing zeros). degree() of the zero polynomial is -1.
class Poly {
   public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<uint32_t> coeffs);

    static Poly constant(const Field& f, uint32_t c);
    static Poly monomial(const Field& f, size_t deg, uint32_t c = 1);
    /// x^n - lambda.
    static Poly x_pow_minus(const Field& f, size_t n, uint32_t lambda);

    const Field& field() const { return *f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    uint32_t leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const;
    Poly operator%(const Poly& d) const;
    bool divides(const Poly& other) const;

    uint32_t eval(uint32_t x) const;
    Poly monic() const;
    /// g(eta·x): coefficient i multiplied by eta^i.
    Poly substitute_scaled(uint32_t eta) const;

    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }

   private:
    void trim();
    const Field* f_;
    std::vector<uint32_t> c_;
};

Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

}  // namespace hullforge

#endif
