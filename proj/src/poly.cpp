#include "hullforge/poly.hpp"

namespace hullforge {

Poly::Poly(const Field& f, std::vector<uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (uint32_t c : c_)
        if (c >= f.q()) throw IndexOutOfRange("coefficient rep out of range");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& f, uint32_t c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, size_t deg, uint32_t c) {
    std::vector<uint32_t> v(deg + 1, 0);
    v[deg] = c;
    return Poly(f, std::move(v));
}

Poly Poly::x_pow_minus(const Field& f, size_t n, uint32_t lambda) {
    std::vector<uint32_t> v(n + 1, 0);
    v[0] = f.neg(lambda);
    v[n] = 1;
    return Poly(f, std::move(v));
}

uint32_t Poly::leading() const {
    if (is_zero()) throw DivisionByZero("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (f_ != o.f_) throw FieldMismatch();
    std::vector<uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    if (f_ != o.f_) throw FieldMismatch();
    std::vector<uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (f_ != o.f_) throw FieldMismatch();
    if (is_zero() || o.is_zero()) return Poly(*f_);
    std::vector<uint32_t> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = f_->add(v[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(*f_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (f_ != d.f_) throw FieldMismatch();
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<uint32_t> rem = c_, quot;
    int dd = d.degree();
    if (degree() >= dd) quot.assign(degree() - dd + 1, 0);
    uint32_t lead_inv = f_->inv(d.leading());
    for (int i = degree(); i >= dd; --i) {
        uint32_t c = f_->mul(rem[i], lead_inv);
        if (c != 0) {
            quot[i - dd] = c;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] = f_->sub(rem[i - dd + j], f_->mul(c, d.coeff(j)));
        }
    }
    return {Poly(*f_, std::move(quot)), Poly(*f_, std::move(rem))};
}

Poly Poly::operator/(const Poly& d) const { return divmod(d).first; }
Poly Poly::operator%(const Poly& d) const { return divmod(d).second; }

bool Poly::divides(const Poly& other) const { return other.divmod(*this).second.is_zero(); }

uint32_t Poly::eval(uint32_t x) const {
    uint32_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    uint32_t inv = f_->inv(leading());
    std::vector<uint32_t> v = c_;
    for (uint32_t& c : v) c = f_->mul(c, inv);
    return Poly(*f_, std::move(v));
}

Poly Poly::substitute_scaled(uint32_t eta) const {
    std::vector<uint32_t> v = c_;
    uint32_t power = 1;
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] = f_->mul(v[i], power);
        power = f_->mul(power, eta);
    }
    return Poly(*f_, std::move(v));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

}  // namespace hullforge
