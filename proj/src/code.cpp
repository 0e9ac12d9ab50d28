#include "hullforge/code.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace hullforge {

using boost::multiprecision::cpp_int;

void LinearCode::check_enumerable(const Field& f, size_t k) {
    double total = std::pow(static_cast<double>(f.q()), static_cast<double>(k));
    if (total > kEnumerationLimit)
        throw TooLargeToEnumerate("q^k = " + std::to_string(static_cast<unsigned long long>(total)) +
                                  " exceeds the enumeration cutoff 2^24");
}

LinearCode LinearCode::from_generator(const GFMatrix& rows) {
    if (rows.cols() == 0) throw EmptyLength("code length must be positive");
    return LinearCode(rows.field(), rows.cols(), rref(rows).r);
}

LinearCode LinearCode::zero_code(const Field& f, size_t n) {
    if (n == 0) throw EmptyLength("code length must be positive");
    return LinearCode(f, n, GFMatrix(f, 0, n));
}

LinearCode LinearCode::full_space(const Field& f, size_t n) {
    return from_generator(GFMatrix::identity(f, n));
}

LinearCode LinearCode::dual() const { return LinearCode(*f_, n_, kernel(gen_)); }

LinearCode LinearCode::hermitian_dual() const {
    if (!f_->has_hermitian()) throw NoHermitianStructure();
    // C^{⊥h} = (C^⊥)^{q0}: conjugate the dual basis coordinatewise
    return LinearCode(*f_, n_, rref(kernel(gen_).conjugate()).r);
}

LinearCode LinearCode::dual(Kind kind) const {
    return kind == Kind::euclidean ? dual() : hermitian_dual();
}

std::pair<LinearCode, size_t> LinearCode::hull(Kind kind) const {
    LinearCode d = dual(kind);
    GFMatrix basis = rowspace_intersection(gen_, d.gen_);
    size_t h = basis.rows();
    // independent cross-check: h = k - rank(G·G^T) (conjugated for Hermitian)
    GFMatrix gram = gen_ * (kind == Kind::euclidean ? gen_.transpose() : gen_.conjugate().transpose());
    if (h != k() - rank(gram))
        throw TheoremCaseViolation("hull dimension cross-check failed");
    return {LinearCode(*f_, n_, std::move(basis)), h};
}

size_t LinearCode::hull_dim(Kind kind) const { return hull(kind).second; }

size_t LinearCode::distance() const {
    size_t best = n_ + 1;
    for_each_codeword([&](const std::vector<uint32_t>& w, const std::vector<uint32_t>&) {
        size_t wt = 0;
        for (uint32_t x : w)
            if (x != 0) ++wt;
        if (wt != 0 && wt < best) best = wt;
        return true;
    });
    return best == n_ + 1 ? 0 : best;
}

size_t LinearCode::dual_distance() const { return dual().distance(); }

WeightDistribution LinearCode::weight_distribution() const {
    WeightDistribution w;
    w.counts.assign(n_ + 1, 0);
    for_each_codeword([&](const std::vector<uint32_t>& word, const std::vector<uint32_t>&) {
        size_t wt = 0;
        for (uint32_t x : word)
            if (x != 0) ++wt;
        ++w.counts[wt];
        return true;
    });
    return w;
}

bool LinearCode::predicate(Predicate p) const {
    switch (p) {
        case Predicate::lcd:
            return hull_dim(Kind::euclidean) == 0;
        case Predicate::self_dual:
            return *this == dual();
        case Predicate::self_orthogonal:
            return hull_dim(Kind::euclidean) == k();
        case Predicate::hermitian_lcd:
            return hull_dim(Kind::hermitian) == 0;
        case Predicate::hermitian_self_dual:
            return *this == hermitian_dual();
        case Predicate::hermitian_self_orthogonal:
            return hull_dim(Kind::hermitian) == k();
    }
    return false;
}

LinearCode LinearCode::scale(const std::vector<uint32_t>& v) const {
    if (v.size() != n_) throw ShapeMismatch("scaling vector length differs from n");
    for (uint32_t x : v)
        if (x == 0) throw NotFullWeight("scaling vector has a zero coordinate");
    GFMatrix g(*f_, k(), n_);
    for (size_t i = 0; i < k(); ++i)
        for (size_t j = 0; j < n_; ++j) g.set(i, j, f_->mul(gen_.at(i, j), v[j]));
    return from_generator(g);
}

LinearCode LinearCode::shorten(size_t i) const {
    if (i >= n_) throw IndexOutOfRange("shortening coordinate out of range");
    if (n_ == 1) throw EmptyLength("cannot shorten a length-1 code");
    // messages m with (mG)_i = 0
    GFMatrix col(*f_, 1, k());
    for (size_t r = 0; r < k(); ++r) col.set(0, r, gen_.at(r, i));
    GFMatrix coeffs = kernel(col);
    GFMatrix rows(*f_, coeffs.rows(), n_ - 1);
    for (size_t r = 0; r < coeffs.rows(); ++r) {
        std::vector<uint32_t> word(n_, 0);
        for (size_t s = 0; s < k(); ++s) {
            uint32_t c = coeffs.at(r, s);
            if (c == 0) continue;
            for (size_t j = 0; j < n_; ++j) word[j] = f_->add(word[j], f_->mul(c, gen_.at(s, j)));
        }
        std::vector<uint32_t> out;
        out.reserve(n_ - 1);
        for (size_t j = 0; j < n_; ++j)
            if (j != i) out.push_back(word[j]);
        rows.set_row(r, out);
    }
    if (rows.rows() == 0) return zero_code(*f_, n_ - 1);
    return from_generator(rows);
}

std::optional<std::vector<uint32_t>> LinearCode::full_weight_codeword() const {
    std::optional<std::vector<uint32_t>> found;
    for_each_codeword([&](const std::vector<uint32_t>& w, const std::vector<uint32_t>&) {
        for (uint32_t x : w)
            if (x == 0) return true;
        found = w;
        return false;
    });
    return found;
}

StandardForm LinearCode::standard_form() const {
    RrefResult rr = rref(gen_);
    std::vector<bool> is_pivot(n_, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<size_t> perm = rr.pivots;
    for (size_t j = 0; j < n_; ++j)
        if (!is_pivot[j]) perm.push_back(j);
    GFMatrix permuted = gen_.permute_cols(perm);
    GFMatrix p(*f_, k(), n_ - k());
    for (size_t i = 0; i < k(); ++i)
        for (size_t j = 0; j < n_ - k(); ++j) p.set(i, j, permuted.at(i, k() + j));

    // self-dual input must give P·P^T = -I (conjugated for
    // the Hermitian form).
    auto check = [&](const GFMatrix& right) {
        GFMatrix prod = p * right;
        for (size_t i = 0; i < prod.rows(); ++i)
            for (size_t j = 0; j < prod.cols(); ++j)
                if (prod.at(i, j) != (i == j ? f_->neg(1) : 0u))
                    throw TheoremCaseViolation("P·P^T != -I for a self-dual code");
    };
    if (n_ == 2 * k()) {
        if (predicate(Predicate::self_dual)) check(p.transpose());
        if (f_->has_hermitian() && predicate(Predicate::hermitian_self_dual)) check(p.conjugate().transpose());
    }
    return {std::move(perm), std::move(p)};
}

bool LinearCode::contains(const LinearCode& sub) const {
    if (f_ != &sub.field() || n_ != sub.n()) return false;
    for (size_t i = 0; i < sub.k(); ++i)
        if (!in_rowspace(gen_, sub.generator().row(i))) return false;
    return true;
}

bool LinearCode::contains_word(const std::vector<uint32_t>& v) const { return in_rowspace(gen_, v); }

LinearCode schur_product(const LinearCode& c1, const LinearCode& c2) {
    if (&c1.field() != &c2.field()) throw FieldMismatch();
    if (c1.n() != c2.n()) throw ShapeMismatch("Schur product needs equal lengths");
    const Field& f = c1.field();
    size_t n = c1.n();
    if (c1.k() == 0 || c2.k() == 0) return LinearCode::zero_code(f, n);
    GFMatrix rows(f, c1.k() * c2.k(), n);
    size_t r = 0;
    for (size_t i = 0; i < c1.k(); ++i)
        for (size_t j = 0; j < c2.k(); ++j) {
            for (size_t t = 0; t < n; ++t)
                rows.set(r, t, f.mul(c1.generator().at(i, t), c2.generator().at(j, t)));
            ++r;
        }
    return LinearCode::from_generator(rows);
}

namespace {

cpp_int binom(size_t n, size_t k) {
    if (k > n) return 0;
    cpp_int r = 1;
    for (size_t i = 0; i < k; ++i) {
        r *= static_cast<unsigned>(n - i);
        r /= static_cast<unsigned>(i + 1);
    }
    return r;
}

}  // namespace

bool macwilliams_selfdual_check(const WeightDistribution& w, uint32_t q) {
    size_t n2 = w.length();
    if (n2 % 2 != 0) throw OddLength("self-dual codes have even length");
    size_t n = n2 / 2;
    cpp_int total = 0, qn = 1;
    for (uint64_t a : w.counts) total += a;
    for (size_t i = 0; i < n; ++i) qn *= q;
    if (total != qn) throw PreconditionFailed("weight distribution does not sum to q^n");

    for (size_t v = 0; v <= n2; ++v) {
        cpp_int lhs = 0, rhs = 0;
        for (size_t j = 0; j + v <= n2; ++j) lhs += binom(n2 - j, v) * w.counts[j];
        for (size_t j = 0; j <= v; ++j) rhs += binom(n2 - j, n2 - v) * w.counts[j];
        // lhs = q^{n-v}·rhs, kept integral on both sides
        cpp_int scale = 1;
        for (size_t i = 0; i < (v > n ? v - n : n - v); ++i) scale *= q;
        if (v <= n ? (lhs != scale * rhs) : (scale * lhs != rhs)) return false;
    }
    return true;
}

}  // namespace hullforge
