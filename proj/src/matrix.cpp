#include "hullforge/matrix.hpp"

#include <algorithm>

namespace hullforge {

GFMatrix::GFMatrix(const Field& f, size_t rows, size_t cols, std::vector<uint32_t> entries)
    : f_(&f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw ShapeMismatch("entry count does not match dimensions");
    for (uint32_t e : a_)
        if (e >= f.q()) throw IndexOutOfRange("matrix entry rep out of range");
}

GFMatrix GFMatrix::identity(const Field& f, size_t n) {
    GFMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void GFMatrix::set(size_t i, size_t j, uint32_t rep) {
    if (rep >= f_->q()) throw IndexOutOfRange("matrix entry rep out of range");
    a_[i * cols_ + j] = rep;
}

std::vector<uint32_t> GFMatrix::row(size_t i) const {
    return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

void GFMatrix::set_row(size_t i, const std::vector<uint32_t>& r) {
    if (r.size() != cols_) throw ShapeMismatch("row width mismatch");
    std::copy(r.begin(), r.end(), a_.begin() + i * cols_);
}

GFMatrix GFMatrix::transpose() const {
    GFMatrix t(*f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

GFMatrix GFMatrix::conjugate() const {
    GFMatrix c(*f_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) c.set(i, j, f_->conj(at(i, j)));
    return c;
}

GFMatrix GFMatrix::operator*(const GFMatrix& o) const {
    if (f_ != o.f_) throw FieldMismatch();
    if (cols_ != o.rows_) throw ShapeMismatch("inner dimensions differ");
    GFMatrix r(*f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.set(i, j, f_->add(r.at(i, j), f_->mul(aik, o.at(k, j))));
        }
    return r;
}

bool GFMatrix::operator==(const GFMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

GFMatrix GFMatrix::vstack(const GFMatrix& o) const {
    if (f_ != o.f_) throw FieldMismatch();
    if (cols_ != o.cols_) throw ShapeMismatch("column counts differ");
    std::vector<uint32_t> e = a_;
    e.insert(e.end(), o.a_.begin(), o.a_.end());
    return GFMatrix(*f_, rows_ + o.rows_, cols_, std::move(e));
}

GFMatrix GFMatrix::hstack(const GFMatrix& o) const {
    if (f_ != o.f_) throw FieldMismatch();
    if (rows_ != o.rows_) throw ShapeMismatch("row counts differ");
    GFMatrix r(*f_, rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        for (size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
    }
    return r;
}

GFMatrix GFMatrix::permute_cols(const std::vector<size_t>& perm) const {
    if (perm.size() != cols_) throw ShapeMismatch("permutation length differs from cols");
    GFMatrix r(*f_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, perm[j]));
    return r;
}

RrefResult rref(const GFMatrix& m) {
    const Field& f = m.field();
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<uint32_t>> a(rows);
    for (size_t i = 0; i < rows; ++i) a[i] = m.row(i);

    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        uint32_t inv = f.inv(a[r][c]);
        for (size_t j = c; j < cols; ++j) a[r][j] = f.mul(a[r][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            uint32_t factor = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    GFMatrix out(f, r, cols);
    for (size_t i = 0; i < r; ++i) out.set_row(i, a[i]);
    return {std::move(out), r, std::move(pivots)};
}

size_t rank(const GFMatrix& m) { return rref(m).rank; }

GFMatrix kernel(const GFMatrix& m) {
    const Field& f = m.field();
    RrefResult rr = rref(m);
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;

    GFMatrix basis(f, n - rr.rank, n);
    size_t bi = 0;
    for (size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<uint32_t> v(n, 0);
        v[freec] = 1;
        for (size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.r.at(i, freec));
        basis.set_row(bi++, v);
    }
    return rref(basis).r;
}

GFMatrix rowspace_intersection(const GFMatrix& a, const GFMatrix& b) {
    if (&a.field() != &b.field()) throw FieldMismatch();
    if (a.cols() != b.cols()) throw ShapeMismatch("intersection needs equal widths");
    const Field& f = a.field();
    // Coefficient vectors (x, y) with x·A = y·B span the intersection via x·A.
    GFMatrix negb(f, b.rows(), b.cols());
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) negb.set(i, j, f.neg(b.at(i, j)));
    GFMatrix coeffs = kernel(a.vstack(negb).transpose());

    GFMatrix span(f, coeffs.rows(), a.cols());
    for (size_t i = 0; i < coeffs.rows(); ++i) {
        std::vector<uint32_t> v(a.cols(), 0);
        for (size_t r = 0; r < a.rows(); ++r) {
            uint32_t c = coeffs.at(i, r);
            if (c == 0) continue;
            for (size_t j = 0; j < a.cols(); ++j) v[j] = f.add(v[j], f.mul(c, a.at(r, j)));
        }
        span.set_row(i, v);
    }
    return rref(span).r;
}

std::optional<std::vector<uint32_t>> solve_left(const GFMatrix& a, const std::vector<uint32_t>& b) {
    if (b.size() != a.cols()) throw ShapeMismatch("rhs length differs from system width");
    const Field& f = a.field();
    // x·A = b  <=>  A^T x^T = b^T; eliminate on the augmented transpose.
    GFMatrix at = a.transpose();
    GFMatrix rhs(f, a.cols(), 1);
    for (size_t i = 0; i < a.cols(); ++i) rhs.set(i, 0, b[i]);
    RrefResult rr = rref(at.hstack(rhs));

    size_t nvars = a.rows();
    std::vector<uint32_t> x(nvars, 0);
    for (size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == nvars) return std::nullopt;  // pivot in rhs column
        x[rr.pivots[i]] = rr.r.at(i, nvars);
    }
    return x;
}

bool in_rowspace(const GFMatrix& m, const std::vector<uint32_t>& v) {
    if (v.size() != m.cols()) throw ShapeMismatch("vector length differs from cols");
    GFMatrix ext(m.field(), 1, m.cols());
    ext.set_row(0, v);
    return rank(m) == rank(m.vstack(ext));
}

}  // namespace hullforge
