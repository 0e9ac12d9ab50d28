#ifndef HULLFORGE_MATRIX_HPP
#define HULLFORGE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hullforge/field.hpp"

namespace hullforge {

/// Dense matrix over one finite field. Entries are stored as integer reps,
/// row-major. Immutable in spirit: all algorithms return new matrices.
class GFMatrix {
   public:
    GFMatrix(const Field& f, size_t rows, size_t cols)
        : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    GFMatrix(const Field& f, size_t rows, size_t cols, std::vector<uint32_t> entries);

    static GFMatrix identity(const Field& f, size_t n);

    const Field& field() const { return *f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t rep);

    std::vector<uint32_t> row(size_t i) const;
    void set_row(size_t i, const std::vector<uint32_t>& r);

    GFMatrix transpose() const;
    /// Entrywise conjugation x -> x^q0.
    GFMatrix conjugate() const;
    GFMatrix operator*(const GFMatrix& o) const;
    bool operator==(const GFMatrix& o) const;

    /// Rows of `o` appended below this matrix.
    GFMatrix vstack(const GFMatrix& o) const;
    /// Columns of `o` appended to the right.
    GFMatrix hstack(const GFMatrix& o) const;
    GFMatrix permute_cols(const std::vector<size_t>& perm) const;

   private:
    const Field* f_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

struct RrefResult {
    GFMatrix r;                  // reduced row echelon form, zero rows removed
    size_t rank;
    std::vector<size_t> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const GFMatrix& m);
size_t rank(const GFMatrix& m);

/// RREF basis of the right kernel {x : M x^T = 0}. Row count = cols - rank.
GFMatrix kernel(const GFMatrix& m);

/// RREF basis of rowspace(a) ∩ rowspace(b), computed by solving the stacked
/// coefficient system. Canonical by RREF.
GFMatrix rowspace_intersection(const GFMatrix& a, const GFMatrix& b);

/// One solution x of x·A = b with free variables set to 0, or nullopt when
/// the system is inconsistent.
std::optional<std::vector<uint32_t>> solve_left(const GFMatrix& a, const std::vector<uint32_t>& b);

/// True when v lies in the row space of m.
bool in_rowspace(const GFMatrix& m, const std::vector<uint32_t>& v);

}  // namespace hullforge

#endif
