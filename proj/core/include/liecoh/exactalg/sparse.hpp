#ifndef LIECOH_EXACTALG_SPARSE_HPP
#define LIECOH_EXACTALG_SPARSE_HPP

#include "liecoh/exactalg/dense.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace liecoh {

/// Sparse vector: strictly increasing indices, no stored zeros.
class SparseVec {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseVec() = default;
    static SparseVec from_dense(const Vector& v);
    /// Entries may be unsorted and repeated; they are summed.
    static SparseVec from_entries(std::vector<Entry> entries);

    Vector to_dense(std::size_t n) const;
    bool empty() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    Scalar get(std::size_t i) const;
    /// Index of the first stored entry; requires !empty().
    std::size_t lead() const { return entries_.front().first; }

    /// this += a * x.
    void axpy(const Scalar& a, const SparseVec& x);
    void scale(const Scalar& a);
    SparseVec scaled(const Scalar& a) const;

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

private:
    std::vector<Entry> entries_;
};

Scalar dot(const SparseVec& a, const Vector& b);

struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
};

/// Row-compressed exact matrix.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);
    /// Rejects out-of-range indices and duplicate (row, col) pairs.
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& triplets);
    static SparseMatrix from_dense(const Matrix& m);
    static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVec> rows);
    /// Columns given as dense vectors of length `rows`.
    static SparseMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseVec& row(std::size_t i) const { return data_[i]; }
    void set_row(std::size_t i, SparseVec v);
    std::size_t nnz() const;

    SparseMatrix transpose() const;
    Matrix to_dense() const;
    Vector apply(const Vector& x) const;
    /// y^T A.
    Vector left_apply(const Vector& y) const;
    bool is_zero() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> data_;
};

/// Incrementally maintained reduced row echelon form.
///
/// Pivots are leftmost nonzero columns and every pivot column is cleared
/// in all other rows, so the stored rows depend only on the row space.
class Echelon {
public:
    explicit Echelon(std::size_t cols = 0) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Normal form modulo the row space (pivot columns cleared).
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    /// Returns true when the rank grew.
    bool insert(const SparseVec& v);
    /// Inserts rows in order of increasing support size.
    void insert_all(std::vector<SparseVec> rows);

    const std::map<std::size_t, SparseVec>& pivot_rows() const { return rows_; }
    std::vector<std::size_t> pivots() const;
    std::vector<std::size_t> free_columns() const;
    /// Basis of the row space in pivot order.
    std::vector<SparseVec> basis() const;
    /// Null space of the matrix whose rows span this echelon, one vector
    /// per free column (1 at that column).
    std::vector<Vector> null_space() const;

private:
    std::size_t cols_;
    std::map<std::size_t, SparseVec> rows_;
};

Echelon echelon_of_rows(const SparseMatrix& a);

std::size_t rank(const SparseMatrix& a);
std::vector<Vector> kernel_basis(const SparseMatrix& a);
/// Basis of the column space, as RREF rows of the transpose.
std::vector<Vector> image_basis(const SparseMatrix& a);

struct SolveResult {
    bool feasible = false;
    /// A x = b when feasible.
    Vector solution;
    /// y A = 0 and y b != 0 when infeasible.
    Vector certificate;
};

SolveResult solve(const SparseMatrix& a, const Vector& b);

/// Re-checks a SolveResult by multiplication.
bool verify_solve(const SparseMatrix& a, const Vector& b, const SolveResult& r);

/// Linear span with canonical basis; used for subspace comparisons.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ech_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);

    std::size_t ambient() const { return ech_.cols(); }
    std::size_t dim() const { return ech_.rank(); }
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    void add(const Vector& v) { ech_.insert(SparseVec::from_dense(v)); }
    std::vector<Vector> basis() const;
    const Echelon& echelon() const { return ech_; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.contains(b) && b.contains(a);
    }

private:
    Echelon ech_;
};

Subspace intersect(const Subspace& a, const Subspace& b);

/// Coordinates of v in the span of `basis` (independent vectors), or empty.
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v);

}  // namespace liecoh

#endif
