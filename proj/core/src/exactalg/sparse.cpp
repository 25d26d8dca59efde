#include "liecoh/exactalg/sparse.hpp"

#include "liecoh/errors.hpp"

#include <algorithm>
#include <set>

namespace liecoh {

SparseVec SparseVec::from_dense(const Vector& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) s.entries_.emplace_back(i, v[i]);
    }
    return s;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec s;
    for (auto& e : entries) {
        if (!s.entries_.empty() && s.entries_.back().first == e.first) {
            s.entries_.back().second += e.second;
            if (s.entries_.back().second.is_zero()) s.entries_.pop_back();
        } else if (!e.second.is_zero()) {
            s.entries_.push_back(std::move(e));
        }
    }
    return s;
}

Vector SparseVec::to_dense(std::size_t n) const {
    Vector v(n);
    for (const auto& [i, a] : entries_) {
        if (i >= n) throw DimensionMismatch("sparse index exceeds dense length");
        v[i] = a;
    }
    return v;
}

Scalar SparseVec::get(std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return {};
}

void SparseVec::axpy(const Scalar& a, const SparseVec& x) {
    if (a.is_zero() || x.entries_.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + x.entries_.size());
    auto p = entries_.begin();
    auto q = x.entries_.begin();
    while (p != entries_.end() || q != x.entries_.end()) {
        if (q == x.entries_.end() || (p != entries_.end() && p->first < q->first)) {
            out.push_back(std::move(*p));
            ++p;
        } else if (p == entries_.end() || q->first < p->first) {
            out.emplace_back(q->first, a * q->second);
            ++q;
        } else {
            Scalar s = p->second + a * q->second;
            if (!s.is_zero()) out.emplace_back(p->first, std::move(s));
            ++p;
            ++q;
        }
    }
    entries_ = std::move(out);
}

void SparseVec::scale(const Scalar& a) {
    if (a.is_zero()) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= a;
}

SparseVec SparseVec::scaled(const Scalar& a) const {
    SparseVec r = *this;
    r.scale(a);
    return r;
}

Scalar dot(const SparseVec& a, const Vector& b) {
    Scalar s;
    for (const auto& [i, x] : a.entries()) {
        if (i >= b.size()) throw DimensionMismatch("dot: sparse index out of range");
        if (!b[i].is_zero()) s += x * b[i];
    }
    return s;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& triplets) {
    std::vector<std::vector<SparseVec::Entry>> buckets(rows);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& t : triplets) {
        if (t.row >= rows || t.col >= cols) throw InvalidArgument("triplet index out of range");
        if (!seen.emplace(t.row, t.col).second) throw InvalidArgument("duplicate triplet");
        buckets[t.row].emplace_back(t.col, t.value);
    }
    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.data_[i] = SparseVec::from_entries(std::move(buckets[i]));
    return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i) m.data_[i] = SparseVec::from_dense(d.row(i));
    return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
    SparseMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].empty() && rows[i].entries().back().first >= cols) {
            throw InvalidArgument("row entry beyond column count");
        }
        m.data_[i] = std::move(rows[i]);
    }
    return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    std::vector<std::vector<SparseVec::Entry>> buckets(rows);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            if (!columns[j][i].is_zero()) buckets[i].emplace_back(j, columns[j][i]);
        }
    }
    SparseMatrix m(rows, columns.size());
    for (std::size_t i = 0; i < rows; ++i) m.data_[i] = SparseVec::from_entries(std::move(buckets[i]));
    return m;
}

void SparseMatrix::set_row(std::size_t i, SparseVec v) {
    if (i >= rows_) throw InvalidArgument("row index out of range");
    if (!v.empty() && v.entries().back().first >= cols_) throw InvalidArgument("row entry beyond column count");
    data_[i] = std::move(v);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.nnz();
    return n;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<std::vector<SparseVec::Entry>> buckets(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, a] : data_[i].entries()) buckets[j].emplace_back(i, a);
    }
    SparseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j] = SparseVec::from_entries(std::move(buckets[j]));
    return t;
}

Matrix SparseMatrix::to_dense() const {
    Matrix d(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, a] : data_[i].entries()) d(i, j) = a;
    }
    return d;
}

Vector SparseMatrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("sparse apply: size mismatch");
    Vector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(data_[i], x);
    return y;
}

Vector SparseMatrix::left_apply(const Vector& y) const {
    if (y.size() != rows_) throw DimensionMismatch("sparse left apply: size mismatch");
    Vector x(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (y[i].is_zero()) continue;
        for (const auto& [j, a] : data_[i].entries()) x[j] += y[i] * a;
    }
    return x;
}

bool SparseMatrix::is_zero() const {
    for (const auto& r : data_) {
        if (!r.empty()) return false;
    }
    return true;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("sparse product size mismatch");
    SparseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        std::vector<SparseVec::Entry> acc;
        for (const auto& [k, x] : a.data_[i].entries()) {
            for (const auto& [j, y] : b.data_[k].entries()) acc.emplace_back(j, x * y);
        }
        c.data_[i] = SparseVec::from_entries(std::move(acc));
    }
    return c;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
    SparseVec r = v;
    for (const auto& [c, a] : v.entries()) {
        auto it = rows_.find(c);
        if (it != rows_.end()) r.axpy(-a, it->second);
    }
    return r;
}

bool Echelon::insert(const SparseVec& v) {
    if (!v.empty() && v.entries().back().first >= cols_) throw InvalidArgument("echelon row beyond column count");
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    const std::size_t p = r.lead();
    r.scale(r.entries().front().second.inverse());
    for (auto& [c, row] : rows_) {
        Scalar a = row.get(p);
        if (!a.is_zero()) row.axpy(-a, r);
    }
    rows_.emplace(p, std::move(r));
    return true;
}

void Echelon::insert_all(std::vector<SparseVec> rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseVec& a, const SparseVec& b) { return a.nnz() < b.nnz(); });
    for (const auto& r : rows) insert(r);
}

std::vector<std::size_t> Echelon::pivots() const {
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const auto& kv : rows_) p.push_back(kv.first);
    return p;
}

std::vector<std::size_t> Echelon::free_columns() const {
    std::vector<std::size_t> f;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!rows_.count(j)) f.push_back(j);
    }
    return f;
}

std::vector<SparseVec> Echelon::basis() const {
    std::vector<SparseVec> b;
    b.reserve(rows_.size());
    for (const auto& kv : rows_) b.push_back(kv.second);
    return b;
}

std::vector<Vector> Echelon::null_space() const {
    std::vector<std::size_t> free = free_columns();
    std::map<std::size_t, std::size_t> slot;
    std::vector<Vector> out;
    out.reserve(free.size());
    for (std::size_t f : free) {
        slot[f] = out.size();
        out.push_back(unit_vector(cols_, f));
    }
    for (const auto& [p, row] : rows_) {
        for (const auto& [j, a] : row.entries()) {
            if (j == p) continue;
            out[slot.at(j)][p] = -a;
        }
    }
    return out;
}

Echelon echelon_of_rows(const SparseMatrix& a) {
    Echelon e(a.cols());
    std::vector<SparseVec> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a.row(i).empty()) rows.push_back(a.row(i));
    }
    e.insert_all(std::move(rows));
    return e;
}

std::size_t rank(const SparseMatrix& a) { return echelon_of_rows(a).rank(); }

std::vector<Vector> kernel_basis(const SparseMatrix& a) { return echelon_of_rows(a).null_space(); }

std::vector<Vector> image_basis(const SparseMatrix& a) {
    Echelon e = echelon_of_rows(a.transpose());
    std::vector<Vector> out;
    for (const auto& r : e.basis()) out.push_back(r.to_dense(a.rows()));
    return out;
}

SolveResult solve(const SparseMatrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
    const std::size_t n = a.cols();
    Echelon e(n + 1);
    std::vector<SparseVec> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<SparseVec::Entry> entries = a.row(i).entries();
        if (!b[i].is_zero()) entries.emplace_back(n, b[i]);
        if (!entries.empty()) rows.push_back(SparseVec::from_entries(std::move(entries)));
    }
    e.insert_all(std::move(rows));
    SolveResult res;
    if (e.pivot_rows().count(n)) {
        res.feasible = false;
        for (const auto& y : kernel_basis(a.transpose())) {
            if (!dot(y, b).is_zero()) {
                res.certificate = y;
                break;
            }
        }
        if (res.certificate.empty()) throw Error("solve: inconsistent system without certificate");
        return res;
    }
    res.feasible = true;
    res.solution = Vector(n);
    for (const auto& [p, row] : e.pivot_rows()) res.solution[p] = row.get(n);
    return res;
}

bool verify_solve(const SparseMatrix& a, const Vector& b, const SolveResult& r) {
    if (r.feasible) return a.apply(r.solution) == b;
    return is_zero(a.left_apply(r.certificate)) && !dot(r.certificate, b).is_zero();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    std::vector<SparseVec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw DimensionMismatch("subspace: vector length mismatch");
        rows.push_back(SparseVec::from_dense(v));
    }
    s.ech_.insert_all(std::move(rows));
    return s;
}

bool Subspace::contains(const Vector& v) const { return ech_.contains(SparseVec::from_dense(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& r : other.ech_.basis()) {
        if (!ech_.contains(r)) return false;
    }
    return true;
}

std::vector<Vector> Subspace::basis() const {
    std::vector<Vector> out;
    for (const auto& r : ech_.basis()) out.push_back(r.to_dense(ambient()));
    return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("intersect: ambient mismatch");
    std::vector<Vector> ab = a.basis();
    std::vector<Vector> bb = b.basis();
    std::vector<Vector> cols = ab;
    for (const auto& v : bb) cols.push_back(-v);
    Subspace out(a.ambient());
    if (cols.empty()) return out;
    for (const auto& k : kernel_basis(SparseMatrix::from_columns(a.ambient(), cols))) {
        Vector w(a.ambient());
        for (std::size_t i = 0; i < ab.size(); ++i) add_scaled(w, k[i], ab[i]);
        out.add(w);
    }
    return out;
}

std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
    if (basis.empty()) {
        if (is_zero(v)) return Vector{};
        return std::nullopt;
    }
    SolveResult r = solve(SparseMatrix::from_columns(v.size(), basis), v);
    if (!r.feasible) return std::nullopt;
    return r.solution;
}

}  // namespace liecoh
