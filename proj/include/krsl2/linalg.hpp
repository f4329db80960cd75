#pragma once

#include "krsl2/field.hpp"

#include <optional>
#include <vector>

namespace krsl2 {

using KVec = std::vector<mpq_class>;

// Dense matrix over a Field.
class KMatrix {
public:
    KMatrix() = default;
    KMatrix(Field F, int rows, int cols);
    static KMatrix identity(Field F, int n);
    static KMatrix from_columns(Field F, int rows, const std::vector<KVec>& cols);

    const Field& field() const { return F_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    const mpq_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    void set(int i, int j, const mpq_class& v) { a_[static_cast<std::size_t>(i) * c_ + j] = F_.reduce(v); }
    void add_to(int i, int j, const mpq_class& v);

    KVec column(int j) const;
    KVec apply(const KVec& x) const;
    KMatrix operator*(const KMatrix& o) const;
    KMatrix operator+(const KMatrix& o) const;
    KMatrix operator-(const KMatrix& o) const;
    KMatrix scaled(const mpq_class& c) const;
    KMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const KMatrix& o) const;

    int rank() const;
    // Basis of the null space, one vector per free column.
    std::vector<KVec> kernel() const;
    // Reduced row echelon form; pivot columns returned through `pivots`.
    KMatrix rref(std::vector<int>* pivots = nullptr) const;
    std::optional<KVec> solve(const KVec& b) const;

private:
    Field F_;
    int r_ = 0, c_ = 0;
    std::vector<mpq_class> a_;
};

// Incrementally built span of vectors in k^n that can express members in
// terms of the inserted generators.
class Span {
public:
    Span(Field F, int dim) : F_(F), n_(dim) {}

    int dim() const { return n_; }
    int rank() const { return static_cast<int>(vecs_.size()); }
    int generators() const { return count_; }

    // Returns true if v was independent of the current span.
    bool insert(const KVec& v);
    bool contains(const KVec& v) const;
    // Coefficients c with v = sum_i c_i g_i over inserted generators, if v
    // lies in the span. Dependent generators get coefficient zero.
    std::optional<KVec> express(const KVec& v) const;

private:
    KVec reduce(KVec v, KVec* combo) const;
    Field F_;
    int n_;
    int count_ = 0;
    std::vector<KVec> vecs_;     // echelon vectors, pivot entry 1
    std::vector<int> pivot_;
    std::vector<KVec> combo_;    // echelon vector = sum combo[j] * generator j
    std::vector<int> gen_index_;
};

bool is_zero_vec(const KVec& v);

}  // namespace krsl2
