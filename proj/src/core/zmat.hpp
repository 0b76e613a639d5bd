#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lf {

// Exact integer arithmetic with overflow detection. Matrices in this project
// are tiny (rank <= a dozen, small entries), so checked 64-bit arithmetic is
// exact in practice; an overflow raises instead of wrapping.
using zint = std::int64_t;

inline zint zadd(zint a, zint b) {
    zint r;
    if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in add");
    return r;
}
inline zint zsub(zint a, zint b) {
    zint r;
    if (__builtin_sub_overflow(a, b, &r)) throw error("integer overflow in sub");
    return r;
}
inline zint zmul(zint a, zint b) {
    zint r;
    if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in mul");
    return r;
}

class zmat {
  public:
    zmat() : rows_(0), cols_(0) {}
    zmat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static zmat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    zint& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    zint at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const zmat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    zmat transposed() const;
    zmat operator*(const zmat& o) const;
    zmat operator-(const zmat& o) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, zint c);  // row dst += c * row src
    void add_col_multiple(int dst, int src, zint c);
    void negate_row(int i);
    void negate_col(int j);

    std::vector<zint> col(int j) const;
    std::vector<zint> row(int i) const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<zint> a_;
};

std::vector<zint> mul(const zmat& m, const std::vector<zint>& x);

// Determinant by fraction-free (Bareiss) elimination; exact.
zint det(const zmat& m);

// U * a * V = D with U, V unimodular, D diagonal with d1 | d2 | ... | dr.
struct snf_result {
    zmat d, u, v;
    int rank = 0;
};
snf_result smith_normal_form(const zmat& a);

// Solve a x = b over the integers. Returns false when no integer solution.
bool solve_integer(const zmat& a, const std::vector<zint>& b, std::vector<zint>& x);

// Integer basis of the kernel of a (columns of the result).
zmat kernel_basis(const zmat& a);

// Finitely generated abelian group: free rank plus divisor chain (> 1).
struct abelian_group {
    long long free_rank = 0;
    std::vector<zint> torsion;  // each > 1, each dividing the next

    bool operator==(const abelian_group& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string str() const;  // "Z", "Z/2", "Z^2 + Z/3", "0"
};

// Z^ambient / column-span(relations), with a coordinate map onto the free part.
class quotient_presentation {
  public:
    quotient_presentation() = default;
    quotient_presentation(int ambient, const zmat& relations);

    const abelian_group& group() const { return group_; }
    int ambient() const { return ambient_; }

    // Coordinates of x in the free part of the quotient (length = free rank).
    std::vector<zint> free_coordinates(const std::vector<zint>& x) const;

    // Torsion residues of x (one per torsion divisor, reduced mod divisor).
    std::vector<zint> torsion_residues(const std::vector<zint>& x) const;

  private:
    int ambient_ = 0;
    int rank_ = 0;
    zmat u_;  // row transform from the SNF of the relation matrix
    std::vector<zint> diag_;
    abelian_group group_;
};

// Quotient of Z^ambient by the span of the given columns.
abelian_group cokernel(int ambient, const zmat& relation_columns);

} // namespace lf
