#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tetra {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries, row-major.
// Everything in the exact chain (boundary maps, actions, basis changes)
// lives here; sizes stay tiny (<= ~32x32) so no sparsity games.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix column(const std::vector<Int>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Int> col(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;
    void set_col(std::size_t j, const std::vector<Int>& v);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const = default;

    std::vector<Int> apply(const std::vector<Int>& v) const;

    IntMatrix pow(unsigned k) const;
    IntMatrix mod(const Int& m) const;

    // Stack columns of two matrices side by side (same row count).
    IntMatrix hstack(const IntMatrix& o) const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_zero() const;
    bool is_identity() const;

    // Exact determinant via fraction-free (Bareiss) elimination.
    Int determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> e_;
};

} // namespace tetra
