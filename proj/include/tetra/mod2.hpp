#pragma once

#include "tetra/int_matrix.hpp"

#include <cstdint>
#include <vector>

namespace tetra {

// Dense GF(2) matrix, one byte per entry; sizes here never exceed ~32.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    F2Matrix operator*(const F2Matrix& o) const;
    bool operator==(const F2Matrix& o) const = default;
    bool is_zero() const;
    F2Matrix hstack(const F2Matrix& o) const;

    std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& v) const;

    std::size_t rank() const;
    // Columns spanning the kernel.
    F2Matrix kernel() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> e_;
};

struct Mod2RankKernel {
    std::size_t rank;
    F2Matrix kernel; // basis as columns
};

// F2 rank and kernel basis of an integer matrix reduced mod 2.
Mod2RankKernel mod2_rank_kernel(const IntMatrix& m);

// ker(d_out)/im(d_in) over F2: dimension plus generator representatives
// and a coordinate map for cycles.
struct F2Subquotient {
    std::size_t dim = 0;
    std::vector<std::vector<std::uint8_t>> reps; // generator representatives
    // Internal reduction data for coords():
    F2Matrix knl;                 // kernel basis columns
    F2Matrix img_in_kernel;       // image coords inside the kernel basis
    std::vector<std::size_t> pivot_cols;
    F2Matrix reducer;             // row-reduced spanning set of im + chosen complements

    std::vector<std::uint8_t> coords(const std::vector<std::uint8_t>& cycle) const;
};

F2Subquotient f2_subquotient(const F2Matrix& d_in, const F2Matrix& d_out);

// Solve a*x = b over F2; empty optional when inconsistent.
std::vector<std::uint8_t> f2_solve(const F2Matrix& a, const std::vector<std::uint8_t>& b, bool& ok);

} // namespace tetra
