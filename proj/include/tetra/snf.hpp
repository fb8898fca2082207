#pragma once

#include "tetra/int_matrix.hpp"

#include <optional>
#include <vector>

namespace tetra {

// left * input * right = diag, with left/right unimodular and the diagonal
// entries forming a divisibility chain d1 | d2 | ... (nonnegative).
// The inverses are tracked during elimination so lattice solves and
// generator lifts stay exact without a separate inversion pass.
struct SNFResult {
    IntMatrix left, diag, right;
    IntMatrix left_inv, right_inv;

    std::size_t rank() const;
    // Nonzero diagonal entries, in chain order.
    std::vector<Int> invariant_factors() const;
};

SNFResult smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel lattice of m, as columns. The basis columns
// extend to a unimodular matrix, so the kernel is returned saturated.
IntMatrix kernel_basis(const IntMatrix& m);

// Exact solve a*x = b over the integers; nullopt when no integral solution.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// Columnwise solve a*X = B; nullopt if any column fails.
std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& a, const IntMatrix& b);

// True when every column of b lies in the column lattice of a.
bool lattice_contains(const IntMatrix& a, const IntMatrix& b);

// Column lattices are equal (mutual containment).
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

} // namespace tetra
