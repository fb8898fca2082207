#include "tetra/snf.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <limits>

namespace tetra {

namespace {

using boost::multiprecision::abs;

struct Worker {
    IntMatrix d, l, r, li, ri;
    std::size_t m, n;

    explicit Worker(const IntMatrix& input)
        : d(input),
          l(IntMatrix::identity(input.rows())),
          r(IntMatrix::identity(input.cols())),
          li(IntMatrix::identity(input.rows())),
          ri(IntMatrix::identity(input.cols())),
          m(input.rows()),
          n(input.cols()) {}

    // Row ops update l (and li by the inverse op); col ops update r/ri.
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (std::size_t k = 0; k < m; ++k) std::swap(l.at(i, k), l.at(j, k));
        for (std::size_t k = 0; k < m; ++k) std::swap(li.at(k, i), li.at(k, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < m; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(r.at(k, i), r.at(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(ri.at(i, k), ri.at(j, k));
    }
    // row i += f * row j
    void add_row(std::size_t i, std::size_t j, const Int& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < n; ++k) d.at(i, k) += f * d.at(j, k);
        for (std::size_t k = 0; k < m; ++k) l.at(i, k) += f * l.at(j, k);
        for (std::size_t k = 0; k < m; ++k) li.at(k, j) -= f * li.at(k, i);
    }
    // col i += f * col j
    void add_col(std::size_t i, std::size_t j, const Int& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < m; ++k) d.at(k, i) += f * d.at(k, j);
        for (std::size_t k = 0; k < n; ++k) r.at(k, i) += f * r.at(k, j);
        for (std::size_t k = 0; k < n; ++k) ri.at(j, k) -= f * ri.at(i, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) d.at(i, k) = -d.at(i, k);
        for (std::size_t k = 0; k < m; ++k) l.at(i, k) = -l.at(i, k);
        for (std::size_t k = 0; k < m; ++k) li.at(k, i) = -li.at(k, i);
    }

    bool find_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = s; i < m; ++i)
            for (std::size_t j = s; j < n; ++j) {
                const Int& v = d.at(i, j);
                if (v == 0) continue;
                Int a = abs(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    bool cleared(std::size_t s) const {
        for (std::size_t i = s + 1; i < m; ++i)
            if (d.at(i, s) != 0) return false;
        for (std::size_t j = s + 1; j < n; ++j)
            if (d.at(s, j) != 0) return false;
        return true;
    }

    void run() {
        std::size_t nmin = std::min(m, n);
        for (std::size_t s = 0; s < nmin; ++s) {
            std::size_t pi = s, pj = s;
            if (!find_pivot(s, pi, pj)) break; // rest of the block is zero
            swap_rows(s, pi);
            swap_cols(s, pj);
            while (!cleared(s)) {
                // smallest pivot in the block limits coefficient growth
                if (find_pivot(s, pi, pj)) {
                    swap_rows(s, pi);
                    swap_cols(s, pj);
                }
                Int p = d.at(s, s);
                for (std::size_t i = s + 1; i < m; ++i)
                    if (d.at(i, s) != 0) add_row(i, s, -(d.at(i, s) / p));
                for (std::size_t j = s + 1; j < n; ++j)
                    if (d.at(s, j) != 0) add_col(j, s, -(d.at(s, j) / p));
            }
            // divisibility: fold any non-multiple from the lower-right block
            // back into this pivot position and re-run the clearing loop
            bool redo = true;
            while (redo) {
                redo = false;
                Int p = abs(d.at(s, s));
                for (std::size_t i = s + 1; i < m && !redo; ++i)
                    for (std::size_t j = s + 1; j < n && !redo; ++j)
                        if (d.at(i, j) % p != 0) {
                            add_row(s, i, 1);
                            redo = true;
                        }
                if (redo) {
                    while (!cleared(s)) {
                        if (find_pivot(s, pi, pj)) {
                            swap_rows(s, pi);
                            swap_cols(s, pj);
                        }
                        Int p2 = d.at(s, s);
                        for (std::size_t i = s + 1; i < m; ++i)
                            if (d.at(i, s) != 0) add_row(i, s, -(d.at(i, s) / p2));
                        for (std::size_t j = s + 1; j < n; ++j)
                            if (d.at(s, j) != 0) add_col(j, s, -(d.at(s, j) / p2));
                    }
                }
            }
            if (d.at(s, s) < 0) negate_row(s);
        }
    }
};

} // namespace

std::size_t SNFResult::rank() const {
    std::size_t r = 0, nmin = std::min(diag.rows(), diag.cols());
    for (std::size_t i = 0; i < nmin; ++i)
        if (diag.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SNFResult::invariant_factors() const {
    std::vector<Int> f;
    std::size_t nmin = std::min(diag.rows(), diag.cols());
    for (std::size_t i = 0; i < nmin; ++i)
        if (diag.at(i, i) != 0) f.push_back(diag.at(i, i));
    return f;
}

SNFResult smith_normal_form(const IntMatrix& m) {
    Worker w(m);
    w.run();
    return SNFResult{w.l, w.d, w.r, w.li, w.ri};
}

IntMatrix kernel_basis(const IntMatrix& m) {
    if (m.cols() == 0) return IntMatrix(0, 0);
    if (m.rows() == 0) return IntMatrix::identity(m.cols());
    SNFResult s = smith_normal_form(m);
    std::size_t nmin = std::min(m.rows(), m.cols());
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (j >= nmin || s.diag.at(j, j) == 0) idx.push_back(j);
    IntMatrix k(m.cols(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
        for (std::size_t i = 0; i < m.cols(); ++i) k.at(i, c) = s.right.at(i, idx[c]);
    return k;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
    require(b.size() == a.rows(), "BadShape", "solve rhs length mismatch");
    if (a.cols() == 0) {
        for (const Int& v : b)
            if (v != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    SNFResult s = smith_normal_form(a);
    std::vector<Int> c(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            if (s.left.at(i, j) != 0) c[i] += s.left.at(i, j) * b[j];
    std::size_t nmin = std::min(a.rows(), a.cols());
    std::vector<Int> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < nmin && s.diag.at(i, i) != 0) {
            if (c[i] % s.diag.at(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.diag.at(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (s.right.at(i, j) != 0) x[i] += s.right.at(i, j) * y[j];
    return x;
}

std::optional<IntMatrix> solve_integer_matrix(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows() == b.rows(), "BadShape", "solve rhs row mismatch");
    IntMatrix x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto s = solve_integer(a, b.col(j));
        if (!s) return std::nullopt;
        x.set_col(j, *s);
    }
    return x;
}

bool lattice_contains(const IntMatrix& a, const IntMatrix& b) {
    return solve_integer_matrix(a, b).has_value();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return lattice_contains(a, b) && lattice_contains(b, a);
}

} // namespace tetra
