#include "tetra/mod2.hpp"

#include "tetra/errors.hpp"

namespace tetra {

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

F2Matrix F2Matrix::from_int(const IntMatrix& m) {
    F2Matrix f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            f.at(i, j) = static_cast<std::uint8_t>(m.at(i, j) % 2 != 0);
    return f;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    require(cols_ == o.rows_, "BadShape", "F2 product shape mismatch");
    F2Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (at(i, k))
                for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) ^= o.at(k, j);
    return p;
}

bool F2Matrix::is_zero() const {
    for (std::uint8_t v : e_)
        if (v) return false;
    return true;
}

F2Matrix F2Matrix::hstack(const F2Matrix& o) const {
    require(rows_ == o.rows_, "BadShape", "F2 hstack row mismatch");
    F2Matrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

std::vector<std::uint8_t> F2Matrix::apply(const std::vector<std::uint8_t>& v) const {
    require(v.size() == cols_, "BadShape", "F2 apply length mismatch");
    std::vector<std::uint8_t> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] ^= at(i, j) & v[j];
    return r;
}

std::size_t F2Matrix::rank() const {
    F2Matrix a = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && !a.at(piv, c)) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(r, j), a.at(piv, j));
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && a.at(i, c))
                for (std::size_t j = 0; j < cols_; ++j) a.at(i, j) ^= a.at(r, j);
        ++r;
    }
    return r;
}

F2Matrix F2Matrix::kernel() const {
    F2Matrix a = *this;
    std::vector<std::size_t> pivot_of_col(cols_, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && !a.at(piv, c)) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(r, j), a.at(piv, j));
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && a.at(i, c))
                for (std::size_t j = 0; j < cols_; ++j) a.at(i, j) ^= a.at(r, j);
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_of_col[c] == SIZE_MAX) free_cols.push_back(c);
    F2Matrix k(cols_, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k.at(fc, t) = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = pivot_of_col[c];
            if (p != SIZE_MAX && a.at(p, fc)) k.at(c, t) = 1;
        }
    }
    return k;
}

Mod2RankKernel mod2_rank_kernel(const IntMatrix& m) {
    F2Matrix f = F2Matrix::from_int(m);
    return Mod2RankKernel{f.rank(), f.kernel()};
}

std::vector<std::uint8_t> f2_solve(const F2Matrix& a, const std::vector<std::uint8_t>& b, bool& ok) {
    require(b.size() == a.rows(), "BadShape", "F2 solve rhs mismatch");
    std::size_t rows = a.rows(), cols = a.cols();
    F2Matrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && !aug.at(piv, c)) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j <= cols; ++j) std::swap(aug.at(r, j), aug.at(piv, j));
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && aug.at(i, c))
                for (std::size_t j = 0; j <= cols; ++j) aug.at(i, j) ^= aug.at(r, j);
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<std::uint8_t> x(cols, 0);
    ok = true;
    for (std::size_t i = r; i < rows; ++i) {
        bool lead = false;
        for (std::size_t j = 0; j < cols; ++j) lead |= aug.at(i, j) != 0;
        if (!lead && aug.at(i, cols)) {
            ok = false;
            return x;
        }
    }
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] != SIZE_MAX) x[c] = aug.at(pivot_of_col[c], cols);
    // verify (free variables were set to zero)
    std::vector<std::uint8_t> chk = a.apply(x);
    for (std::size_t i = 0; i < rows; ++i)
        if (chk[i] != b[i]) {
            ok = false;
            return x;
        }
    return x;
}

F2Subquotient f2_subquotient(const F2Matrix& d_in, const F2Matrix& d_out) {
    std::size_t n = d_out.cols();
    if (d_in.cols() > 0) {
        require(d_in.rows() == n, "BadShape", "F2 chain rank mismatch");
        require((d_out * d_in).is_zero(), "CompositionNonzero", "F2 maps do not compose to zero");
    }
    F2Subquotient q;
    q.knl = d_out.kernel();
    std::size_t k = q.knl.cols();

    // image columns in kernel coordinates
    F2Matrix im(k, d_in.cols());
    for (std::size_t j = 0; j < d_in.cols(); ++j) {
        std::vector<std::uint8_t> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = d_in.at(i, j);
        bool ok = false;
        std::vector<std::uint8_t> y = f2_solve(q.knl, col, ok);
        require(ok, "CompositionNonzero", "image not inside kernel over F2");
        for (std::size_t i = 0; i < k; ++i) im.at(i, j) = y[i];
    }
    q.img_in_kernel = im;

    // greedily pick standard kernel generators independent modulo the image
    F2Matrix probe = im;
    for (std::size_t j = 0; j < k; ++j) {
        F2Matrix cand(k, probe.cols() + 1);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < probe.cols(); ++c) cand.at(i, c) = probe.at(i, c);
        cand.at(j, probe.cols()) = 1;
        if (cand.rank() > probe.rank()) {
            probe = cand;
            q.pivot_cols.push_back(j);
        }
    }
    q.dim = q.pivot_cols.size();
    F2Matrix qb(k, q.dim);
    for (std::size_t t = 0; t < q.dim; ++t) qb.at(q.pivot_cols[t], t) = 1;
    q.reducer = qb.hstack(im);
    for (std::size_t t = 0; t < q.dim; ++t) {
        std::vector<std::uint8_t> rep(n, 0);
        for (std::size_t i = 0; i < n; ++i) rep[i] = q.knl.at(i, q.pivot_cols[t]);
        q.reps.push_back(rep);
    }
    return q;
}

std::vector<std::uint8_t> F2Subquotient::coords(const std::vector<std::uint8_t>& cycle) const {
    bool ok = false;
    std::vector<std::uint8_t> y = f2_solve(knl, cycle, ok);
    require(ok, "NotInKernel", "vector is not an F2 cycle");
    std::vector<std::uint8_t> c = f2_solve(reducer, y, ok);
    require(ok, "Internal", "quotient coordinates inconsistent");
    return std::vector<std::uint8_t>(c.begin(), c.begin() + static_cast<long>(dim));
}

} // namespace tetra
