#include "tetra/int_matrix.hpp"

#include "tetra/errors.hpp"

#include <sstream>

namespace tetra {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        require(row.size() == c, "BadShape", "ragged initializer");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void IntMatrix::set_col(std::size_t j, const std::vector<Int>& v) {
    require(v.size() == rows_, "BadShape", "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    require(cols_ == o.rows_, "BadShape", "matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "BadShape", "matrix sum shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "BadShape", "matrix difference shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
    return s;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = -e_[i];
    return s;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    require(v.size() == cols_, "BadShape", "vector length mismatch");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::pow(unsigned k) const {
    require(rows_ == cols_, "BadShape", "pow of non-square matrix");
    IntMatrix acc = identity(rows_);
    for (unsigned i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

IntMatrix IntMatrix::mod(const Int& m) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        Int v = e_[i] % m;
        if (v < 0) v += boost::multiprecision::abs(m);
        r.e_[i] = v;
    }
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    require(rows_ == o.rows_, "BadShape", "hstack row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "BadShape", "submatrix out of range");
    IntMatrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) s.at(i, j) = at(r0 + i, c0 + j);
    return s;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : e_)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
}

Int IntMatrix::determinant() const {
    require(rows_ == cols_, "BadShape", "determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = v / prev; // exact by Bareiss
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

} // namespace tetra
