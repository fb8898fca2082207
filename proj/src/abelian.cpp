#include "tetra/abelian.hpp"

#include "tetra/errors.hpp"

#include <sstream>

namespace tetra {

FinAbGroup FinAbGroup::cyclic(const Int& n) {
    if (n == 0) return free_of_rank(1);
    if (n == 1 || n == -1) return FinAbGroup{};
    return FinAbGroup{0, {boost::multiprecision::abs(n)}};
}

FinAbGroup FinAbGroup::from_diagonal(const std::vector<Int>& diag, std::size_t ambient_rank) {
    FinAbGroup g;
    std::size_t nonzero = 0;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        Int a = boost::multiprecision::abs(d);
        if (a > 1) g.torsion.push_back(a);
    }
    g.free_rank = ambient_rank - nonzero;
    return g;
}

Int FinAbGroup::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
}

std::string FinAbGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const Int& d : torsion) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

PresentedAb::PresentedAb(std::size_t ambient, IntMatrix rels)
    : ambient_(ambient), rels_(std::move(rels)) {
    require(rels_.rows() == ambient_ || rels_.cols() == 0, "BadShape",
            "relation matrix row count must match ambient rank");
    if (rels_.cols() == 0) rels_ = IntMatrix(ambient_, 0);

    SNFResult s = smith_normal_form(rels_);
    snf_left_ = s.left;
    std::size_t nmin = std::min(rels_.rows(), rels_.cols());
    std::vector<Int> dia(ambient_, 0);
    for (std::size_t i = 0; i < nmin; ++i) dia[i] = s.diag.at(i, i);

    // keep torsion generators (order >= 2) first, then free generators
    for (std::size_t i = 0; i < ambient_; ++i)
        if (dia[i] > 1) keep_.push_back(i);
    for (std::size_t i = 0; i < ambient_; ++i)
        if (dia[i] == 0) keep_.push_back(i);

    for (std::size_t idx : keep_) {
        orders_.push_back(dia[idx]);
        gens_.push_back(s.left_inv.col(idx));
    }
    group_ = FinAbGroup::from_diagonal(dia, ambient_);
}

std::vector<Int> PresentedAb::coords(const std::vector<Int>& v) const {
    require(v.size() == ambient_, "BadShape", "coords: ambient mismatch");
    std::vector<Int> y = snf_left_.apply(v);
    std::vector<Int> c;
    c.reserve(keep_.size());
    for (std::size_t k = 0; k < keep_.size(); ++k) {
        Int val = y[keep_[k]];
        if (orders_[k] != 0) {
            val %= orders_[k];
            if (val < 0) val += orders_[k];
        }
        c.push_back(val);
    }
    return c;
}

bool PresentedAb::is_zero_class(const std::vector<Int>& v) const {
    for (const Int& c : coords(v))
        if (c != 0) return false;
    return true;
}

PresentedHom::PresentedHom(PresentedAb s, PresentedAb d, IntMatrix m)
    : src(std::move(s)), dst(std::move(d)), mat(std::move(m)) {
    require(mat.rows() == dst.ambient() && mat.cols() == src.ambient(), "BadShape",
            "hom matrix shape mismatch");
    // well defined: relations map to zero classes
    for (std::size_t j = 0; j < src.rels().cols(); ++j) {
        std::vector<Int> img = mat.apply(src.rels().col(j));
        require(dst.is_zero_class(img), "NotWellDefined",
                "hom does not kill source relations");
    }
}

IntMatrix PresentedHom::on_generators() const {
    IntMatrix g(dst.gen_count(), src.gen_count());
    for (std::size_t j = 0; j < src.gen_count(); ++j) {
        std::vector<Int> img = mat.apply(src.generator(j));
        g.set_col(j, dst.coords(img));
    }
    return g;
}

bool PresentedHom::is_zero() const {
    for (std::size_t j = 0; j < src.gen_count(); ++j)
        if (!dst.is_zero_class(mat.apply(src.generator(j)))) return false;
    return true;
}

namespace {

// Basis (columns) of the lattice spanned by the columns of s.
IntMatrix lattice_basis_from_spanning(const IntMatrix& s) {
    if (s.cols() == 0) return IntMatrix(s.rows(), 0);
    SNFResult f = smith_normal_form(s);
    std::size_t nmin = std::min(s.rows(), s.cols());
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < nmin; ++i)
        if (f.diag.at(i, i) != 0) idx.push_back(i);
    IntMatrix b(s.rows(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
        std::vector<Int> col = f.left_inv.col(idx[c]);
        for (auto& v : col) v *= f.diag.at(idx[c], idx[c]);
        b.set_col(c, col);
    }
    return b;
}

// Lattice {x : f.mat x lies in dst relation lattice}; contains src rels.
IntMatrix preimage_lattice(const PresentedHom& f) {
    const IntMatrix& rels = f.dst.rels();
    IntMatrix big = f.mat.hstack(-rels);
    IntMatrix k = kernel_basis(big);
    IntMatrix proj = k.submatrix(0, 0, f.src.ambient(), k.cols());
    return lattice_basis_from_spanning(proj);
}

} // namespace

SubquotientResult subquotient(const PresentedHom& f, const IntMatrix& image_cols) {
    require(image_cols.cols() == 0 || image_cols.rows() == f.src.ambient(), "BadShape",
            "image columns must live in the source ambient");
    IntMatrix knl = preimage_lattice(f);

    // columns to quotient by: the incoming image plus the source relations
    IntMatrix quot = image_cols.cols() ? image_cols.hstack(f.src.rels()) : f.src.rels();
    if (image_cols.cols() == 0 && f.src.rels().cols() == 0) quot = IntMatrix(f.src.ambient(), 0);

    std::optional<IntMatrix> y = solve_integer_matrix(knl, quot);
    require(y.has_value(), "CompositionNonzero",
            "incoming image does not lie inside the kernel");

    SubquotientResult r;
    r.knl = knl;
    r.group = PresentedAb(knl.cols(), *y);
    for (std::size_t j = 0; j < r.group.gen_count(); ++j)
        r.reps.push_back(knl.apply(r.group.generator(j)));
    return r;
}

std::vector<Int> SubquotientResult::coords_from_ambient(const std::vector<Int>& v) const {
    auto y = solve_integer(knl, v);
    require(y.has_value(), "NotInKernel", "vector is not in the kernel lattice");
    return group.coords(*y);
}

PresentedAb cokernel(const PresentedHom& f) {
    IntMatrix rels = f.mat.hstack(f.dst.rels());
    return PresentedAb(f.dst.ambient(), rels);
}

} // namespace tetra
