#include "tetra/zg_module.hpp"

#include "tetra/errors.hpp"
#include "tetra/mod2.hpp"

namespace tetra {

void ZGModule::validate() const {
    require(action.rows() == rank && action.cols() == rank, "BadShape",
            "action matrix must be rank x rank");
    if (rank == 0) return;
    if (ring == Ring::Z) {
        require(action.pow(n).is_identity(), "BadOrder",
                "action^n != I for module " + label);
        Int d = action.determinant();
        require(d == 1 || d == -1, "BadOrder", "action not unimodular for " + label);
    } else {
        F2Matrix a = F2Matrix::from_int(action);
        F2Matrix p = F2Matrix::identity(rank);
        for (unsigned i = 0; i < n; ++i) p = p * a;
        require(p == F2Matrix::identity(rank), "BadOrder",
                "action^n != I mod 2 for module " + label);
    }
}

namespace {

ZGModule make(unsigned n, IntMatrix a, std::string label, Ring ring = Ring::Z) {
    ZGModule m{n, a.rows(), std::move(a), std::move(label), ring};
    m.validate();
    return m;
}

IntMatrix cyclic_shift(std::size_t k) {
    // coordinate shift (x_1,...,x_k) -> (x_2,...,x_k,x_1); the direction is
    // fixed so that (p,q) -> (p,q,-p,-q) intertwines N with the regular module
    IntMatrix s(k, k);
    for (std::size_t i = 0; i < k; ++i) s.at(i, (i + 1) % k) = 1;
    return s;
}

} // namespace

ZGModule coset_module(CyclicGroupSpec g, unsigned d) {
    require(d >= 1 && g.n % d == 0, "BadOrder", "coset order must divide the group order");
    unsigned k = g.n / d;
    return make(g.n, cyclic_shift(k), "coset" + std::to_string(d));
}

ZGModule sign_module(CyclicGroupSpec g) {
    require(g.n % 2 == 0, "BadOrder", "sign character needs even order");
    IntMatrix a(1, 1);
    a.at(0, 0) = -1;
    return make(g.n, a, "sign");
}

ZGModule named_module(const std::string& name, CyclicGroupSpec g) {
    require(g.n >= 1, "BadOrder", "group order must be positive");
    if (name == "trivial") {
        return make(g.n, IntMatrix::identity(1), "trivial");
    }
    if (name == "regular") {
        return make(g.n, cyclic_shift(g.n), "regular");
    }
    if (name == "coset2") {
        require(g.n % 2 == 0, "BadOrder", "coset2 needs even group order");
        ZGModule m = coset_module(g, 2);
        m.label = "coset2";
        return m;
    }
    if (name == "M") {
        require(g.n == 4, "BadOrder", "M is defined for order 4");
        // regular module modulo the norm sublattice; basis = classes of
        // x1, x2, x3 with x4 = -(x1 + x2 + x3)
        IntMatrix a = IntMatrix::from_rows({{-1, 1, 0}, {-1, 0, 1}, {-1, 0, 0}});
        return make(4, a, "M");
    }
    if (name == "N") {
        require(g.n == 4, "BadOrder", "N is defined for order 4");
        // (a, b) -> (b, -a)
        IntMatrix a = IntMatrix::from_rows({{0, 1}, {-1, 0}});
        return make(4, a, "N");
    }
    if (name == "L") {
        require(g.n == 4, "BadOrder", "L is defined for order 4");
        // regular mod the embedded copy of N; classes of x1, x2 swap
        IntMatrix a = IntMatrix::from_rows({{0, 1}, {1, 0}});
        return make(4, a, "L");
    }
    fail("UnknownName", "unknown module name: " + name);
}

ZGModule direct_sum(const ZGModule& a, const ZGModule& b) {
    require(a.n == b.n, "OrderMismatch", "direct sum needs matching group order");
    require(a.ring == b.ring, "OrderMismatch", "direct sum needs matching coefficient ring");
    if (a.rank == 0) return b;
    if (b.rank == 0) return a;
    IntMatrix c(a.rank + b.rank, a.rank + b.rank);
    for (std::size_t i = 0; i < a.rank; ++i)
        for (std::size_t j = 0; j < a.rank; ++j) c.at(i, j) = a.action.at(i, j);
    for (std::size_t i = 0; i < b.rank; ++i)
        for (std::size_t j = 0; j < b.rank; ++j) c.at(a.rank + i, a.rank + j) = b.action.at(i, j);
    ZGModule m{a.n, a.rank + b.rank, c, a.label + "+" + b.label, a.ring};
    m.validate();
    return m;
}

ZGModule mod2_reduce(const ZGModule& m) {
    ZGModule r{m.n, m.rank, m.action.mod(2), m.label + " mod 2", Ring::F2};
    r.validate();
    return r;
}

ZGModule tensor_sign(const ZGModule& m) {
    require(m.n % 2 == 0, "BadOrder", "sign twist needs even order");
    ZGModule r{m.n, m.rank, -m.action, m.label + "(-)", m.ring};
    r.validate();
    return r;
}

IntMatrix action_minus_identity(const ZGModule& m) {
    return m.action - IntMatrix::identity(m.rank);
}

IntMatrix norm_map(const ZGModule& m) {
    IntMatrix s(m.rank, m.rank);
    IntMatrix p = IntMatrix::identity(m.rank);
    for (unsigned i = 0; i < m.n; ++i) {
        s = s + p;
        p = p * m.action;
    }
    return s;
}

} // namespace tetra
