#include "doctest.h"

#include "tetra/errors.hpp"
#include "tetra/snf.hpp"
#include "tetra/zg_module.hpp"

using namespace tetra;

TEST_CASE("named modules: shapes and action orders") {
    CyclicGroupSpec z4{4};

    auto reg = named_module("regular", z4);
    CHECK(reg.rank == 4);
    // cyclic shift permutation matrix
    for (int i = 0; i < 4; ++i) CHECK(reg.action.at(i, (i + 1) % 4) == 1);
    CHECK(reg.action.pow(4).is_identity());

    auto triv = named_module("trivial", z4);
    CHECK(triv.rank == 1);
    CHECK(triv.action.at(0, 0) == 1);

    auto n = named_module("N", z4);
    CHECK(n.rank == 2);
    CHECK((n.action * n.action) == -IntMatrix::identity(2));
    CHECK(n.action.pow(4).is_identity());

    auto m = named_module("M", z4);
    CHECK(m.rank == 3);
    CHECK(m.action.pow(4).is_identity());

    auto l = named_module("L", z4);
    CHECK(l.rank == 2);

    auto c2 = named_module("coset2", z4);
    CHECK(c2.rank == 2);

    for (const char* name : {"trivial", "regular", "coset2", "M", "N", "L"}) {
        auto mod = named_module(name, z4);
        CHECK(mod.action.pow(4).is_identity());
        Int d = mod.action.determinant();
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("named modules: errors") {
    CHECK_THROWS_WITH_AS(named_module("bogus", CyclicGroupSpec{4}), doctest::Contains("UnknownName"),
                         Error);
    CHECK_THROWS_WITH_AS(named_module("M", CyclicGroupSpec{3}), doctest::Contains("BadOrder"), Error);
    CHECK_THROWS_WITH_AS(named_module("coset2", CyclicGroupSpec{3}), doctest::Contains("BadOrder"),
                         Error);
    CHECK_THROWS_WITH_AS(
        direct_sum(named_module("trivial", CyclicGroupSpec{4}), named_module("trivial", CyclicGroupSpec{2})),
        doctest::Contains("OrderMismatch"), Error);
}

TEST_CASE("direct sums") {
    CyclicGroupSpec z4{4};
    auto t2 = direct_sum(named_module("trivial", z4), named_module("trivial", z4));
    CHECK(t2.rank == 2);
    CHECK(t2.action.is_identity());

    auto big = direct_sum(named_module("M", z4), named_module("coset2", z4));
    CHECK(big.rank == 5);
    // block structure: top-left is M's action, bottom-right coset2's
    CHECK(big.action.at(4, 3) == 1);
    CHECK(big.action.at(3, 4) == 1);
    CHECK(big.action.at(0, 4) == 0);

    ZGModule zero{4, 0, IntMatrix(0, 0), "zero", Ring::Z};
    auto same = direct_sum(named_module("regular", z4), zero);
    CHECK(same.rank == 4);
    CHECK(same.action == named_module("regular", z4).action);
}

TEST_CASE("mod2 reduction") {
    CyclicGroupSpec z4{4};
    auto n2 = mod2_reduce(named_module("N", z4));
    // -1 = 1 mod 2 turns the rotation into the swap permutation
    CHECK(n2.action == IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(n2.action == named_module("coset2", z4).action);

    auto t2 = mod2_reduce(named_module("trivial", z4));
    CHECK(t2.action.is_identity());

    auto r2 = mod2_reduce(named_module("regular", z4));
    CHECK(r2.action == named_module("regular", z4).action);
}

TEST_CASE("M is the regular module modulo the norm sublattice") {
    CyclicGroupSpec z4{4};
    auto reg = named_module("regular", z4);
    // projection regular -> M in the chosen basis: x1,x2,x3 -> e1,e2,e3, x4 -> -(e1+e2+e3)
    IntMatrix proj = IntMatrix::from_rows({{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});
    auto m = named_module("M", z4);
    CHECK(proj * reg.action == m.action * proj);
    // kernel of the projection equals the image of the norm map
    IntMatrix nrm = norm_map(reg);
    IntMatrix ker = kernel_basis(proj);
    REQUIRE(ker.cols() == 1);
    // norm image is spanned by (1,1,1,1)
    IntMatrix norm_col(4, 1);
    for (int i = 0; i < 4; ++i) norm_col.at(i, 0) = 1;
    CHECK(lattice_equal(ker, norm_col));
    CHECK(lattice_contains(norm_col, nrm));
}

TEST_CASE("N embeds equivariantly into the regular module") {
    CyclicGroupSpec z4{4};
    auto n = named_module("N", z4);
    auto reg = named_module("regular", z4);
    // alpha(p, q) = (p, q, -p, -q)
    IntMatrix alpha = IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(alpha * n.action == reg.action * alpha);
    CHECK(kernel_basis(alpha).cols() == 0);
}

TEST_CASE("sign twist and coset modules") {
    CyclicGroupSpec z4{4};
    auto s = sign_module(z4);
    CHECK(s.action.at(0, 0) == -1);
    auto n = named_module("N", z4);
    auto ns = tensor_sign(n);
    CHECK(ns.action == -n.action);
    auto c1 = coset_module(z4, 1);
    CHECK(c1.rank == 4);
    auto c4 = coset_module(z4, 4);
    CHECK(c4.rank == 1);
}
