#pragma once

#include "tetra/int_matrix.hpp"

#include <string>
#include <vector>

namespace tetra {

struct CyclicGroupSpec {
    unsigned n = 1;
};

enum class Ring { Z, F2 };

// Finitely generated module over Z[Z_n]: an integer lattice together with
// the action matrix of the chosen generator. Over F2 the same container
// holds the reduced action and invariants are checked mod 2.
struct ZGModule {
    unsigned n = 1;           // group order
    std::size_t rank = 0;
    IntMatrix action;         // rank x rank, action^n = I (mod 2 when ring == F2)
    std::string label;
    Ring ring = Ring::Z;

    void validate() const;    // throws on broken invariants
};

// name in {trivial, regular, coset2, M, N, L}; M, N, L require n = 4,
// coset2 requires n even.
ZGModule named_module(const std::string& name, CyclicGroupSpec g);

// Z[Z_n / Z_d] as a lattice of cosets with the shift action (d | n).
ZGModule coset_module(CyclicGroupSpec g, unsigned d);

// Rank-1 module with the generator acting by -1.
ZGModule sign_module(CyclicGroupSpec g);

ZGModule direct_sum(const ZGModule& a, const ZGModule& b);

ZGModule mod2_reduce(const ZGModule& m);

// Twist by the sign character: negates the action (rank unchanged).
ZGModule tensor_sign(const ZGModule& m);

// a - I  (first differential of the periodic complex)
IntMatrix action_minus_identity(const ZGModule& m);
// I + a + ... + a^{n-1}
IntMatrix norm_map(const ZGModule& m);

} // namespace tetra
