#pragma once

#include "tetra/abelian.hpp"

namespace tetra {

// ker(d_out) / im(d_in) at the middle of  C_in --d_in--> C --d_out--> C_out.
// Matrices act on column vectors; d_out * d_in must vanish.
struct HomologyResult {
    FinAbGroup group;
    SubquotientResult sub; // canonical generators with ambient representatives

    const std::vector<std::vector<Int>>& generators() const { return sub.reps; }
    std::vector<Int> coords(const std::vector<Int>& cycle) const {
        return sub.coords_from_ambient(cycle);
    }
};

HomologyResult homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

} // namespace tetra
