#include "tetra/homology.hpp"

#include "tetra/errors.hpp"

namespace tetra {

HomologyResult homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
    std::size_t n = d_out.cols();
    require(d_in.cols() == 0 || d_in.rows() == n, "BadShape",
            "chain position rank mismatch between d_in and d_out");
    if (d_in.cols() > 0 && d_out.rows() > 0) {
        require((d_out * d_in).is_zero(), "CompositionNonzero",
                "d_out * d_in != 0: maps do not form a complex");
    }

    PresentedHom f(PresentedAb::free_of_rank(n), PresentedAb::free_of_rank(d_out.rows()), d_out);
    IntMatrix img = d_in.cols() ? d_in : IntMatrix(n, 0);
    HomologyResult r;
    r.sub = subquotient(f, img);
    r.group = r.sub.group.group();
    return r;
}

} // namespace tetra
