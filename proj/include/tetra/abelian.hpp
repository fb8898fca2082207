#pragma once

#include "tetra/int_matrix.hpp"
#include "tetra/snf.hpp"

#include <string>
#include <vector>

namespace tetra {

// Canonical form of a finitely generated abelian group: free rank plus the
// invariant-factor chain d1 | d2 | ... (each >= 2). Equality is structural.
struct FinAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    static FinAbGroup free_of_rank(std::size_t r) { return FinAbGroup{r, {}}; }
    static FinAbGroup cyclic(const Int& n);
    // Cokernel shape from SNF diagonal entries inside an ambient of given rank.
    static FinAbGroup from_diagonal(const std::vector<Int>& diag, std::size_t ambient_rank);

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::size_t gen_count() const { return free_rank + torsion.size(); }
    // 0 means infinite.
    Int order() const;
    bool operator==(const FinAbGroup& o) const = default;
    std::string to_string() const;
};

// A f.g. abelian group presented as Z^ambient / <columns of rels>, with the
// canonical decomposition precomputed: generators are vectors in Z^ambient,
// each with an order (0 = infinite), listed torsion-first in chain order.
class PresentedAb {
public:
    PresentedAb() = default;
    PresentedAb(std::size_t ambient, IntMatrix rels);

    static PresentedAb free_of_rank(std::size_t n) { return PresentedAb(n, IntMatrix(n, 0)); }

    std::size_t ambient() const { return ambient_; }
    const IntMatrix& rels() const { return rels_; }
    const FinAbGroup& group() const { return group_; }
    std::size_t gen_count() const { return orders_.size(); }
    const std::vector<Int>& orders() const { return orders_; }
    const std::vector<Int>& generator(std::size_t i) const { return gens_[i]; }

    // Coordinates of the class of v in the canonical generator basis,
    // torsion coordinates reduced to [0, d).
    std::vector<Int> coords(const std::vector<Int>& v) const;

    // Is the class of v zero?
    bool is_zero_class(const std::vector<Int>& v) const;

private:
    std::size_t ambient_ = 0;
    IntMatrix rels_;
    FinAbGroup group_;
    std::vector<Int> orders_;             // per canonical generator
    std::vector<std::vector<Int>> gens_;  // ambient-coordinates representatives
    IntMatrix snf_left_;                  // canonical coordinates = snf_left_ * x
    std::vector<std::size_t> keep_;       // surviving y-indices (order != 1)
};

// A homomorphism between presented groups, given on ambient coordinates.
// Well-definedness (mat * rels(src) inside rels(dst) lattice) is checked.
struct PresentedHom {
    PresentedAb src, dst;
    IntMatrix mat; // dst.ambient x src.ambient

    PresentedHom(PresentedAb s, PresentedAb d, IntMatrix m);

    // Matrix of the map in canonical generator bases (entries well defined
    // modulo the target orders).
    IntMatrix on_generators() const;

    bool is_zero() const;
};

// ker(f)/im(image_cols) as a presented group. knl holds a basis of the
// kernel lattice in src-ambient coordinates; generator representatives and
// class coordinates of kernel vectors are expressed through it.
struct SubquotientResult {
    PresentedAb group;                  // on Z^(knl cols)
    IntMatrix knl;                      // src.ambient x k kernel-lattice basis
    std::vector<std::vector<Int>> reps; // generator representatives, src ambient

    std::vector<Int> coords_from_ambient(const std::vector<Int>& v) const;
};

// ker(f) / im(g), where g maps into src of f and f∘g = 0 (checked).
// Pass g with zero columns for a plain kernel; pass f zero for a cokernel.
SubquotientResult subquotient(const PresentedHom& f, const IntMatrix& image_cols);

// Cokernel dst / (im f + rels): presented on dst ambient.
PresentedAb cokernel(const PresentedHom& f);

} // namespace tetra
