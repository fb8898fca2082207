#pragma once

#include "tetra/homology.hpp"
#include "tetra/mod2.hpp"
#include "tetra/zg_module.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tetra {

// Coefficients of cohomology reuse the module ring tag.
using Coeff = Ring;

// Structured generator name: coeff * e^{0|1} * sym^exp * base, e.g.
// "U^2", "T^3*s", "U*Lambda", "e*u^2", "2U^2". Rule selectors match entry
// generators on (base, exp, e); the power symbol is cosmetic.
struct GenLabel {
    std::string base;
    char sym = 0;
    long exp = 0;
    bool e = false;
    long long coeff = 1;

    std::string render() const;
    GenLabel shifted(long i) const;
    bool matches(const GenLabel& o) const;
    static GenLabel parse(const std::string& s);
};

struct CohGenerator {
    GenLabel label;
    Int order;             // 0 = infinite
    std::vector<Int> rep;  // representative cocycle in lattice coordinates
};

struct CohDegreeData {
    FinAbGroup group;
    std::vector<CohGenerator> gens;
};

struct CochainComplex {
    CyclicGroupSpec group;
    ZGModule module;
    std::vector<IntMatrix> differentials; // d^p: C^p -> C^{p+1}, p = 0..p_max

    static CochainComplex build(const ZGModule& m, int p_max);
    void verify() const; // consecutive composites vanish
};

// Degrees 0..p_max of H^p(Z_n; module) computed from the 2-periodic
// resolution: d alternates (A - I) and the norm. Keeps enough data to map
// arbitrary cocycles to canonical generator coordinates.
class CohomologyTable {
public:
    Coeff coefficients() const { return coeff_; }
    int max_degree() const { return static_cast<int>(data_.size()) - 1; }
    const CohDegreeData& at(int p) const;
    const ZGModule& module() const { return module_; }

    // coordinates of a degree-p cocycle in the canonical generators
    std::vector<Int> coords(int p, const std::vector<Int>& cocycle) const;

    // matrix of multiplication by the degree-2 polynomial generator,
    // H^p -> H^{p+2}, in canonical bases
    IntMatrix u_action(int p) const;

    friend CohomologyTable cohomology(const ZGModule&, int, Coeff);

private:
    ZGModule module_;
    Coeff coeff_ = Coeff::Z;
    std::vector<CohDegreeData> data_;
    std::vector<HomologyResult> zmach_; // per degree, when coeff == Z
    std::vector<F2Subquotient> fmach_;  // per degree, when coeff == F2
};

CohomologyTable cohomology(const ZGModule& m, int p_max, Coeff coeff);

// Multiplication by the degree-2 generator as a standalone operation.
IntMatrix u_action(const ZGModule& m, int p, Coeff coeff = Coeff::Z, int p_max = 12);

// Long-exact-sequence verification for 0 -> sub -> big -> big/sub -> 0.
// The quotient may have torsion; its cohomology is computed from the
// presented quotient complex. Throws NotExact(position) on failure.
struct LESReport {
    std::string cokernel_shape;         // canonical form of big/sub in degree 0
    std::vector<std::string> positions; // verified exactness positions
    int checked_through = 0;
};

LESReport les_verify(const ZGModule& sub, const ZGModule& big, const IntMatrix& inclusion,
                     int p_max);

// Coset-module cohomology over Z_n versus trivial coefficients over Z_d.
struct ShapiroReport {
    bool match = false;
    std::vector<FinAbGroup> induced;   // H^p(Z_n; Z[Z_n/Z_d])
    std::vector<FinAbGroup> subgroup;  // H^p(Z_d; Z)
};

ShapiroReport shapiro_check(CyclicGroupSpec g, unsigned d, int p_max = 12);

// Label scheme used across the toolkit for the recurring modules.
GenLabel scheme_label(const std::string& module_label, Coeff coeff, int degree, std::size_t index,
                      std::size_t count);

} // namespace tetra
