#include "tetra/cyclic_cohomology.hpp"

#include "tetra/errors.hpp"
#include "tetra/snf.hpp"

#include <cctype>
#include <sstream>

namespace tetra {

// ---------------------------------------------------------------- GenLabel

std::string GenLabel::render() const {
    std::ostringstream os;
    bool neg = coeff < 0;
    long long c = neg ? -coeff : coeff;
    if (neg) os << "-";
    bool wrote_coeff = false;
    if (c != 1) {
        os << c;
        wrote_coeff = true;
    }
    std::vector<std::string> factors;
    if (e) factors.push_back("e");
    if (sym && exp > 0) {
        std::string f(1, sym);
        if (exp > 1) f += "^" + std::to_string(exp);
        factors.push_back(f);
    }
    if (!base.empty()) factors.push_back(base);
    if (factors.empty()) {
        if (!wrote_coeff) os << "1";
        return os.str();
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) os << "*";
        else if (wrote_coeff && factors[i].size() > 1 && factors[i].find('^') == std::string::npos &&
                 factors[i][0] != 'e')
            os << "*"; // 2*Lambda rather than 2Lambda
        os << factors[i];
    }
    return os.str();
}

GenLabel GenLabel::shifted(long i) const {
    GenLabel l = *this;
    l.exp += i;
    return l;
}

bool GenLabel::matches(const GenLabel& o) const {
    return base == o.base && exp == o.exp && e == o.e;
}

GenLabel GenLabel::parse(const std::string& s) {
    GenLabel l;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    require(i < s.size(), "ParseError", "empty generator label");
    bool neg = false;
    if (s[i] == '-') {
        neg = true;
        ++i;
    } else if (s[i] == '+') {
        ++i;
    }
    skip();
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        long long c = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            c = c * 10 + (s[i++] - '0');
        l.coeff = c;
    }
    if (neg) l.coeff = -l.coeff;
    bool expect_factor = true;
    while (i < s.size()) {
        skip();
        if (i >= s.size()) break;
        if (s[i] == '*') {
            ++i;
            expect_factor = true;
            continue;
        }
        require(expect_factor || true, "ParseError", "bad label syntax");
        // read an identifier
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        require(j > i, "ParseError", "unexpected character in label: " + s);
        std::string word = s.substr(i, j - i);
        i = j;
        long ex = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            long v = 0;
            bool any = false;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i++] - '0');
                any = true;
            }
            require(any, "ParseError", "missing exponent in label: " + s);
            ex = v;
        }
        if (word == "e" && !l.e) {
            require(ex == 1, "ParseError", "e carries no exponent (e^2 = 0)");
            l.e = true;
        } else if (word.size() == 1 && (word[0] == 'U' || word[0] == 'T' || word[0] == 'u' || word[0] == 't') &&
                   l.sym == 0) {
            l.sym = word[0];
            l.exp = ex;
        } else if (word == "1" && l.base.empty()) {
            // unit
        } else {
            require(l.base.empty(), "ParseError", "more than one base symbol in label: " + s);
            require(ex == 1, "ParseError", "base symbols carry no exponent: " + s);
            l.base = word;
        }
        expect_factor = false;
    }
    return l;
}

// ---------------------------------------------------------- CochainComplex

CochainComplex CochainComplex::build(const ZGModule& m, int p_max) {
    require(p_max >= 0, "BadOrder", "p_max must be nonnegative");
    CochainComplex c{CyclicGroupSpec{m.n}, m, {}};
    IntMatrix ami = action_minus_identity(m);
    IntMatrix nrm = norm_map(m);
    for (int p = 0; p <= p_max; ++p) c.differentials.push_back(p % 2 == 0 ? ami : nrm);
    return c;
}

void CochainComplex::verify() const {
    for (std::size_t p = 0; p + 1 < differentials.size(); ++p) {
        IntMatrix comp = differentials[p + 1] * differentials[p];
        if (module.ring == Ring::F2)
            require(F2Matrix::from_int(comp).is_zero(), "CompositionNonzero",
                    "d*d != 0 mod 2 at degree " + std::to_string(p));
        else
            require(comp.is_zero(), "CompositionNonzero",
                    "d*d != 0 at degree " + std::to_string(p));
    }
}

// ------------------------------------------------------------ label scheme

GenLabel scheme_label(const std::string& module_label, Coeff coeff, int degree, std::size_t index,
                      std::size_t count) {
    GenLabel l;
    auto generic = [&] {
        GenLabel g;
        g.base = module_label + "#" + std::to_string(index);
        if (degree == 0) {
            g.base += "@0";
        } else if (coeff == Coeff::Z) {
            g.sym = 'U';
            g.exp = (degree - 1) / 2; // same for even: (p-2)/2 when p even >= 2
            if (degree % 2 == 0) g.exp = (degree - 2) / 2;
            g.base += degree % 2 ? "@odd" : "@even";
        } else {
            g.sym = 't';
            g.exp = degree;
        }
        return g;
    };
    if (count != 1) return generic();
    if (coeff == Coeff::Z) {
        if (module_label == "trivial") {
            if (degree % 2 == 0) return GenLabel{"", 'U', degree / 2, false, 1};
        } else if (module_label == "coset2") {
            if (degree % 2 == 0) return GenLabel{"s", 'T', degree / 2, false, 1};
        } else if (module_label == "M") {
            if (degree % 2 == 1) return GenLabel{"Lambda", 'U', (degree - 1) / 2, false, 1};
        } else if (module_label == "N") {
            if (degree % 2 == 1) return GenLabel{"Upsilon", 'T', (degree - 1) / 2, false, 1};
        } else if (module_label == "regular") {
            if (degree == 0) return GenLabel{"z", 0, 0, false, 1};
        } else if (module_label == "L") {
            if (degree % 2 == 0) return GenLabel{"l", 'T', degree / 2, false, 1};
        } else if (module_label == "sign") {
            if (degree % 2 == 1) return GenLabel{"w", 'U', (degree - 1) / 2, false, 1};
        }
        return generic();
    }
    // F2 schemes
    if (module_label == "trivial" || module_label == "trivial mod 2") {
        if (degree % 2 == 0) return GenLabel{"", 'u', degree / 2, false, 1};
        return GenLabel{"", 'u', (degree - 1) / 2, true, 1};
    }
    if (module_label == "coset2" || module_label == "coset2 mod 2")
        return GenLabel{"s", 't', degree, false, 1};
    if (module_label == "M" || module_label == "M mod 2")
        return GenLabel{"mu", 't', degree, false, 1};
    if (module_label == "N" || module_label == "N mod 2")
        return GenLabel{"nu", 't', degree, false, 1};
    if ((module_label == "regular" || module_label == "regular mod 2") && degree == 0)
        return GenLabel{"z", 0, 0, false, 1};
    return generic();
}

// --------------------------------------------------------------- cohomology

const CohDegreeData& CohomologyTable::at(int p) const {
    require(p >= 0 && p <= max_degree(), "DegreeOutOfRange",
            "degree " + std::to_string(p) + " outside the computed table");
    return data_[static_cast<std::size_t>(p)];
}

std::vector<Int> CohomologyTable::coords(int p, const std::vector<Int>& cocycle) const {
    require(p >= 0 && p <= max_degree(), "DegreeOutOfRange", "coords degree out of range");
    if (coeff_ == Coeff::Z) return zmach_[static_cast<std::size_t>(p)].coords(cocycle);
    std::vector<std::uint8_t> v(cocycle.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int r = cocycle[i] % 2;
        v[i] = static_cast<std::uint8_t>(r != 0);
    }
    auto c = fmach_[static_cast<std::size_t>(p)].coords(v);
    std::vector<Int> out(c.begin(), c.end());
    return out;
}

IntMatrix CohomologyTable::u_action(int p) const {
    require(p >= 0 && p + 2 <= max_degree(), "DegreeOutOfRange",
            "u_action needs degrees p and p+2 in the table");
    const auto& src = data_[static_cast<std::size_t>(p)];
    const auto& dst = data_[static_cast<std::size_t>(p + 2)];
    IntMatrix m(dst.gens.size(), src.gens.size());
    for (std::size_t j = 0; j < src.gens.size(); ++j) {
        // periodicity of the complex: a degree-p cocycle is a degree-(p+2)
        // cocycle on the nose, and that inclusion realizes multiplication
        // by the degree-2 class
        auto c = coords(p + 2, src.gens[j].rep);
        for (std::size_t i = 0; i < c.size(); ++i) m.at(i, j) = c[i];
    }
    return m;
}

CohomologyTable cohomology(const ZGModule& m, int p_max, Coeff coeff) {
    require(p_max >= 0, "BadOrder", "p_max must be nonnegative");
    ZGModule mod = (coeff == Coeff::F2 && m.ring == Ring::Z) ? mod2_reduce(m) : m;
    if (coeff == Coeff::Z)
        require(m.ring == Ring::Z, "RingMismatch", "integral cohomology of an F2 module");

    CohomologyTable t;
    t.module_ = mod;
    t.coeff_ = coeff;
    CochainComplex c = CochainComplex::build(mod, p_max);

    std::string scheme_name = m.label; // label before any mod-2 suffix

    for (int p = 0; p <= p_max; ++p) {
        const IntMatrix d_out = c.differentials[static_cast<std::size_t>(p)];
        const IntMatrix d_in =
            p == 0 ? IntMatrix(mod.rank, 0) : c.differentials[static_cast<std::size_t>(p - 1)];
        CohDegreeData deg;
        if (coeff == Coeff::Z) {
            HomologyResult h = homology_at(d_in, d_out);
            deg.group = h.group;
            for (std::size_t j = 0; j < h.group.gen_count(); ++j) {
                Int order = h.sub.group.orders()[j];
                deg.gens.push_back(CohGenerator{GenLabel{}, order, h.generators()[j]});
            }
            t.zmach_.push_back(std::move(h));
            t.fmach_.emplace_back();
        } else {
            F2Subquotient q = f2_subquotient(F2Matrix::from_int(d_in), F2Matrix::from_int(d_out));
            deg.group = FinAbGroup{0, std::vector<Int>(q.dim, Int(2))};
            for (std::size_t j = 0; j < q.dim; ++j) {
                std::vector<Int> rep(q.reps[j].begin(), q.reps[j].end());
                deg.gens.push_back(CohGenerator{GenLabel{}, Int(2), rep});
            }
            t.fmach_.push_back(std::move(q));
            t.zmach_.emplace_back();
        }
        for (std::size_t j = 0; j < deg.gens.size(); ++j)
            deg.gens[j].label = scheme_label(scheme_name, coeff, p, j, deg.gens.size());
        t.data_.push_back(std::move(deg));
    }
    return t;
}

IntMatrix u_action(const ZGModule& m, int p, Coeff coeff, int p_max) {
    CohomologyTable t = cohomology(m, std::max(p + 2, p_max), coeff);
    return t.u_action(p);
}

// ---------------------------------------------------------------- LES check

namespace {

IntMatrix order_rels(const std::vector<Int>& orders) {
    std::size_t k = orders.size();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
        if (orders[i] != 0) idx.push_back(i);
    IntMatrix r(k, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) r.at(idx[c], c) = orders[idx[c]];
    return r;
}

// basis of the column lattice spanned by s
IntMatrix lattice_basis(const IntMatrix& s) {
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

struct Node {
    std::string name;
    std::vector<Int> orders;
};

// lattice (in Z^gens of src node) of the kernel of map `m` into dst node
IntMatrix kernel_lattice(const IntMatrix& m, const Node& src, const Node& dst) {
    IntMatrix rels_dst = order_rels(dst.orders);
    IntMatrix big = m.hstack(-rels_dst);
    IntMatrix k = kernel_basis(big);
    IntMatrix proj = k.submatrix(0, 0, src.orders.size(), k.cols());
    return lattice_basis(proj.hstack(order_rels(src.orders)));
}

IntMatrix image_lattice(const IntMatrix& m, const Node& dst) {
    return lattice_basis(m.hstack(order_rels(dst.orders)));
}

} // namespace

LESReport les_verify(const ZGModule& sub, const ZGModule& big, const IntMatrix& inclusion,
                     int p_max) {
    require(sub.n == big.n, "OrderMismatch", "group orders differ");
    require(sub.ring == Ring::Z && big.ring == Ring::Z, "RingMismatch",
            "long exact sequence verification runs over Z");
    require(inclusion.rows() == big.rank && inclusion.cols() == sub.rank, "BadShape",
            "inclusion shape mismatch");
    require(inclusion * sub.action == big.action * inclusion, "NotEquivariant",
            "inclusion does not intertwine the actions");
    require(kernel_basis(inclusion).cols() == 0, "NotInjective", "inclusion has a kernel");

    PresentedAb quo(big.rank, inclusion);
    LESReport report;
    report.cokernel_shape = quo.group().to_string();
    report.checked_through = p_max;

    auto dS = CochainComplex::build(sub, p_max + 1).differentials;
    auto dB = CochainComplex::build(big, p_max + 1).differentials;

    std::vector<HomologyResult> HS, HB;
    std::vector<SubquotientResult> HQ;
    for (int p = 0; p <= p_max + 1; ++p) {
        IntMatrix in_s = p == 0 ? IntMatrix(sub.rank, 0) : dS[static_cast<std::size_t>(p - 1)];
        IntMatrix in_b = p == 0 ? IntMatrix(big.rank, 0) : dB[static_cast<std::size_t>(p - 1)];
        HS.push_back(homology_at(in_s, dS[static_cast<std::size_t>(p)]));
        HB.push_back(homology_at(in_b, dB[static_cast<std::size_t>(p)]));
        PresentedHom f(quo, quo, dB[static_cast<std::size_t>(p)]);
        HQ.push_back(subquotient(f, in_b));
    }

    auto node_s = [&](int p) { return Node{"H^" + std::to_string(p) + "(sub)", HS[p].sub.group.orders()}; };
    auto node_b = [&](int p) { return Node{"H^" + std::to_string(p) + "(big)", HB[p].sub.group.orders()}; };
    auto node_q = [&](int p) { return Node{"H^" + std::to_string(p) + "(quot)", HQ[p].group.orders()}; };

    // maps on canonical generators
    auto map_i = [&](int p) {
        IntMatrix m(HB[p].group.gen_count(), HS[p].group.gen_count());
        for (std::size_t j = 0; j < HS[p].group.gen_count(); ++j) {
            auto img = inclusion.apply(HS[p].generators()[j]);
            m.set_col(j, HB[p].coords(img));
        }
        return m;
    };
    auto map_pi = [&](int p) {
        IntMatrix m(HQ[p].group.gen_count(), HB[p].group.gen_count());
        for (std::size_t j = 0; j < HB[p].group.gen_count(); ++j)
            m.set_col(j, HQ[p].coords_from_ambient(HB[p].generators()[j]));
        return m;
    };
    auto map_delta = [&](int p) {
        IntMatrix m(HS[p + 1].group.gen_count(), HQ[p].group.gen_count());
        for (std::size_t j = 0; j < HQ[p].group.gen_count(); ++j) {
            std::vector<Int> z = HQ[p].reps[j];
            std::vector<Int> w = dB[static_cast<std::size_t>(p)].apply(z);
            auto x = solve_integer(inclusion, w);
            require(x.has_value(), "NotExact", "connecting map: boundary not in the subcomplex");
            m.set_col(j, HS[p + 1].coords(*x));
        }
        return m;
    };

    auto check_exact = [&](const IntMatrix& f, const Node& a, const Node& b, const IntMatrix& g,
                           const Node& c, const std::string& pos) {
        (void)a;
        // composite vanishes
        IntMatrix comp = g * f;
        for (std::size_t i = 0; i < comp.rows(); ++i)
            for (std::size_t j = 0; j < comp.cols(); ++j) {
                Int v = comp.at(i, j);
                if (c.orders[i] != 0) v %= c.orders[i];
                require(v == 0, "NotExact", pos + ": composite does not vanish");
            }
        IntMatrix im = image_lattice(f, b);
        IntMatrix ker = kernel_lattice(g, b, c);
        require(lattice_equal(im, ker), "NotExact", pos + ": image differs from kernel");
        report.positions.push_back(pos);
    };

    // 0 -> H^0(sub): injectivity of i_0
    {
        IntMatrix i0 = map_i(0);
        Node s0 = node_s(0), b0 = node_b(0);
        IntMatrix ker = kernel_lattice(i0, s0, b0);
        IntMatrix rels = lattice_basis(order_rels(s0.orders));
        require(lattice_equal(ker, rels), "NotExact", "H^0(sub): leading map not injective");
        report.positions.push_back("H^0(sub)");
    }

    for (int p = 0; p <= p_max; ++p) {
        IntMatrix ip = map_i(p), pip = map_pi(p);
        check_exact(ip, node_s(p), node_b(p), pip, node_q(p), "H^" + std::to_string(p) + "(big)");
        if (p < p_max) {
            IntMatrix dp = map_delta(p), inext = map_i(p + 1);
            check_exact(pip, node_b(p), node_q(p), dp, node_s(p + 1),
                        "H^" + std::to_string(p) + "(quot)");
            check_exact(dp, node_q(p), node_s(p + 1), inext, node_b(p + 1),
                        "H^" + std::to_string(p + 1) + "(sub)");
        }
    }
    return report;
}

ShapiroReport shapiro_check(CyclicGroupSpec g, unsigned d, int p_max) {
    require(d >= 1 && g.n % d == 0, "BadOrder", "d must divide n");
    ShapiroReport r;
    CohomologyTable induced = cohomology(coset_module(g, d), p_max, Coeff::Z);
    CohomologyTable down = cohomology(named_module("trivial", CyclicGroupSpec{d}), p_max, Coeff::Z);
    r.match = true;
    for (int p = 0; p <= p_max; ++p) {
        r.induced.push_back(induced.at(p).group);
        r.subgroup.push_back(down.at(p).group);
        if (!(induced.at(p).group == down.at(p).group)) r.match = false;
    }
    return r;
}

} // namespace tetra
