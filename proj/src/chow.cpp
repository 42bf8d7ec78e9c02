#include "trig/chow.hpp"

#include "trig/error.hpp"

namespace trig {

namespace {

GradedClass var(const PresPtr& p, const char* name) {
    return GradedClass::variable(p, name);
}

PolyQ g_plus(long c) { return polyq_g_plus(c); }

} // namespace

PresPtr delta_presentation(int truncation) {
    auto pres = std::make_shared<Presentation>(
        std::vector<PresVar>{{"delta1", 1},
                             {"delta2", 2},
                             {"gamma1", 1},
                             {"gamma2", 2},
                             {"sigma1", 1},
                             {"sigma2", 2},
                             {"xi", 1}},
        truncation);
    int xi = pres->var_index("xi");
    int s1 = pres->var_index("sigma1");
    int s2 = pres->var_index("sigma2");
    int n = pres->nvars();
    ClassPoly rhs(n);
    ExpVec e1(n, 0);
    e1[s1] = 1;
    e1[xi] = 1;
    rhs.add_term(e1, PolyQ(Rat(-1))); // -sigma1*xi
    ExpVec e2(n, 0);
    e2[s2] = 1;
    rhs.add_term(e2, PolyQ(Rat(-1))); // -sigma2
    pres->add_rule("xi", 2, std::move(rhs));
    return pres;
}

PresPtr w_presentation(int truncation) {
    auto pres = std::make_shared<Presentation>(
        std::vector<PresVar>{
            {"c1", 1}, {"c2", 2}, {"nu1", 1}, {"mu1", 1}},
        truncation);
    int mu = pres->var_index("mu1");
    int c1 = pres->var_index("c1");
    int c2 = pres->var_index("c2");
    int n = pres->nvars();
    ClassPoly rhs(n);
    ExpVec e1(n, 0);
    e1[c1] = 1;
    e1[mu] = 1;
    rhs.add_term(e1, PolyQ(Rat(1))); // c1*mu1
    ExpVec e2(n, 0);
    e2[c2] = 1;
    rhs.add_term(e2, PolyQ(Rat(-1))); // -c2
    pres->add_rule("mu1", 2, std::move(rhs));
    return pres;
}

GradedClass chern_of_twisted_trivial(const PolyQ& n, const GradedClass& e1,
                                     const GradedClass& e2,
                                     const GradedClass& t, int bound) {
    if (bound != 2)
        throw Error(ErrorKind::domain,
                    "twisted Chern expansion is implemented for degree "
                    "bound 2 only");
    PresPtr pres = e1.presentation();
    PolyQ one(Rat(1));
    PolyQ half(Rat(1, 2));
    PolyQ n_minus_1 = n - one;
    PolyQ choose2 = half * (n * n_minus_1);
    GradedClass total = GradedClass::one(pres);
    total = total + e1 + n * t;
    total = total + e2 + n_minus_1 * (e1 * t) + choose2 * (t * t);
    return truncate(total, bound);
}

ChernEPrime chern_E_prime() {
    PresPtr pres = delta_presentation(2);
    GradedClass gamma1 = var(pres, "gamma1");
    GradedClass gamma2 = var(pres, "gamma2");
    GradedClass delta1 = var(pres, "delta1");
    GradedClass delta2 = var(pres, "delta2");
    GradedClass xi = var(pres, "xi");

    ChernEPrime out;
    out.c_o_minus1 =
        chern_of_twisted_trivial(g_plus(2), gamma1, gamma2, -xi, 2);
    out.c_o_minus1_inv = series_inverse(out.c_o_minus1, 2);
    GradedClass c_trivial = GradedClass::one(pres) + delta1 + delta2;
    out.total = reduce(truncate(out.c_o_minus1_inv * c_trivial, 2));
    out.c1 = out.total.degree_part(1);
    out.c2 = out.total.degree_part(2);
    return out;
}

ClassW class_of_W(PresPtr pres) {
    if (!pres) pres = w_presentation(3);
    GradedClass mu1 = var(pres, "mu1");
    GradedClass nu1 = var(pres, "nu1");
    GradedClass c1 = var(pres, "c1");
    GradedClass c2 = var(pres, "c2");

    ClassW out;
    // c3 of A^1 (+) A^2 from the equivariant weights: the A^2 factor has
    // c2 - 2 c1 mu1 + 4 mu1^2, the A^1 factor -c1 + nu1 + 3 mu1.
    out.c3_unreduced =
        (c2 - 2 * (c1 * mu1) + 4 * (mu1 * mu1)) * (-c1 + nu1 + 3 * mu1);
    out.intermediate = reduce(out.c3_unreduced);
    out.final_class = pushforward_p1(out.intermediate, "mu1");
    return out;
}

ClassY class_of_Y() {
    ClassW w = class_of_W();
    ChernEPrime ce = chern_E_prime();
    PresPtr dpres = ce.total.presentation();

    GradedClass xi = var(dpres, "xi");
    GradedClass sigma1 = var(dpres, "sigma1");
    GradedClass mu1_image = GradedClass::zero(dpres); // mu1 never survives
    GradedClass nu1_image = -(2 * xi) - sigma1;

    // image order must match the w-presentation variable order
    std::vector<GradedClass> images{ce.c1, ce.c2, nu1_image, mu1_image};
    GradedClass pulled = substitute(w.final_class, dpres, images);

    ClassY out;
    out.y_tilde = reduce(pulled);
    GradedClass pushed = pushforward_p1(out.y_tilde, "xi");

    // the pushforward must be pure degree 1 in delta1, gamma1, sigma1
    if (!(pushed == pushed.degree_part(1)))
        throw Error(ErrorKind::domain,
                    "class of Y is not of pure degree 1");
    for (const auto& [e, c] : pushed.poly().terms()) {
        int d1 = dpres->var_index("delta1");
        int g1 = dpres->var_index("gamma1");
        int s1 = dpres->var_index("sigma1");
        for (int v = 0; v < dpres->nvars(); ++v) {
            if (e[v] != 0 && v != d1 && v != g1 && v != s1)
                throw Error(ErrorKind::domain,
                            "class of Y leaves the delta1/gamma1/sigma1 "
                            "lattice");
        }
        (void)c;
    }
    out.y.delta1 = pushed.coefficient_of_var("delta1");
    out.y.gamma1 = pushed.coefficient_of_var("gamma1");
    out.y.sigma1 = pushed.coefficient_of_var("sigma1");
    return out;
}

PolyQ restriction_to_gm(const LatticeClass& c) {
    // delta1 -> 0, gamma1 -> (g+2) tau, sigma1 -> -2 tau
    return c.gamma1 * g_plus(2) - PolyQ(Rat(2)) * c.sigma1;
}

KernelCoords kernel_coordinates(const LatticeClass& c, long g) {
    Rat gr(g);
    Rat d1 = c.delta1.eval(gr);
    Rat g1 = c.gamma1.eval(gr);
    Rat s1 = c.sigma1.eval(gr);

    auto as_int = [](const Rat& x, const char* what) {
        if (!is_integer(x))
            throw Error(ErrorKind::not_in_kernel,
                        std::string(what) + " coordinate is not an integer");
        return Int(x.get_num());
    };

    Int a = as_int(d1, "delta1");
    Rat b_rat;
    Rat expected_s1;
    if (g % 2 != 0) {
        // q1 = (g+2) sigma1 + 2 gamma1
        b_rat = g1 / Rat(2);
        expected_s1 = b_rat * Rat(g + 2);
    } else {
        // q1 = (g+2)/2 sigma1 + gamma1
        b_rat = g1;
        expected_s1 = b_rat * Rat(g + 2) / Rat(2);
    }
    if (!is_integer(b_rat))
        throw Error(ErrorKind::not_in_kernel,
                    "gamma1 coordinate does not lie on the q1 lattice");
    if (expected_s1 != s1)
        throw Error(ErrorKind::not_in_kernel,
                    "class is not in the kernel of the restriction to G_m");
    return KernelCoords{a, Int(b_rat.get_num())};
}

PicardGroup picard_group(long g) {
    if (g < 2) throw contract_error("picard_group needs genus g >= 2");
    static const ClassY y = class_of_Y(); // symbolic, computed once
    KernelCoords kc = kernel_coordinates(y.y, g);

    IntMat m(2, 1);
    m.at(0, 0) = kc.a;
    m.at(1, 0) = kc.b;
    AbelianGroup grp = cokernel_structure(m);

    PicardGroup out;
    out.free_rank = grp.free_rank;
    out.torsion = grp.torsion;
    out.coords = kc;
    return out;
}

std::vector<PicardRow> picard_table(long from, long to) {
    std::vector<PicardRow> rows;
    for (long g = from; g <= to; ++g) {
        PicardGroup p = picard_group(g);
        rows.push_back(PicardRow{g, p.coords.a, p.coords.b, p.free_rank,
                                 p.torsion});
    }
    return rows;
}

long section_space_dim(long m, long n) {
    long degs[4] = {2 * m - n, m, n, 2 * n - m};
    long dim = 0;
    for (long d : degs)
        if (d >= 0) dim += d + 1;
    return dim;
}

std::string group_string(int free_rank, const std::vector<Int>& torsion) {
    std::string s;
    for (int i = 0; i < free_rank; ++i) {
        if (!s.empty()) s += "+";
        s += "Z";
    }
    for (const Int& t : torsion) {
        if (!s.empty()) s += "+";
        s += "Z/" + t.get_str();
    }
    if (s.empty()) s = "0";
    return s;
}

} // namespace trig
