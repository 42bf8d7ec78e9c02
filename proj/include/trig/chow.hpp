#pragma once

#include <utility>

#include "trig/graded.hpp"
#include "trig/rational.hpp"
#include "trig/snf.hpp"

namespace trig {

/// Equivariant classes for the GL_{g+4} x GL_{g+2} x GL_2 computation,
/// working on the P^1-bundle side: delta1, delta2, gamma1, gamma2,
/// sigma1, sigma2 and the fiber class xi with xi^2 = -sigma1*xi - sigma2.
/// Only degrees <= 2 are ever needed, so higher Chern classes of the two
/// big factors are never materialized.
PresPtr delta_presentation(int truncation = 2);

/// Classes for the singular-locus computation upstairs: mu1 (the P^1 fiber
/// class there), nu1, c1, c2 with mu1^2 = c1*mu1 - c2. Needs degree 3.
PresPtr w_presentation(int truncation = 3);

/// Total Chern class, truncated at degree 2, of a rank-n bundle with
/// elementary classes (e1, e2) twisted by a line class t:
/// 1 + (e1 + n t) + (e2 + (n-1) e1 t + C(n,2) t^2), n in Q[g].
GradedClass chern_of_twisted_trivial(const PolyQ& n, const GradedClass& e1,
                                     const GradedClass& e2,
                                     const GradedClass& t, int bound = 2);

struct ChernEPrime {
    GradedClass c_o_minus1;     // c(O(-1)^(g+2)), before the xi rewrite
    GradedClass c_o_minus1_inv; // its series inverse, before the rewrite
    GradedClass total;          // c(E'_g), reduced
    GradedClass c1;             // degree-1 part
    GradedClass c2;             // degree-2 part
};

/// The total Chern class of the tautological rank-2 quotient bundle,
/// c(O(-1)^(g+2))^{-1} * c(O^(g+4)), with intermediates exposed.
ChernEPrime chern_E_prime();

struct ClassW {
    GradedClass c3_unreduced; // (c2 - 2 c1 mu1 + 4 mu1^2)(-c1 + nu1 + 3 mu1)
    GradedClass intermediate; // reduced: -3c1c2 - 3c2 nu1 + (...)mu1
    GradedClass final_class;  // pushforward: 4c1^2 - 9c2 + 2c1 nu1
};

/// Class of the locus of first-order-singular covers, from the equivariant
/// weights of the evaluation map, reduced and pushed down the fiber.
ClassW class_of_W(PresPtr pres = nullptr);

/// Degree-1 class in the free abelian group on delta1, gamma1, sigma1,
/// with Q[g] coordinates.
struct LatticeClass {
    PolyQ delta1;
    PolyQ gamma1;
    PolyQ sigma1;
};

struct ClassY {
    GradedClass y_tilde; // class upstairs, xi-linear after reduction
    LatticeClass y;      // pushforward coordinates
};

/// Pullback of the W class through nu1 -> -2xi - sigma1 and the Chern
/// classes of the quotient bundle, reduced, then pushed forward along xi.
ClassY class_of_Y();

/// Image in the character lattice of the one-parameter subgroup:
/// delta1 -> 0, gamma1 -> (g+2) tau, sigma1 -> -2 tau. Returns the tau
/// coefficient as a polynomial in g.
PolyQ restriction_to_gm(const LatticeClass& c);

/// q1 = (g+2) sigma1 + 2 gamma1 (g odd) or (g+2)/2 sigma1 + gamma1 (g even),
/// with g instantiated.
struct KernelCoords {
    Int a; // coefficient of delta1
    Int b; // coefficient of q1
};

/// Solve c = a*delta1 + b*q1 exactly over Z at a concrete genus.
/// Errors with not-in-kernel if no integer solution exists.
KernelCoords kernel_coordinates(const LatticeClass& c, long g);

struct PicardGroup {
    int free_rank = 0;
    std::vector<Int> torsion;
    KernelCoords coords;
};

/// Picard group of the stack of trigonal curves of genus g >= 2, computed
/// as Z^2 / <(a, b)> via Smith normal form.
PicardGroup picard_group(long g);

struct PicardRow {
    long g;
    Int a;
    Int b;
    int free_rank;
    std::vector<Int> torsion;
};

std::vector<PicardRow> picard_table(long from, long to);

/// dim H^0 of the twisted cubic bundle for splitting type (m, n):
/// sum of (d_i + 1) over the nonnegative degrees (2m-n, m, n, 2n-m).
long section_space_dim(long m, long n);

std::string group_string(int free_rank, const std::vector<Int>& torsion);

} // namespace trig
