#include "doctest.h"

#include "trig/binary_form.hpp"
#include "trig/matrix.hpp"
#include "trig/rng.hpp"
#include "trig/snf.hpp"

using namespace trig;

TEST_CASE("kernel bases over a field") {
    Mat<Rat> z(2, 2);
    auto b1 = kernel_basis(z, Rat(1));
    CHECK(b1.size() == 2);

    Mat<Rat> id(2, 2);
    id.at(0, 0) = Rat(1);
    id.at(1, 1) = Rat(1);
    CHECK(kernel_basis(id, Rat(1)).empty());

    Mat<Rat> m(2, 2);
    m.at(0, 0) = Rat(1);
    m.at(0, 1) = Rat(1);
    m.at(1, 0) = Rat(2);
    m.at(1, 1) = Rat(2);
    auto b3 = kernel_basis(m, Rat(1));
    REQUIRE(b3.size() == 1);
    // spanned by (1, -1)
    CHECK(b3[0][0] * Rat(-1) == b3[0][1]);
    CHECK(!is_zero(b3[0][0]));

    // kernel vectors really are in the kernel, randomized
    Rng rng(99);
    for (int it = 0; it < 50; ++it) {
        int rows = 1 + rng.below(4), cols = 1 + rng.below(5);
        Mat<Fp> a(static_cast<int>(rows), static_cast<int>(cols));
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) a.at(i, j) = rng.fp(101);
        auto basis = kernel_basis(a, Fp(1, 101));
        CHECK(static_cast<int>(basis.size()) ==
              a.cols() - rank(a));
        for (const auto& v : basis) {
            for (int i = 0; i < a.rows(); ++i) {
                Fp acc(0, 101);
                for (int j = 0; j < a.cols(); ++j)
                    acc += a.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

namespace {

Int det_int(const IntMat& m) {
    REQUIRE(m.rows() == m.cols());
    std::vector<Int> a;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
    return det_dense(a, m.rows());
}

IntMat column(std::vector<long> v) {
    IntMat m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

} // namespace

TEST_CASE("smith normal form: pinned small cases") {
    auto s1 = smith_normal_form(column({-9, 9}));
    REQUIRE(s1.diag.size() == 1);
    CHECK(s1.diag[0] == 9);

    IntMat id(2, 2);
    id.at(0, 0) = 1;
    id.at(1, 1) = 1;
    auto s2 = smith_normal_form(id);
    REQUIRE(s2.diag.size() == 2);
    CHECK(s2.diag[0] == 1);
    CHECK(s2.diag[1] == 1);

    auto s3 = smith_normal_form(column({-8, 17}));
    REQUIRE(s3.diag.size() == 1);
    CHECK(s3.diag[0] == 1);
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(314);
    for (int it = 0; it < 60; ++it) {
        int rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        IntMat m(static_cast<int>(rows), static_cast<int>(cols));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = rng.range(-30, 30);
        auto s = smith_normal_form(m);

        // U*M*V equals the diagonal exactly
        IntMat prod = s.U * m * s.V;
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j) {
                Int expect = 0;
                if (i == j && i < static_cast<int>(s.diag.size()))
                    expect = s.diag[i];
                CHECK(prod.at(i, j) == expect);
            }

        // unimodularity
        CHECK(abs(det_int(s.U)) == 1);
        CHECK(abs(det_int(s.V)) == 1);

        // nonnegative divisibility chain
        for (std::size_t i = 0; i < s.diag.size(); ++i) {
            CHECK(s.diag[i] > 0);
            if (i + 1 < s.diag.size())
                CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
    }
}

TEST_CASE("cokernel structure") {
    // Z^2 / <(2, 0)> = Z + Z/2
    IntMat m(2, 1);
    m.at(0, 0) = 2;
    m.at(1, 0) = 0;
    auto g = cokernel_structure(m);
    CHECK(g.free_rank == 1);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == 2);
}
