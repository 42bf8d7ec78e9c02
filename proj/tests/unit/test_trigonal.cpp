#include "doctest.h"

#include "trig/rng.hpp"
#include "trig/miranda.hpp"
#include "trig/trigonal.hpp"

using namespace trig;

namespace {

BinaryForm<Rat> form(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return BinaryForm<Rat>(static_cast<int>(c.size()) - 1, std::move(v));
}

// the family x1^2 x2 - t^2 x2^3 on chart 0, with splitting type (m, n)
TrigonalDatum<Rat> node_family(long m, long n) {
    long d1 = m;         // phi1 = t0^d1
    long d3 = 2 * n - m; // phi3 = -t1^2 t0^(d3-2)
    BinaryForm<Rat> phi1(static_cast<int>(d1));
    phi1.coeff(0) = Rat(1);
    BinaryForm<Rat> phi3(static_cast<int>(d3));
    phi3.coeff(2) = Rat(-1);
    return TrigonalDatum<Rat>(
        m, n, {BinaryForm<Rat>(0), phi1, BinaryForm<Rat>(0), phi3});
}

} // namespace

TEST_CASE("datum constructor enforces the degree pattern") {
    // (m, n) = (0, 1): degrees (-1, 0, 1, 2); negative ones must vanish
    auto d = node_family(0, 1);
    CHECK(d.degrees()[0] == -1);
    CHECK(d.phi[0].is_zero_form());
    CHECK(d.genus() == -1);

    CHECK_THROWS_AS(
        TrigonalDatum<Rat>(2, 1,
                           {BinaryForm<Rat>(0), BinaryForm<Rat>(0),
                            BinaryForm<Rat>(0), BinaryForm<Rat>(0)}),
        Error);
    // phi0 of negative prescribed degree must be zero
    CHECK_THROWS_AS(
        TrigonalDatum<Rat>(0, 1,
                           {form({1}), form({1}), BinaryForm<Rat>(1),
                            BinaryForm<Rat>(2)}),
        Error);
    // wrong declared degree
    CHECK_THROWS_AS(
        TrigonalDatum<Rat>(2, 2,
                           {form({1, 1, 1}), form({1, 1}), form({1, 1, 1}),
                            form({1, 1, 1})}),
        Error);
}

TEST_CASE("restriction to a base point gives the first-order cubic") {
    auto d = node_family(2, 2);
    auto v0 = restrict_to_base_point(d, Rat(0));
    CHECK(v0.f == form({0, 1, 0, 0}));
    CHECK(v0.g.is_zero_form());
    auto v2 = restrict_to_base_point(d, Rat(2));
    CHECK(v2.f == form({0, 1, 0, -4}));
    CHECK(v2.g == form({0, 0, 0, -4})); // d/dt(-t^2) at t = 2
}

TEST_CASE("node family with (m,n) = (0,1): exactly one singular point") {
    auto d = node_family(0, 1);
    auto v = smooth_check(d);
    CHECK(!v.smooth);
    CHECK(!v.everywhere_singular);
    REQUIRE(v.points.size() == 1);
    CHECK(v.points[0].base.str() == "(1:0)"); // t = 0
    REQUIRE(v.points[0].fiber.size() == 1);
    CHECK(v.points[0].fiber[0].str() == "(0:1)");

    // pointwise cross-check on chart 0
    for (long t = -3; t <= 3; ++t) {
        bool expected = (t == 0);
        CHECK(in_W(restrict_to_base_point(d, Rat(t))).in_w == expected);
    }
}

TEST_CASE("node family with m = n is also singular over infinity") {
    // the balanced datum forces phi3 = -t1^2, and over (0:1) the fiber
    // degenerates to -x2^3 with vanishing first-order term: an ordinary
    // triple point where the three sheets meet
    auto d = node_family(2, 2);
    auto chart1 = tridetail::chart_forms(d, 1);
    auto at_inf = tridetail::fiber_at(chart1, Rat(0));
    CHECK(at_inf.f == form({0, 0, 0, -1}));
    CHECK(at_inf.g.is_zero_form());
    CHECK(in_W(at_inf).in_w);

    auto v1 = smooth_check(d);
    CHECK(!v1.smooth);
    REQUIRE(v1.points.size() == 2);
    CHECK(v1.points[0].base.str() == "(1:0)");
    CHECK(v1.points[0].fiber[0].str() == "(0:1)");
    CHECK(v1.points[1].base.str() == "(0:1)");
    CHECK(v1.points[1].fiber[0].str() == "(1:0)");
}

TEST_CASE("constant etale family is smooth") {
    // F = x1^3 - x2^3, constant in t, with m = n = 0
    TrigonalDatum<Rat> d(0, 0,
                         {form({1}), form({0}), form({0}), form({-1})});
    auto v = smooth_check(d);
    CHECK(v.smooth);
    CHECK(v.points.empty());
}

TEST_CASE("constant nodal family is singular everywhere") {
    // F = x1^2 x2 constant in t
    TrigonalDatum<Rat> d(0, 0,
                         {form({0}), form({1}), form({0}), form({0})});
    auto v = smooth_check(d);
    CHECK(!v.smooth);
    CHECK(v.everywhere_singular);
}

TEST_CASE("zero section is rejected") {
    TrigonalDatum<Rat> d(0, 0,
                         {form({0}), form({0}), form({0}), form({0})});
    CHECK_THROWS_AS(smooth_check(d), Error);
}

TEST_CASE("smooth_check agrees with pointwise sampling on random data") {
    Rng rng(8833);
    int checked = 0;
    for (int it = 0; it < 50; ++it) {
        long m = 1 + rng.below(2), extra = rng.below(2);
        long n = m + extra;
        std::array<long, 4> degs{2 * m - n, m, n, 2 * n - m};
        std::array<BinaryForm<Rat>, 4> phi{
            BinaryForm<Rat>(0), BinaryForm<Rat>(0), BinaryForm<Rat>(0),
            BinaryForm<Rat>(0)};
        for (int i = 0; i < 4; ++i) {
            if (degs[i] < 0) continue;
            BinaryForm<Rat> f(static_cast<int>(degs[i]));
            for (int j = 0; j <= f.degree(); ++j)
                f.coeff(j) = rng.rat(3, 1);
            phi[i] = f;
        }
        TrigonalDatum<Rat> d(m, n, phi);
        if (d.is_zero_section()) continue;
        auto v = smooth_check(d);
        for (int s = 0; s < 50; ++s) {
            Rat t = rng.rat(6, 2);
            bool w = in_W(restrict_to_base_point(d, t)).in_w;
            bool listed = v.everywhere_singular;
            for (const auto& pt : v.points)
                if (pt.base.same_point(ProjPoint<Rat>(Rat(1), t)))
                    listed = true;
            CHECK(w == listed);
            ++checked;
        }
        // structural metadata consistency
        auto info = genus_and_maroni(m, n);
        CHECK(info.g == d.genus());
    }
    CHECK(checked >= 50 * 40);
}

TEST_CASE("smooth_check matches an exhaustive sweep over F_5") {
    // every rational base point of chart 0 checked pointwise
    const std::uint64_t p = 5;
    Rng rng(4242);
    int data_checked = 0;
    for (int it = 0; it < 40; ++it) {
        long m = 1 + rng.below(2);
        long n = m + rng.below(2);
        std::array<long, 4> degs{2 * m - n, m, n, 2 * n - m};
        std::array<BinaryForm<Fp>, 4> phi{
            BinaryForm<Fp>(0), BinaryForm<Fp>(0), BinaryForm<Fp>(0),
            BinaryForm<Fp>(0)};
        bool zero = true;
        for (int i = 0; i < 4; ++i) {
            if (degs[i] < 0) continue;
            BinaryForm<Fp> f(static_cast<int>(degs[i]));
            for (int j = 0; j <= f.degree(); ++j) f.coeff(j) = rng.fp(p);
            if (!f.is_zero_form()) zero = false;
            phi[i] = f;
        }
        if (zero) continue;
        TrigonalDatum<Fp> d(m, n, phi);
        auto v = smooth_check(d);
        auto forms0 = tridetail::chart_forms(d, 0);
        for (std::uint64_t t = 0; t < p; ++t) {
            Fp tv(t, p);
            bool w = in_W(tridetail::fiber_at(forms0, tv)).in_w;
            bool listed = v.everywhere_singular;
            for (const auto& pt : v.points)
                if (pt.base.same_point(ProjPoint<Fp>(Fp(1, p), tv)))
                    listed = true;
            CHECK(w == listed);
        }
        // and the point at infinity via chart 1
        auto forms1 = tridetail::chart_forms(d, 1);
        bool w_inf = in_W(tridetail::fiber_at(forms1, Fp(0, p))).in_w;
        bool listed_inf = v.everywhere_singular;
        for (const auto& pt : v.points)
            if (pt.base.same_point(ProjPoint<Fp>(Fp(0, p), Fp(1, p))))
                listed_inf = true;
        CHECK(w_inf == listed_inf);
        ++data_checked;
    }
    CHECK(data_checked >= 30);
}

TEST_CASE("smooth_check over a prime field") {
    // same node family, coefficients in F_7
    auto qd = node_family(0, 1);
    std::array<BinaryForm<Fp>, 4> phi{
        BinaryForm<Fp>(0), BinaryForm<Fp>(0), BinaryForm<Fp>(1),
        BinaryForm<Fp>(2)};
    for (int i = 0; i < 4; ++i) {
        const auto& src = qd.phi[i];
        BinaryForm<Fp> f(src.degree());
        for (int j = 0; j <= src.degree(); ++j) {
            Rat c = src.coeff(j);
            long num = c.get_num().get_si();
            long r = ((num % 7) + 7) % 7;
            f.coeff(j) = Fp(static_cast<std::uint64_t>(r), 7);
        }
        phi[i] = f;
    }
    TrigonalDatum<Fp> d(0, 1, phi);
    auto v = smooth_check(d);
    CHECK(!v.smooth);
    REQUIRE(v.points.size() == 1);
    CHECK(v.points[0].base.str() == "(1:0)");
}
