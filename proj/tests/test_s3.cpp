#include <doctest.h>

#include <array>
#include <complex>

#include "ds3/s3.hpp"

using namespace ds3;

namespace {

// Independent oracle: S3 as permutations of {0,1,2} with c = (0 1 2) and
// t = (1 2), composed as (x*y)(i) = x(y(i)).
using Perm = std::array<int, 3>;

Perm compose(const Perm& x, const Perm& y) {
    return {x[y[0]], x[y[1]], x[y[2]]};
}

Perm perm_of(GroupElement g) {
    const Perm id{0, 1, 2};
    const Perm c{1, 2, 0};
    const Perm t{0, 2, 1};
    Perm p = id;
    for (int i = 0; i < g.c_exponent(); ++i) p = compose(c, p);
    if (g.t_exponent()) p = compose(t, p);
    return p;
}

GroupElement element_of(const Perm& p) {
    for (GroupElement g : s3::all) {
        if (perm_of(g) == p) return g;
    }
    FAIL("permutation is not an S3 element");
    return s3::e;
}

GroupElement oracle_mul(GroupElement x, GroupElement y) {
    return element_of(compose(perm_of(x), perm_of(y)));
}

}  // namespace

TEST_SUITE("s3") {

TEST_CASE("presentation relations hold in the permutation oracle") {
    CHECK(oracle_mul(s3::t, s3::t) == s3::e);
    CHECK(oracle_mul(s3::c, oracle_mul(s3::c, s3::c)) == s3::e);
    // tc = c^2 t
    CHECK(oracle_mul(s3::t, s3::c) == s3::tc);
    CHECK(oracle_mul(s3::c2, s3::t) == s3::tc);
}

TEST_CASE("cayley table matches the permutation oracle on all 36 products") {
    for (GroupElement x : s3::all) {
        for (GroupElement y : s3::all) {
            CHECK(mul(x, y) == oracle_mul(x, y));
            CHECK(mul(x, y).index() < 6);
        }
    }
}

TEST_CASE("frozen products") {
    CHECK(mul(s3::t, s3::c) == s3::tc);
    CHECK(mul(s3::c, s3::t) == s3::tc2);  // oracle: c then t reads t c^2
    CHECK(mul(s3::tc, s3::tc) == s3::e);
}

TEST_CASE("identity and associativity") {
    for (GroupElement x : s3::all) {
        CHECK(mul(s3::e, x) == x);
        CHECK(mul(x, s3::e) == x);
        for (GroupElement y : s3::all) {
            for (GroupElement z : s3::all) {
                CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
            }
        }
    }
}

TEST_CASE("inverses") {
    CHECK(inverse(s3::e) == s3::e);
    CHECK(inverse(s3::c) == s3::c2);
    CHECK(inverse(s3::tc) == s3::tc);
    for (GroupElement x : s3::all) {
        CHECK(mul(x, inverse(x)) == s3::e);
        CHECK(mul(inverse(x), x) == s3::e);
        Perm q{};
        const Perm p = perm_of(x);
        for (int i = 0; i < 3; ++i) q[p[i]] = i;
        CHECK(inverse(x) == element_of(q));
    }
}

TEST_CASE("character table values") {
    CHECK(character(Irrep::TwoDim, s3::e) == 2);
    CHECK(character(Irrep::Sign, s3::t) == -1);
    CHECK(character(Irrep::TwoDim, s3::tc) == 0);
    CHECK(character(Irrep::Trivial, s3::tc2) == 1);
    CHECK(character(Irrep::Sign, s3::c2) == 1);
    CHECK(character(Irrep::TwoDim, s3::c) == -1);
}

TEST_CASE("characters are class functions") {
    for (Irrep a : kAllIrreps) {
        for (GroupElement g : s3::all) {
            for (GroupElement h : s3::all) {
                CHECK(character(a, conjugate(g, h)) == character(a, h));
            }
        }
    }
}

TEST_CASE("character orthogonality: sum_g chi_A chi_B = 6 delta_AB") {
    for (Irrep a : kAllIrreps) {
        for (Irrep b : kAllIrreps) {
            int sum = 0;
            for (GroupElement g : s3::all) sum += character(a, g) * character(b, g);
            CHECK(sum == (a == b ? 6 : 0));
        }
    }
}

TEST_CASE("cube root of unity") {
    const std::complex<double> w = kOmega;
    CHECK(std::abs(w * w * w - 1.0) < 1e-15);
    CHECK(std::abs(1.0 + w + w * w) < 1e-15);
}

TEST_CASE("element names round-trip") {
    const char* expected[] = {"e", "c", "c2", "t", "tc", "tc2"};
    for (GroupElement g : s3::all) {
        CHECK(element_name(g) == expected[g.index()]);
        REQUIRE(parse_element(element_name(g)).has_value());
        CHECK(*parse_element(element_name(g)) == g);
    }
    CHECK(!parse_element("q").has_value());
    CHECK(!parse_element("").has_value());
}

}  // TEST_SUITE
