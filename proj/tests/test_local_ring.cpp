#include <doctest.h>

#include <vector>

#include "cayring/local_ring.hpp"

using namespace cayring;

namespace {

// Exhaustive ring-axiom scan, independent of the construction-time checks.
void check_ring_axioms(const LocalFactor& f) {
    const uint32_t n = f.order();
    for (elem a = 0; a < n; ++a) {
        CHECK(f.add(a, f.zero()) == a);
        CHECK(f.mul(a, f.one()) == a);
        CHECK(f.add(a, f.neg(a)) == f.zero());
        for (elem b = 0; b < n; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (elem c = 0; c < n; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

}  // namespace

TEST_CASE("prime and prime power detection") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(0));

    uint32_t p = 0, k = 0;
    CHECK(prime_power(8, &p, &k));
    CHECK(p == 2);
    CHECK(k == 3);
    CHECK(prime_power(81, &p, &k));
    CHECK(p == 3);
    CHECK(k == 4);
    CHECK(prime_power(13, &p, &k));
    CHECK(p == 13);
    CHECK(k == 1);
    CHECK_FALSE(prime_power(12, &p, &k));
    CHECK_FALSE(prime_power(1, &p, &k));
    CHECK_FALSE(prime_power(0, &p, &k));
}

TEST_CASE("Z8 arithmetic matches integers mod 8") {
    LocalFactor f(LocalRingDesc::zpk_desc(2, 3));
    CHECK(f.order() == 8);
    CHECK(f.zero() == 0);
    CHECK(f.one() == 1);
    for (elem a = 0; a < 8; ++a)
        for (elem b = 0; b < 8; ++b) {
            CHECK(f.add(a, b) == (a + b) % 8);
            CHECK(f.mul(a, b) == (a * b) % 8);
        }
    CHECK(f.nonunits() == std::vector<elem>{0, 2, 4, 6});
    CHECK(f.is_local());
    CHECK_FALSE(f.is_field());
    CHECK(f.residue_field_size() == 2);
    CHECK(f.desc().render() == "Z8");
}

TEST_CASE("canonical GF moduli are frozen") {
    CHECK(gfpoly::canonical_modulus(2, 2) == std::vector<uint32_t>{1, 1, 1});
    CHECK(gfpoly::canonical_modulus(2, 3) == std::vector<uint32_t>{1, 1, 0, 1});
    CHECK(gfpoly::canonical_modulus(3, 2) == std::vector<uint32_t>{1, 0, 1});
}

TEST_CASE("polynomial helpers") {
    CHECK(gfpoly::irreducible({1, 1, 1}, 2));
    CHECK_FALSE(gfpoly::irreducible({1, 0, 1}, 2));  // (t+1)^2 over GF(2)
    CHECK(gfpoly::irreducible({1, 0, 1}, 3));
    CHECK(gfpoly::divides({1, 1}, {1, 0, 1}, 2));
    CHECK_FALSE(gfpoly::divides({1, 1}, {1, 1, 1}, 2));
    // t * t mod t^2+t+1 = t + 1 over GF(2)
    CHECK(gfpoly::mul_mod({0, 1}, {0, 1}, {1, 1, 1}, 2) == std::vector<uint32_t>{1, 1});
}

TEST_CASE("GF(4) multiplication") {
    LocalFactor f(LocalRingDesc::gf_desc(2, 2));
    CHECK(f.order() == 4);
    // t = element 2 (base-2 digits, ascending degree); t^2 = t + 1 = element 3.
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(2, 3) == 1);  // t * (t+1) = t^2 + t = 1
    CHECK(f.is_field());
    CHECK(f.nonunits() == std::vector<elem>{0});
    check_ring_axioms(f);
}

TEST_CASE("GF(8) and GF(9) are fields") {
    for (auto desc : {LocalRingDesc::gf_desc(2, 3), LocalRingDesc::gf_desc(3, 2)}) {
        LocalFactor f(desc);
        CHECK(f.is_field());
        check_ring_axioms(f);
        // Every nonzero element has an inverse.
        for (elem a = 1; a < f.order(); ++a) {
            bool inverse = false;
            for (elem b = 1; b < f.order() && !inverse; ++b)
                if (f.mul(a, b) == f.one()) inverse = true;
            CHECK(inverse);
        }
    }
    // Frobenius over GF(9): (a+b)^3 = a^3 + b^3.
    LocalFactor f9(LocalRingDesc::gf_desc(3, 2));
    auto cube = [&](elem a) { return f9.mul(a, f9.mul(a, a)); };
    for (elem a = 0; a < 9; ++a)
        for (elem b = 0; b < 9; ++b) CHECK(cube(f9.add(a, b)) == f9.add(cube(a), cube(b)));
}

TEST_CASE("explicit GF modulus is honored, bad ones rejected") {
    LocalFactor f(LocalRingDesc::gf_desc(2, 3, {1, 0, 1, 1}));  // t^3 + t^2 + 1
    CHECK(f.is_field());
    check_ring_axioms(f);
    CHECK_THROWS_AS(LocalFactor(LocalRingDesc::gf_desc(2, 2, {1, 0, 1})), BadModulus);
    CHECK_THROWS_AS(LocalFactor(LocalRingDesc::gf_desc(2, 2, {1, 1})), BadModulus);
}

TEST_CASE("GF(4)[t]/(t^2) truncated polynomial ring") {
    LocalFactor f(LocalRingDesc::trunc_desc(4, 2));
    CHECK(f.order() == 16);
    CHECK(f.is_local());
    CHECK_FALSE(f.is_field());
    CHECK(f.nonunits() == std::vector<elem>{0, 4, 8, 12});  // multiples of t
    CHECK(f.residue_field_size() == 4);
    CHECK(f.desc().render() == "GF(4)[t]/(t^2)");
    check_ring_axioms(f);
    // The maximal ideal squares to zero here.
    for (elem u : f.nonunits())
        for (elem v : f.nonunits()) CHECK(f.mul(u, v) == 0);
}

TEST_CASE("table factors validate the ring axioms") {
    const uint32_t n = 3;
    std::vector<uint16_t> add(n * n), mul(n * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<uint16_t>((a + b) % n);
            mul[a * n + b] = static_cast<uint16_t>((a * b) % n);
        }
    LocalFactor f(LocalRingDesc::table_desc(n, add, mul, 0, 1));
    CHECK(f.is_field());

    auto broken = mul;
    broken[1 * n + 2] = 0;  // 1 * 2 = 0 breaks the identity axiom
    CHECK_THROWS_AS(LocalFactor(LocalRingDesc::table_desc(n, add, broken, 0, 1)), NotARing);
}

TEST_CASE("non-local tables are rejected unless asked for") {
    const uint32_t n = 6;
    std::vector<uint16_t> add(n * n), mul(n * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<uint16_t>((a + b) % n);
            mul[a * n + b] = static_cast<uint16_t>((a * b) % n);
        }
    auto desc = LocalRingDesc::table_desc(n, add, mul, 0, 1);
    CHECK_THROWS_AS(LocalFactor(desc, true), NotLocal);
    LocalFactor f(desc, false);
    CHECK_FALSE(f.is_local());
    CHECK(f.nonunits() == std::vector<elem>{0, 2, 3, 4});
}
