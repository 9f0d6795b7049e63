#include <mme/extring.hpp>
#include <mme/modulus.hpp>
#include <mme/rng.hpp>
#include <mme/unipoly.hpp>

#include "testutil.hpp"

using namespace mme;

static void test_natural_basics() {
    testutil::set_context("natural");
    CHECK_EQ(Natural("12345678901234567890123456789"),
             Natural("12345678901234567890123456789"));
    CHECK_THROWS(Natural("12x"), UsageError);
    CHECK_THROWS(Natural(5) - Natural(7), UsageError);
    CHECK_EQ((Natural(10) % Natural(3)), Natural(1));
    CHECK_EQ(pow(Natural(2), 100).bit_length(), 101u);
    CHECK_EQ(ceil_log2(Natural(1)), 0u);
    CHECK_EQ(ceil_log2(Natural(2)), 1u);
    CHECK_EQ(ceil_log2(Natural(5)), 3u);

    // values of at least 2^20 bits stay exact
    Natural big = pow(Natural(2), 1 << 20);
    CHECK_EQ(big.bit_length(), (u64)(1 << 20) + 1);
    CHECK_EQ((big * big).bit_length(), (u64)(1 << 21) + 1);
    CHECK_EQ(big % (big - Natural(1)), Natural(1));
}

static void test_power_modulus() {
    testutil::set_context("power-modulus");
    PowerModulus pm(Natural(10), 6);
    CHECK_EQ(pm.n(), Natural(1000000));
    CHECK_THROWS(PowerModulus(Natural(1), 2), UsageError);
    CHECK_THROWS(PowerModulus(Natural(2), 0), UsageError);

    // n == r^s over a sample of construction paths
    DetRng rng(7);
    for (int i = 0; i < 50; ++i) {
        u64 r = 2 + rng.below_u64(1000);
        u32 s = 1 + (u32)rng.below_u64(4);
        PowerModulus p(Natural(r), s);
        Natural expect(1);
        for (u32 j = 0; j < s; ++j) expect *= Natural(r);
        CHECK_EQ(p.n(), expect);
    }
}

static void test_mod_arith_examples() {
    testutil::set_context("mod-arith");
    auto m5 = make_modulus(Natural(5));
    CHECK_EQ(mod_add(RingElem(Natural(3), m5), RingElem(Natural(4), m5)).value, Natural(2));

    auto m1000 = make_modulus(Natural(10), 3);
    CHECK_EQ(mod_pow(RingElem(Natural(2), m1000), Natural(10)).value, Natural(24));

    // (r^s-1)^2 = 1 mod r^s
    auto m = make_modulus(Natural(10), 6);
    RingElem x(m->n() - Natural(1), m);
    CHECK_EQ(mod_mul(x, x).value, Natural(1));

    auto m7 = make_modulus(Natural(7));
    CHECK_THROWS(mod_add(RingElem(Natural(1), m5), RingElem(Natural(1), m7)), UsageError);
}

static void test_mod_inverse() {
    testutil::set_context("mod-inverse");
    auto m7 = make_modulus(Natural(7));
    CHECK_EQ(mod_inverse(RingElem(Natural(3), m7)).value, Natural(5));
    auto m4 = make_modulus(Natural(2), 2);
    CHECK_THROWS(mod_inverse(RingElem(Natural(2), m4)), NonUnitError);

    auto m243 = make_modulus(Natural(3), 5);
    DetRng rng(11);
    int found = 0;
    while (found < 20) {
        Natural u = rng.below(m243->n());
        if (!gcd(u, m243->n()).is_one()) continue;
        ++found;
        RingElem x(u, m243);
        CHECK_EQ(mod_mul(x, mod_inverse(x)).value, Natural(1));
    }
}

static void test_ring_properties_random_moduli() {
    testutil::set_context("ring-properties");
    DetRng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        // moduli up to 2^256
        u64 bits = 2 + rng.below_u64(255);
        Natural n = rng.below(pow(Natural(2), bits)) + Natural(2);
        auto mod = make_modulus(n);
        RingElem x(rng.below(n), mod), y(rng.below(n), mod);
        CHECK_EQ(mod_sub(mod_add(x, y), y).value, x.value);
        if (gcd(x.value, n).is_one())
            CHECK_EQ(mod_mul(x, mod_inverse(x)).value, Natural(1) % n);
    }
}

static void test_poly_mod() {
    testutil::set_context("poly-mod");
    auto m5 = make_modulus(Natural(5));
    // x^2 mod (x-1) = 1
    UniPoly f(m5, {Natural(0), Natural(0), Natural(1)});
    UniPoly g(m5, {Natural(4), Natural(1)});
    UniPoly r = poly_mod(f, g);
    CHECK_EQ(r, UniPoly(m5, {Natural(1)}));

    // (x^3+x) mod (x^2+1) over Z/2 = 0
    auto m2 = make_modulus(Natural(2));
    UniPoly f2(m2, {Natural(0), Natural(1), Natural(0), Natural(1)});
    UniPoly g2(m2, {Natural(1), Natural(0), Natural(1)});
    CHECK(poly_mod(f2, g2).is_zero());

    CHECK_THROWS(poly_mod(f, UniPoly(m5, {Natural(1), Natural(2)})), UsageError);

    // reconstruction: f = g*h + r for 1000 random instances
    DetRng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        auto m9 = make_modulus(Natural(3), 2);
        std::vector<Natural> fc(7), gc(4);
        for (auto& c : fc) c = rng.below(m9->n());
        for (size_t i = 0; i + 1 < gc.size(); ++i) gc[i] = rng.below(m9->n());
        gc.back() = Natural(1);
        UniPoly ff(m9, fc), gg(m9, gc);
        auto [h, rr] = poly_divmod(ff, gg);
        CHECK(rr.degree() < gg.degree());
        CHECK_EQ(gg * h + rr, ff);
    }
}

static void test_ext_reduce() {
    testutil::set_context("ext-reduce");
    // F_4 = (Z/2)[z]/(z^2+z+1): z^2 -> z+1
    auto m2 = make_modulus(Natural(2));
    ExtRingCtx f4(m2, {Natural(1), Natural(1), Natural(1)});
    ExtElem r = ext_reduce({Natural(0), Natural(0), Natural(1)}, f4);
    CHECK_EQ(r.c[0], Natural(1));
    CHECK_EQ(r.c[1], Natural(1));

    // identity case: already reduced polynomials pass through
    ExtElem id = ext_reduce({Natural(1), Natural(1)}, f4);
    CHECK_EQ(id.c[0], Natural(1));
    CHECK_EQ(id.c[1], Natural(1));

    CHECK_THROWS(ExtRingCtx(m2, {Natural(1)}), UsageError);          // degree 0
    auto m4 = make_modulus(Natural(4));
    CHECK_THROWS(ExtRingCtx(m4, {Natural(0), Natural(1), Natural(2)}), UsageError);  // non-monic

    // random p deg 10 over Z/9, E monic deg 3: re-expansion check
    auto m9 = make_modulus(Natural(3), 2);
    DetRng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Natural> E(4);
        for (int i = 0; i < 3; ++i) E[i] = rng.below(m9->n());
        E[3] = Natural(1);
        ExtRingCtx ring(m9, E);
        std::vector<Natural> p(11);
        for (auto& c : p) c = rng.below(Natural(1000));
        ExtElem red = ext_reduce(p, ring);
        // re-expand: reduced + E * quotient == p (mod 9)
        UniPoly pp(m9, p);
        auto [q, rem] = poly_divmod(pp, ring.E());
        CHECK_EQ(ring.from_unipoly(rem), red);
        CHECK_EQ(ring.E() * q + rem, pp);
    }
}

int main() {
    test_natural_basics();
    test_power_modulus();
    test_mod_arith_examples();
    test_mod_inverse();
    test_ring_properties_random_moduli();
    test_poly_mod();
    test_ext_reduce();
    return testutil::finish("test_arith");
}
