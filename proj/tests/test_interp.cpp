#include <mme/interp.hpp>
#include <mme/primes.hpp>
#include <mme/rng.hpp>

#include "testutil.hpp"

using namespace mme;

static void test_crt_examples() {
    testutil::set_context("crt");
    CrtInstance i1{{Natural(3), Natural(5)}, {Natural(2), Natural(3)}};
    CHECK_EQ(crt_combine(i1), Natural(8));

    CrtInstance i0{{Natural(4), Natural(9), Natural(25)}, {Natural(0), Natural(0), Natural(0)}};
    CHECK_EQ(crt_combine(i0), Natural(0));

    CrtInstance bad{{Natural(6), Natural(4)}, {Natural(1), Natural(1)}};
    CHECK_THROWS(crt_combine(bad), UsageError);
    CrtInstance oor{{Natural(3), Natural(5)}, {Natural(3), Natural(0)}};
    CHECK_THROWS(crt_combine(oor), UsageError);
}

static void test_crt_roundtrip() {
    testutil::set_context("crt-roundtrip");
    // first 10 primes cubed
    std::vector<Natural> moduli;
    Natural prod(1);
    for (u64 p : sieve_primes(29)) {
        moduli.push_back(pow(Natural(p), 3));
        prod *= moduli.back();
    }
    DetRng rng(71);
    PreparedCrt prep(moduli);
    CHECK_EQ(prep.product(), prod);
    for (int t = 0; t < 200; ++t) {
        Natural v = rng.below(prod);
        std::vector<Natural> residues;
        for (const auto& n : moduli) residues.push_back(v % n);
        CHECK_EQ(prep.combine(residues), v);
    }

    // exhaustive for small products
    std::vector<Natural> small = {Natural(7), Natural(9), Natural(25)};  // product 1575
    PreparedCrt sp(small);
    for (u64 v = 0; v < 1575; ++v) {
        std::vector<Natural> residues = {Natural(v % 7), Natural(v % 9), Natural(v % 25)};
        CHECK_EQ(sp.combine(residues), Natural(v));
    }
}

static void test_hermite_single_node() {
    testutil::set_context("hermite-single");
    auto m25 = make_modulus(Natural(5), 2);
    // one node a with multiplicity D: result is the un-shift of the block
    HermiteBlock b;
    b.node = Natural(3);
    b.multiplicity = 3;
    b.taylor = {Natural(2), Natural(7), Natural(1)};
    UniPoly f = hermite_interpolate({b}, m25);
    UniPoly expect = taylor_shift(UniPoly(m25, b.taylor), m25->sub(Natural(0), Natural(3)));
    CHECK(f == expect);
}

static void test_hermite_worked_example() {
    testutil::set_context("hermite-worked");
    // f = x^2 + 1 over Z/25 from blocks at nodes 0 and 1, multiplicity 2:
    // f mod x^2 = 1, f mod (x-1)^2 =2 + 2(x-1)
    auto m25 = make_modulus(Natural(5), 2);
    HermiteBlock b0{Natural(0), 2, {Natural(1), Natural(0)}};
    HermiteBlock b1{Natural(1), 2, {Natural(2), Natural(2)}};
    UniPoly f = hermite_interpolate({b0, b1}, m25);
    CHECK(f == UniPoly(m25, {Natural(1), Natural(0), Natural(1)}));
}

static void test_hermite_plain_interpolation() {
    testutil::set_context("hermite-plain");
    // 13 nodes of multiplicity 1 over F_13 recover a random degree-12 poly
    auto m13 = make_modulus(Natural(13));
    DetRng rng(73);
    std::vector<Natural> coeffs(13);
    for (auto& c : coeffs) c = rng.below(Natural(13));
    UniPoly f(m13, coeffs);
    std::vector<HermiteBlock> blocks;
    for (u64 a = 0; a < 13; ++a)
        blocks.push_back({Natural(a), 1, {f.eval(Natural(a))}});
    CHECK(hermite_interpolate(blocks, m13) == f);
}

static void test_hermite_nonunit_error() {
    testutil::set_context("hermite-nonunit");
    auto m9 = make_modulus(Natural(3), 2);
    HermiteBlock b0{Natural(0), 1, {Natural(1)}};
    HermiteBlock b3{Natural(3), 1, {Natural(2)}};  // 3 - 0 is not a unit mod 9
    CHECK_THROWS(hermite_interpolate({b0, b3}, m9), NonUnitError);
}

static void test_hermite_roundtrip_random() {
    testutil::set_context("hermite-roundtrip");
    DetRng rng(79);
    std::vector<PowerModulusPtr> rings = {
        make_modulus(Natural(13)),       // prime field
        make_modulus(Natural(5), 3),     // Z/5^3
        make_modulus(Natural(17), 2),    // Z/17^2
    };
    for (int t = 0; t < 200; ++t) {
        const auto& mod = rings[t % rings.size()];
        // nodes 0..l-1 (l <= smallest prime factor), random multiplicities
        u64 l = 2 + rng.below_u64(3);
        std::vector<std::pair<Natural, u32>> nodes;
        u64 D = 0;
        for (u64 a = 0; a < l; ++a) {
            u32 e = 1 + (u32)rng.below_u64(3);
            nodes.emplace_back(Natural(a), e);
            D += e;
        }
        std::vector<Natural> coeffs(D);
        for (auto& c : coeffs) c = rng.below(mod->n());
        UniPoly f(mod, coeffs);

        // blocks via Taylor shift: f(x + a) truncated to multiplicity
        std::vector<HermiteBlock> blocks;
        for (const auto& [a, e] : nodes) {
            UniPoly sh = taylor_shift(f, a);
            HermiteBlock b;
            b.node = a;
            b.multiplicity = e;
            b.taylor.assign(e, Natural(0));
            for (u32 i = 0; i < e; ++i) b.taylor[i] = sh.coeff(i);
            blocks.push_back(std::move(b));
        }
        CHECK(hermite_interpolate(blocks, mod) == f);
    }
}

int main() {
    test_crt_examples();
    test_crt_roundtrip();
    test_hermite_single_node();
    test_hermite_worked_example();
    test_hermite_plain_interpolation();
    test_hermite_nonunit_error();
    test_hermite_roundtrip_random();
    return testutil::finish("test_interp");
}
