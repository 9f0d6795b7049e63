#include <mme/multipoly.hpp>
#include <mme/rng.hpp>
#include <mme/unipoly.hpp>

#include "testutil.hpp"

using namespace mme;

namespace {

MultiPoly random_poly(DetRng& rng, u32 m, u32 d, PowerModulusPtr mod) {
    MultiPoly f = MultiPoly::zero(m, d, mod);
    for (size_t i = 0; i < f.coeff_count(); ++i) f.set_coeff(i, rng.below(mod->n()));
    return f;
}

MultiPoly random_poly_ext(DetRng& rng, u32 m, u32 d, ExtRingCtxPtr ring) {
    MultiPoly f = MultiPoly::zero_ext(m, d, ring);
    for (size_t i = 0; i < f.coeff_count(); ++i) {
        ExtElem x = ring->zero();
        for (u32 c = 0; c < ring->degree(); ++c) x.c[c] = rng.below(ring->base()->n());
        f.set_coeff_ext(i, std::move(x));
    }
    return f;
}

}  // namespace

static void test_flat_index_bijection() {
    testutil::set_context("flat-index");
    for (u32 m = 1; m <= 4; ++m)
        for (u32 d = 1; d <= 5; ++d) {
            size_t total = checked_coeff_count(d, m);
            std::vector<bool> seen(total, false);
            for (size_t i = 0; i < total; ++i) {
                std::vector<u32> a;
                unflatten(i, d, m, a);
                size_t idx = flat_index(a, d);
                CHECK(idx < total);
                CHECK(!seen[idx]);
                seen[idx] = true;
            }
        }
}

static void test_naive_eval_examples() {
    testutil::set_context("naive-eval");
    auto m7 = make_modulus(Natural(7));
    // constant
    MultiPoly c = MultiPoly::zero(2, 3, m7);
    c.set_coeff(0, Natural(5));
    CHECK_EQ(naive_eval(c, {Natural(3), Natural(6)}), Natural(5));

    // f = x1 x2 + x2^2 at (3,4) mod 7 -> 0
    MultiPoly f = MultiPoly::zero(2, 3, m7);
    f.set_coeff(flat_index({1, 1}, 3), Natural(1));
    f.set_coeff(flat_index({0, 2}, 3), Natural(1));
    CHECK_EQ(naive_eval(f, {Natural(3), Natural(4)}), Natural(0));

    CHECK_THROWS(naive_eval(f, {Natural(3)}), UsageError);

    // big-modulus path agrees with the small-modulus engine
    DetRng rng(5);
    auto big = make_modulus(pow(Natural(2), 80) + Natural(1));
    auto small = make_modulus(Natural(97));
    MultiPoly g = random_poly(rng, 3, 3, small);
    MultiPoly gbig = MultiPoly::zero(3, 3, big);
    for (size_t i = 0; i < g.coeff_count(); ++i) gbig.set_coeff(i, g.mod_coeffs()[i]);
    for (int t = 0; t < 20; ++t) {
        ModPoint a = {rng.below(Natural(97)), rng.below(Natural(97)), rng.below(Natural(97))};
        CHECK_EQ(naive_eval(g, a), naive_eval(gbig, a) % Natural(97));
    }
}

static void test_hasse_derivative_examples() {
    testutil::set_context("hasse-derivative");
    auto m5 = make_modulus(Natural(5));
    // first Hasse derivative of x^3 over Z/5 is 3x^2
    MultiPoly f = MultiPoly::zero(1, 4, m5);
    f.set_coeff(3, Natural(1));
    MultiPoly d1 = hasse_derivative(f, ExpVec({{1}}));
    CHECK_EQ(d1.mod_coeffs()[2], Natural(3));
    CHECK(d1.mod_coeffs()[3].is_zero());

    // second Hasse derivative of x^3 over Z/2 is C(3,2) x = x
    auto m2 = make_modulus(Natural(2));
    MultiPoly g = MultiPoly::zero(1, 4, m2);
    g.set_coeff(3, Natural(1));
    MultiPoly d2 = hasse_derivative(g, ExpVec({{2}}));
    CHECK_EQ(d2.mod_coeffs()[1], Natural(1));

    // order beyond the degree box gives the zero polynomial
    CHECK(hasse_derivative(f, ExpVec({{4}})).is_zero());
}

static void test_hasse_all_upto() {
    testutil::set_context("hasse-all");
    DetRng rng(31);
    auto m9 = make_modulus(Natural(3), 2);
    MultiPoly f = random_poly(rng, 2, 3, m9);
    auto all0 = hasse_all_upto(f, 0);
    CHECK_EQ(all0.size(), 1u);
    CHECK(all0.begin()->second == f);

    auto all1 = hasse_all_upto(f, 1);
    CHECK_EQ(all1.size(), 3u);  // C(2+1, 2)

    auto all3 = hasse_all_upto(f, 3);
    CHECK_EQ(all3.size(), 10u);  // C(2+3, 2)
    for (const auto& [e, df] : all3) CHECK(df == hasse_derivative(f, e));
}

// Taylor identity f(a+b) = sum_e (d_e f)(a) b^e over every ring kind.
static void taylor_identity_mod(DetRng& rng, PowerModulusPtr mod, u32 m, u32 d) {
    MultiPoly f = random_poly(rng, m, d, mod);
    ModPoint a(m), b(m), ab(m);
    for (u32 j = 0; j < m; ++j) {
        a[j] = rng.below(mod->n());
        b[j] = rng.below(mod->n());
        ab[j] = mod->add(a[j], b[j]);
    }
    Natural direct = naive_eval(f, ab);
    Natural acc(0);
    for (const auto& [e, df] : hasse_all_upto(f, (d - 1) * m)) {
        Natural term = naive_eval(df, a);
        for (u32 j = 0; j < m; ++j) term = mod->mul(term, mod->pow_mod(b[j], Natural(e.e[j])));
        acc = mod->add(acc, term);
    }
    CHECK_EQ(acc, direct);
}

static void taylor_identity_ext(DetRng& rng, ExtRingCtxPtr ring, u32 m, u32 d) {
    MultiPoly f = random_poly_ext(rng, m, d, ring);
    ExtPoint a(m), b(m), ab(m);
    for (u32 j = 0; j < m; ++j) {
        a[j] = ring->zero();
        b[j] = ring->zero();
        for (u32 c = 0; c < ring->degree(); ++c) {
            a[j].c[c] = rng.below(ring->base()->n());
            b[j].c[c] = rng.below(ring->base()->n());
        }
        ab[j] = ring->add(a[j], b[j]);
    }
    ExtElem direct = naive_eval_ext(f, ab);
    ExtElem acc = ring->zero();
    for (const auto& [e, df] : hasse_all_upto(f, (d - 1) * m)) {
        ExtElem term = naive_eval_ext(df, a);
        for (u32 j = 0; j < m; ++j)
            for (u32 rep = 0; rep < e.e[j]; ++rep) term = ring->mul(term, b[j]);
        acc = ring->add(acc, term);
    }
    CHECK(acc == direct);
}

static void test_taylor_identity() {
    testutil::set_context("taylor-identity");
    DetRng rng(37);
    auto m9 = make_modulus(Natural(3), 2);
    auto m8 = make_modulus(Natural(2), 3);
    auto m97 = make_modulus(Natural(97));
    for (int t = 0; t < 30; ++t) {
        taylor_identity_mod(rng, m9, 2, 3);
        taylor_identity_mod(rng, m8, 2, 2);
        taylor_identity_mod(rng, m97, 1, 4);
    }
    auto f4 = std::make_shared<const ExtRingCtx>(
        make_modulus(Natural(2)), std::vector<Natural>{Natural(1), Natural(1), Natural(1)});
    for (int t = 0; t < 10; ++t) taylor_identity_ext(rng, f4, 2, 2);
}

static void test_derivative_composition() {
    testutil::set_context("derivative-composition");
    // d_e(d_e'(f)) = C(e+e', e) d_{e+e'}(f)
    DetRng rng(41);
    for (u64 p : {7ull, 5ull}) {
        auto mod = make_modulus(Natural(p));
        MultiPoly f = random_poly(rng, 2, 4, mod);
        for (u32 e1 = 0; e1 <= 2; ++e1)
            for (u32 e2 = 0; e2 <= 2; ++e2) {
                MultiPoly lhs =
                    hasse_derivative(hasse_derivative(f, ExpVec({{e1, 0}})), ExpVec({{e2, 0}}));
                MultiPoly rhs = hasse_derivative(f, ExpVec({{e1 + e2, 0}}));
                auto rows = pascal_rows(e1 + e2);
                Natural scalar = rows[e1 + e2][e1] % mod->n();
                for (auto& c : rhs.mod_coeffs()) c = mod->mul(c, scalar);
                CHECK(lhs == rhs);
            }
    }
}

static void test_homogeneous_components() {
    testutil::set_context("homogeneous");
    auto m7 = make_modulus(Natural(7));
    // f = 1 + x1 + x1 x2
    MultiPoly f = MultiPoly::zero(2, 2, m7);
    f.set_coeff(flat_index({0, 0}, 2), Natural(1));
    f.set_coeff(flat_index({1, 0}, 2), Natural(1));
    f.set_coeff(flat_index({1, 1}, 2), Natural(1));
    auto comps = homogeneous_components(f);
    CHECK_EQ(comps.size(), 3u);
    CHECK_EQ(comps[0].first, 0u);
    CHECK_EQ(comps[1].first, 1u);
    CHECK_EQ(comps[2].first, 2u);

    // homogeneous input -> single component equal to f
    MultiPoly h = MultiPoly::zero(2, 3, m7);
    h.set_coeff(flat_index({2, 0}, 3), Natural(3));
    h.set_coeff(flat_index({1, 1}, 3), Natural(4));
    auto hc = homogeneous_components(h);
    CHECK_EQ(hc.size(), 1u);
    CHECK_EQ(hc[0].first, 2u);
    CHECK(hc[0].second == h);
    CHECK(homogeneous_degree(h).has_value());

    // zero polynomial: a single degree-0 zero component
    MultiPoly z = MultiPoly::zero(2, 3, m7);
    auto zc = homogeneous_components(z);
    CHECK_EQ(zc.size(), 1u);
    CHECK_EQ(zc[0].first, 0u);
    CHECK(zc[0].second.is_zero());

    // components sum back to f, and each is homogeneous
    DetRng rng(43);
    for (int t = 0; t < 100; ++t) {
        MultiPoly g = random_poly(rng, 3, 3, m7);
        auto parts = homogeneous_components(g);
        MultiPoly sum = MultiPoly::zero(3, 3, m7);
        for (const auto& [deg, p] : parts) {
            CHECK(p.is_zero() || homogeneous_degree(p) == deg);
            for (size_t i = 0; i < sum.coeff_count(); ++i)
                sum.set_coeff(i, m7->add(sum.mod_coeffs()[i], p.mod_coeffs()[i]));
        }
        CHECK(sum == g);
    }
}

static void test_lift_reduce() {
    testutil::set_context("lift-reduce");
    auto m5 = make_modulus(Natural(5));
    DetRng rng(47);
    MultiPoly f = random_poly(rng, 2, 3, m5);
    IntMultiPoly F = lift_to_integers(f);
    CHECK(reduce_mod(F, m5) == f);
    CHECK_EQ(F.coeffs[0], f.mod_coeffs()[0]);

    IntMultiPoly G;
    G.m = 1;
    G.d = 2;
    G.coeffs = {Natural(12), Natural(0)};
    CHECK_EQ(reduce_mod(G, m5).mod_coeffs()[0], Natural(2));

    // integer evaluation oracle
    CHECK_EQ(G.eval({Natural(100)}), Natural(12));
}

static void test_taylor_shift() {
    testutil::set_context("taylor-shift");
    auto m7 = make_modulus(Natural(7));
    // (x+1)^2 = x^2 + 2x + 1
    UniPoly p(m7, {Natural(0), Natural(0), Natural(1)});
    UniPoly q = taylor_shift(p, Natural(1));
    CHECK(q == UniPoly(m7, {Natural(1), Natural(2), Natural(1)}));
    CHECK(taylor_shift(p, Natural(0)) == p);

    auto m81 = make_modulus(Natural(3), 4);
    DetRng rng(53);
    for (int t = 0; t < 50; ++t) {
        std::vector<Natural> c(6);
        for (auto& x : c) x = rng.below(m81->n());
        UniPoly f(m81, c);
        Natural s = rng.below(m81->n());
        CHECK(taylor_shift(taylor_shift(f, s), m81->sub(Natural(0), s)) == f);
    }
}

int main() {
    test_flat_index_bijection();
    test_naive_eval_examples();
    test_hasse_derivative_examples();
    test_hasse_all_upto();
    test_taylor_identity();
    test_derivative_composition();
    test_homogeneous_components();
    test_lift_reduce();
    test_taylor_shift();
    return testutil::finish("test_mpoly");
}
