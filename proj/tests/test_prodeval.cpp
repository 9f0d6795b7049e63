#include <mme/prodeval.hpp>
#include <mme/rng.hpp>

#include "testutil.hpp"

using namespace mme;

namespace {
MultiPoly random_poly(DetRng& rng, u32 m, u32 d, PowerModulusPtr mod) {
    MultiPoly f = MultiPoly::zero(m, d, mod);
    for (size_t i = 0; i < f.coeff_count(); ++i) f.set_coeff(i, rng.below(mod->n()));
    return f;
}
}  // namespace

static void test_product_set_examples() {
    testutil::set_context("product-set");
    auto m4 = make_modulus(Natural(4));
    // f = x1 + x2, S = {0, 1}: values (0, 1, 1, 2) in index order
    MultiPoly f = MultiPoly::zero(2, 2, m4);
    f.set_coeff(flat_index({1, 0}, 2), Natural(1));
    f.set_coeff(flat_index({0, 1}, 2), Natural(1));
    auto g = product_set_eval(f, {Natural(0), Natural(1)});
    CHECK_EQ(g.values.size(), 4u);
    CHECK_EQ(g.values[0], Natural(0));
    CHECK_EQ(g.values[1], Natural(1));
    CHECK_EQ(g.values[2], Natural(1));
    CHECK_EQ(g.values[3], Natural(2));

    // m = 0: the single value is the constant itself
    MultiPoly c = MultiPoly::zero(0, 3, m4);
    c.set_coeff(0, Natural(3));
    auto gc = product_set_eval(c, {Natural(0), Natural(2)});
    CHECK_EQ(gc.values.size(), 1u);
    CHECK_EQ(gc.values[0], Natural(3));

    CHECK_THROWS(product_set_eval(f, {}), UsageError);
    CHECK_THROWS(product_set_eval(f, {Natural(1), Natural(1)}), UsageError);
}

static void test_product_set_vs_naive() {
    testutil::set_context("product-set-oracle");
    DetRng rng(61);
    for (const auto& [r, s] : std::vector<std::pair<u64, u32>>{{4, 1}, {7, 1}, {9, 1}, {65536, 1}}) {
        auto mod = make_modulus(Natural(r), s);
        for (u32 m = 1; m <= 3; ++m)
            for (u32 d = 2; d <= 4; ++d) {
                MultiPoly f = random_poly(rng, m, d, mod);
                size_t ns = 1 + (size_t)rng.below_u64(std::min<u64>(5, r));
                std::vector<Natural> S;
                for (size_t i = 0; i < ns; ++i) S.emplace_back(i * (r / ns));
                auto g = product_set_eval(f, S);
                // every grid point agrees with the naive oracle
                size_t total = g.values.size();
                std::vector<size_t> pos(m, 0);
                for (size_t idx = 0; idx < total; ++idx) {
                    ModPoint a(m);
                    for (u32 j = 0; j < m; ++j) a[j] = S[pos[j]];
                    CHECK_EQ(g.values[idx], naive_eval(f, a));
                    for (u32 j = 0; j < m; ++j) {
                        if (++pos[j] < ns) break;
                        pos[j] = 0;
                    }
                }
            }
    }

    // big-modulus path
    auto big = make_modulus(pow(Natural(2), 70), 1);
    MultiPoly f = random_poly(rng, 2, 3, big);
    std::vector<Natural> S = {Natural(0), Natural(5), pow(Natural(2), 69)};
    auto g = product_set_eval(f, S);
    CHECK_EQ(g.values[4], naive_eval(f, {S[1], S[1]}));
}

static void test_taylor_correction() {
    testutil::set_context("taylor-correction");
    // s = 1: reduces to f(b)
    auto m7 = make_modulus(Natural(7), 1);
    std::map<ExpVec, Natural> d0;
    d0.emplace(ExpVec({{0, 0}}), Natural(4));
    CHECK_EQ(taylor_correction(d0, {Natural(3), Natural(5)}, {Natural(3), Natural(5)}, *m7),
             Natural(4));

    // worked example over Z/4 (r=2, s=2): f = x^2, b = 1, a = 3
    auto m4 = make_modulus(Natural(2), 2);
    std::map<ExpVec, Natural> derivs;
    derivs.emplace(ExpVec({{0}}), Natural(1));  // f(1) = 1
    derivs.emplace(ExpVec({{1}}), Natural(2));  // (d_1 f)(1) = 2
    CHECK_EQ(taylor_correction(derivs, {Natural(3)}, {Natural(1)}, *m4), Natural(1));

    // precondition: a-b must be divisible by r coordinatewise
    CHECK_THROWS(taylor_correction(derivs, {Natural(2)}, {Natural(1)}, *m4), UsageError);

    // random f over Z/27, m=2: matches naive_eval, and is independent of the
    // representative b
    auto m27 = make_modulus(Natural(3), 3);
    DetRng rng(67);
    for (int t = 0; t < 60; ++t) {
        MultiPoly f = random_poly(rng, 2, 3, m27);
        ModPoint a = {rng.below(m27->n()), rng.below(m27->n())};
        for (int rep = 0; rep < 2; ++rep) {
            // b = a - 3k coordinatewise, any k
            ModPoint b(2);
            for (u32 j = 0; j < 2; ++j) {
                Natural delta = Natural(3) * rng.below(Natural(9));
                b[j] = m27->sub(a[j], delta);
            }
            std::map<ExpVec, Natural> vals;
            for (const auto& [e, df] : hasse_all_upto(f, 2)) vals.emplace(e, naive_eval(df, b));
            CHECK_EQ(taylor_correction(vals, a, b, *m27), naive_eval(f, a));
        }
    }
}

int main() {
    test_product_set_examples();
    test_product_set_vs_naive();
    test_taylor_correction();
    return testutil::finish("test_prodeval");
}
