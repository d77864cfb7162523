#include <doctest.h>

#include "affchar/fermionic.hpp"
#include "affchar/oracles.hpp"

using namespace affchar;

TEST_CASE("exponent fixtures") {
    const CartanData cd1 = CartanData::make(1);

    MVector m(1, 1, false);
    m.set(0, 0, 1);
    CHECK(exponent(m, DynkinLabel({1}), cd1, AMatrix{1}) == 0);

    MVector zero(1, 2, false);
    CHECK(exponent(zero, DynkinLabel({1}), cd1, AMatrix{2}) == 0);

    MVector tr(1, 2, true);
    tr.set(0, 1, -1);
    CHECK(exponent(tr, DynkinLabel({1}), cd1, AMatrix{2}) == 3);
}

TEST_CASE("mvector range checks") {
    MVector plain(1, 2, false);
    CHECK_THROWS_AS(plain.set(0, 1, -1), usage_error);
    MVector tr(1, 2, true);
    CHECK_THROWS_AS(tr.set(0, 0, -1), usage_error);  // only a=k may go negative
    tr.set(0, 1, -2);
    CHECK(tr.color_total(0) == -4);
}

TEST_CASE("weight_of fixtures") {
    const CartanData cd1 = CartanData::make(1);
    const CartanData cd2 = CartanData::make(2);

    MVector zero(2, 1, false);
    CHECK(weight_of(zero, DynkinLabel({1, 0}), cd2) == DynkinLabel({1, 0}));

    MVector one(1, 1, false);
    one.set(0, 0, 1);
    CHECK(weight_of(one, DynkinLabel({0}), cd1) == DynkinLabel({-2}));

    MVector m2(2, 1, false);
    m2.set(0, 0, 1);
    CHECK(weight_of(m2, DynkinLabel({1, 0}), cd2) == DynkinLabel({-1, 1}));
}

TEST_CASE("ch_F small fixtures") {
    // top term: multiplicity 1 at (q^0, l) for any l
    for (const auto& l : {DynkinLabel({0}), DynkinLabel({1}), DynkinLabel({2})}) {
        const CharSeries f = ch_F(l, 2, 3);
        CHECK(f.multiplicity(0, l) == 1);
    }

    // vacuum: the q^0 slice is the single weight 0
    const CharSeries vac = ch_F(DynkinLabel({0, 0}), 2, 3);
    CHECK(vac.slice(0).size() == 1);
    CHECK(vac.multiplicity(0, DynkinLabel({0, 0})) == 1);

    // su(2)_1 vacuum: weight -2m first appears at q^{m^2}
    const CharSeries w = ch_F(DynkinLabel({0}), 1, 9);
    for (int m = 0; m <= 3; ++m) {
        const DynkinLabel mu({-2 * m});
        CHECK(w.multiplicity(m * m, mu) == 1);
        for (int d = 0; d < m * m; ++d) CHECK(w.multiplicity(d, mu) == 0);
    }

    // su(2)_2 vacuum at (q^2, -4): the single m-vector m_2 = 1
    CHECK(ch_F(DynkinLabel({0}), 2, 2).multiplicity(2, DynkinLabel({-4})) == 1);

    CHECK_THROWS_AS(ch_F(DynkinLabel({0}), 2, -1), usage_error);
}

TEST_CASE("ch_F degree-0 slice is the finite character for rectangles") {
    for (int rank = 1; rank <= 3; ++rank)
        for (int p = 0; p < rank; ++p)
            for (int c = 1; c <= 2; ++c) {
                std::vector<int> e(static_cast<std::size_t>(rank), 0);
                e[static_cast<std::size_t>(p)] = c;
                const DynkinLabel l(e);
                const CharSeries f = ch_F(l, c + 1, 2);
                CHECK(f.slice(0) == finite_character(l, rank));
            }
}

TEST_CASE("ch_F_inf reproduces the su(2)_2 vacuum diagram") {
    const CharSeries f = ch_F_inf(DynkinLabel({0}), 2, 6);
    const int central[] = {1, 1, 3, 5, 10, 16, 28};
    for (int d = 0; d <= 6; ++d) CHECK(f.multiplicity(d, DynkinLabel({0})) == central[d]);
    CHECK(f.multiplicity(2, DynkinLabel({4})) == 1);   // v_1
    CHECK(f.multiplicity(2, DynkinLabel({-4})) == 1);  // v_-1
    CHECK(f.multiplicity(5, DynkinLabel({6})) == 1);
    CHECK(f.lo() == 0);
}

TEST_CASE("ch_F_inf su(4)_4 non-rectangular window") {
    const CharSeries f = ch_F_inf(DynkinLabel({1, 1, 0}), 4, 2);
    CHECK(f.lo() == -1);
    CHECK(f.multiplicity(-1, DynkinLabel({0, 0, 1})) == 1);
    // the q^-1 layer is the full defining antifundamental
    CHECK(f.slice(-1) == finite_character(DynkinLabel({0, 0, 1}), 3));
}

TEST_CASE("ch_F_inf rectangular positivity and window") {
    for (int rank = 1; rank <= 3; ++rank)
        for (int level = 1; level <= 4; ++level)
            for (int p = 0; p < rank; ++p)
                for (int c = 0; c <= level; ++c) {
                    std::vector<int> e(static_cast<std::size_t>(rank), 0);
                    e[static_cast<std::size_t>(p)] = c;
                    const CharSeries f = ch_F_inf(DynkinLabel(e), level, 5);
                    CHECK(f.lo() == 0);
                    CHECK(f.all_nonnegative());
                }
}

TEST_CASE("ch_F_inf finite Weyl symmetry for rectangles") {
    // rank 1: mu -> -mu
    const CharSeries a = ch_F_inf(DynkinLabel({2}), 3, 4);
    for (const auto& [d, ws] : a.data())
        for (const auto& [mu, mult] : ws) CHECK(a.multiplicity(d, DynkinLabel({-mu[0]})) == mult);

    // rank 2: both simple reflections
    const CartanData cd = CartanData::make(2);
    const CharSeries b = ch_F_inf(DynkinLabel({0, 2}), 3, 3);
    for (const auto& [d, ws] : b.data())
        for (const auto& [mu, mult] : ws)
            for (int i = 0; i < 2; ++i)
                CHECK(b.multiplicity(d, simple_reflection(mu, i, cd)) == mult);
}

TEST_CASE("pruned enumeration matches the naive box at rank 1") {
    for (int level = 1; level <= 2; ++level)
        for (int t = 0; t <= level; ++t) {
            const DynkinLabel l({t});
            CHECK(ch_F(l, level, 4) == testing::ch_F_boxed(l, level, 4, 8));
            CHECK(ch_F_inf(l, level, 4) == testing::ch_F_inf_boxed(l, level, 4, 8));
        }
}
