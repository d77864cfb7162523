#include <doctest.h>

#include <random>

#include "affchar/lie.hpp"

using namespace affchar;

TEST_CASE("cartan matrix entries") {
    CHECK(cartan_matrix(1) == std::vector<std::vector<int>>{{2}});
    CHECK(cartan_matrix(2) == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(cartan_matrix(3)[0][2] == 0);
    CHECK_THROWS_AS(cartan_matrix(0), usage_error);
}

TEST_CASE("inverse cartan entries and exactness") {
    CHECK(inverse_cartan(1)[0][0] == Rat(1, 2));
    CHECK(inverse_cartan(3)[0][2] == Rat(1, 4));
    CHECK(inverse_cartan(2)[1][1] == Rat(2, 3));
    CHECK_THROWS_AS(inverse_cartan(0), usage_error);

    for (int r = 1; r <= 8; ++r) {
        const auto c = cartan_matrix(r);
        const auto ci = inverse_cartan(r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Rat s = 0;
                for (int t = 0; t < r; ++t) s += Rat(c[i][t]) * ci[t][j];
                CHECK(s == Rat(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("threshold level") {
    CHECK(threshold_level(DynkinLabel({1, 2, 1})) == 4);
    CHECK(threshold_level(DynkinLabel({0, 0, 0})) == 0);
    CHECK(threshold_level(DynkinLabel({4, 0, 0})) == 4);
    CHECK_THROWS_AS(threshold_level(DynkinLabel({1, -1, 0})), usage_error);
}

TEST_CASE("congruence class") {
    CHECK(congruence_class(DynkinLabel({1, 0, 1}), 3) == 0);
    CHECK(congruence_class(DynkinLabel({1, 2, 1}), 3) == 0);
    CHECK(congruence_class(DynkinLabel({1}), 1) == 1);
    CHECK(congruence_class(DynkinLabel({-1, 0, 0}), 3) == 3);  // well defined on all labels
}

TEST_CASE("weyl translation fixtures") {
    const AffineWeight vac{DynkinLabel({0}), 2, 0};
    CHECK(weyl_translate(vac, {1}) == AffineWeight{DynkinLabel({4}), 2, -2});
    CHECK(weyl_translate(vac, {-1}) == AffineWeight{DynkinLabel({-4}), 2, -2});
    CHECK(weyl_translate(vac, {0}) == vac);
}

TEST_CASE("weyl translation is a group action and preserves the level") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> label(-2, 2);
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 4; ++k)
            for (int trial = 0; trial < 24; ++trial) {
                std::vector<int> finite(static_cast<std::size_t>(r));
                std::vector<int> n1(static_cast<std::size_t>(r)), n2(static_cast<std::size_t>(r));
                std::vector<int> sum(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i) {
                    finite[static_cast<std::size_t>(i)] = label(rng);
                    n1[static_cast<std::size_t>(i)] = entry(rng);
                    n2[static_cast<std::size_t>(i)] = entry(rng);
                    sum[static_cast<std::size_t>(i)] =
                        n1[static_cast<std::size_t>(i)] + n2[static_cast<std::size_t>(i)];
                }
                const AffineWeight w{DynkinLabel(finite), k, -trial};
                const AffineWeight two_step = weyl_translate(weyl_translate(w, n1), n2);
                const AffineWeight one_step = weyl_translate(w, sum);
                CHECK(two_step == one_step);
                CHECK(two_step.level == k);
            }
}

TEST_CASE("dominant weights enumeration and order") {
    const std::vector<DynkinLabel> expected = {
        DynkinLabel({0, 0, 0}), DynkinLabel({1, 0, 1}), DynkinLabel({0, 2, 0}),
        DynkinLabel({2, 1, 0}), DynkinLabel({0, 1, 2}), DynkinLabel({4, 0, 0}),
        DynkinLabel({2, 0, 2}), DynkinLabel({1, 2, 1}), DynkinLabel({0, 4, 0}),
        DynkinLabel({0, 0, 4})};
    CHECK(dominant_weights(3, 4, 0) == expected);

    CHECK(dominant_weights(1, 2, 0) ==
          std::vector<DynkinLabel>{DynkinLabel({0}), DynkinLabel({2})});
    CHECK(dominant_weights(2, 0, 0) == std::vector<DynkinLabel>{DynkinLabel({0, 0})});
    CHECK(dominant_weights(1, 0, 1).empty());  // class with no labels in range

    // strictly ordered, duplicate free, class-pure
    for (int r = 1; r <= 3; ++r)
        for (int cls = 0; cls <= r; ++cls) {
            const auto ws = dominant_weights(r, 5, cls);
            for (std::size_t i = 0; i < ws.size(); ++i) {
                CHECK(congruence_class(ws[i], r) == cls);
                if (i + 1 < ws.size()) {
                    const int ta = threshold_level(ws[i]), tb = threshold_level(ws[i + 1]);
                    const bool ordered =
                        ta < tb || (ta == tb && ws[i].entries() > ws[i + 1].entries());
                    CHECK(ordered);
                }
            }
        }
}

TEST_CASE("weyl orbit and dominant representative") {
    const CartanData cd = CartanData::make(2);
    const DynkinLabel w({1, 0});
    const auto orbit = weyl_orbit(w, cd);
    CHECK(orbit.size() == 3);  // weights of the defining rep of su(3)
    for (const auto& mu : orbit) CHECK(dominant_representative(mu, cd) == w);
}
