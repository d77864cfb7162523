#include <doctest.h>

#include "affchar/kostka.hpp"
#include "affchar/oracles.hpp"

using namespace affchar;

namespace {
QLaurent poly(std::initializer_list<std::pair<int, int>> terms) {
    QLaurent p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}
}  // namespace

TEST_CASE("kostka polynomial fixtures") {
    CHECK(kostka_poly(DynkinLabel({0, 0, 0}), DynkinLabel({1, 0, 1}), 3) == poly({{1, 1}}));
    CHECK(kostka_poly(DynkinLabel({0, 2, 0}), DynkinLabel({1, 2, 1}), 3) ==
          poly({{1, 1}, {2, 1}}));
    CHECK(kostka_poly(DynkinLabel({0, 0, 0}), DynkinLabel({2, 0, 2}), 3) == poly({{2, 1}}));
    CHECK(kostka_poly(DynkinLabel({1, 2, 1}), DynkinLabel({1, 2, 1}), 3) == QLaurent::one());
    CHECK(kostka_poly(DynkinLabel({0, 0, 0}), DynkinLabel({0, 0, 0}), 3) == QLaurent::one());
    CHECK_THROWS_AS(kostka_poly(DynkinLabel({1}), DynkinLabel({1, 0}), 2), usage_error);
}

TEST_CASE("row widths beyond the threshold contribute nothing") {
    // the closed formula truncates rows at k(n); widening must not change it
    const std::vector<std::pair<DynkinLabel, DynkinLabel>> samples = {
        {DynkinLabel({0, 2, 0}), DynkinLabel({1, 2, 1})},
        {DynkinLabel({0, 0, 0}), DynkinLabel({2, 0, 2})},
        {DynkinLabel({0, 1, 0}), DynkinLabel({1, 1, 1})},
        {DynkinLabel({1, 0, 1}), DynkinLabel({1, 2, 1})},
        {DynkinLabel({0}), DynkinLabel({4})},
    };
    for (const auto& [l, n] : samples) {
        const int rank = l.rank();
        const int kn = threshold_level(n);
        CHECK(kostka_poly(l, n, rank) == kostka_poly_with_parts(l, n, rank, kn + 2));
    }
}

TEST_CASE("littlewood-richardson specialization fixtures") {
    CHECK(lr_coefficient(DynkinLabel({0, 1, 0}), DynkinLabel({1, 1, 1}), 3) == 2);
    CHECK(lr_coefficient(DynkinLabel({1, 1, 1}), DynkinLabel({1, 1, 1}), 3) == 1);
    CHECK(lr_coefficient(DynkinLabel({2, 0, 0}), DynkinLabel({1, 1, 1}), 3) == 1);
}

TEST_CASE("kostka matrix fixture and inverse") {
    const KostkaMatrix k = kostka_matrix(3, 4, 0);
    REQUIRE(k.size() == 10);
    CHECK(k.basis[1] == DynkinLabel({1, 0, 1}));
    CHECK(k.entries[0][1] == poly({{1, 1}}));
    CHECK(k.entries[0][6] == poly({{2, 1}}));
    CHECK(k.entries[2][7] == poly({{1, 1}, {2, 1}}));
    CHECK(k.entries[5][5] == QLaurent::one());
    CHECK(k.entries[3][1].is_zero());

    const KostkaMatrix ki = invert(k);
    CHECK(ki.entries[0][7] == poly({{3, -1}}));
    CHECK(ki.entries[1][6] == poly({{1, -1}}));
    CHECK(ki.entries[2][7] == poly({{1, -1}, {2, -1}}));

    // identity inverts to itself
    const KostkaMatrix id = kostka_matrix(1, 4, 0);
    const KostkaMatrix id_inv = invert(id);
    for (int r = 0; r < id.size(); ++r)
        for (int c = 0; c < id.size(); ++c)
            CHECK(id_inv.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                  (r == c ? QLaurent::one() : QLaurent{}));
}

TEST_CASE("rank 1 kostka matrices are the identity") {
    for (int cls = 0; cls <= 1; ++cls) {
        const KostkaMatrix k = kostka_matrix(1, 6, cls);
        for (int r = 0; r < k.size(); ++r)
            for (int c = 0; c < k.size(); ++c) {
                const auto& e =
                    k.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                CHECK((r == c ? e.is_one() : e.is_zero()));
            }
    }
}

TEST_CASE("vanishing rules") {
    for (int rank = 1; rank <= 3; ++rank) {
        std::vector<DynkinLabel> all;
        for (int cls = 0; cls <= rank; ++cls) {
            const auto part = dominant_weights(rank, 4, cls);
            all.insert(all.end(), part.begin(), part.end());
        }
        for (const auto& l : all)
            for (const auto& n : all) {
                const QLaurent k = kostka_poly(l, n, rank);
                CHECK(k.has_nonnegative_coefficients());
                if (threshold_level(l) > threshold_level(n)) CHECK(k.is_zero());
                if (threshold_level(l) == threshold_level(n) && l != n) CHECK(k.is_zero());
                if (congruence_class(l, rank) != congruence_class(n, rank)) CHECK(k.is_zero());
                if (l == n) CHECK(k.is_one());
            }
    }
}

TEST_CASE("lr coefficients agree with the tensor oracle") {
    for (int rank = 1; rank <= 2; ++rank)
        for (int cls = 0; cls <= rank; ++cls)
            for (const auto& n : dominant_weights(rank, 3, cls)) {
                std::vector<DynkinLabel> factors;
                for (int i = 0; i < rank; ++i)
                    if (n[i] > 0) {
                        std::vector<int> f(static_cast<std::size_t>(rank), 0);
                        f[static_cast<std::size_t>(i)] = n[i];
                        factors.emplace_back(std::move(f));
                    }
                const auto tensor = tensor_decompose(factors, rank);
                for (const auto& l :
                     dominant_weights(rank, threshold_level(n), congruence_class(n, rank))) {
                    auto it = tensor.find(l);
                    CHECK(lr_coefficient(l, n, rank) ==
                          (it == tensor.end() ? Int(0) : it->second));
                }
            }
}

TEST_CASE("invert rejects a non-unit diagonal") {
    KostkaMatrix bad;
    bad.basis = {DynkinLabel({0})};
    bad.entries = {{poly({{1, 1}})}};
    CHECK_THROWS_AS(invert(bad), usage_error);
}
