#include <doctest.h>

#include "affchar/qpoly.hpp"

using namespace affchar;

namespace {
QLaurent poly(std::initializer_list<std::pair<int, int>> terms) {
    QLaurent p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

Int binom(int n, int k) {
    Int b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}
}  // namespace

TEST_CASE("q pochhammer") {
    CHECK(q_pochhammer(0) == QLaurent::one());
    CHECK(q_pochhammer(1) == poly({{0, 1}, {1, -1}}));
    CHECK(q_pochhammer(2) == poly({{0, 1}, {1, -1}, {2, -1}, {3, 1}}));
    CHECK(q_pochhammer(5).max_exp() == 15);  // degree m(m+1)/2
    CHECK_THROWS_AS(q_pochhammer(-1), usage_error);
}

TEST_CASE("q binomial basics") {
    CHECK(q_binomial(1, 1) == poly({{0, 1}, {1, 1}}));
    CHECK(q_binomial(-1, 1).is_zero());
    CHECK(q_binomial(1, -2).is_zero());
    CHECK(q_binomial(3, 0) == QLaurent::one());
    CHECK(q_binomial(2, 2) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
}

TEST_CASE("q binomial properties") {
    for (int n = 0; n <= 8; ++n)
        for (int m = 0; m <= 8; ++m) {
            const QLaurent b = q_binomial(n, m);
            CHECK(b == q_binomial(m, n));
            CHECK(b.eval_at_one() == binom(n + m, m));
            CHECK(b.has_nonnegative_coefficients());
            if (n > 0 && m > 0) {
                CHECK(b.max_exp() == n * m);
                CHECK(b == q_binomial(n, m - 1) + q_binomial(n - 1, m).shifted(m));
            }
        }
}

TEST_CASE("q binomial equals pochhammer ratio") {
    // (q)_{n+m} = [n+m;m]_q (q)_n (q)_m, avoiding division
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
            CHECK(q_pochhammer(n + m) == q_binomial(n, m) * q_pochhammer(n) * q_pochhammer(m));
}

TEST_CASE("inverse pochhammer series") {
    const TruncatedSeries inf = inv_pochhammer_series_inf(6);
    const int partition_numbers[] = {1, 1, 2, 3, 5, 7, 11};
    for (int d = 0; d <= 6; ++d) CHECK(inf.coeff(d) == partition_numbers[d]);

    const TruncatedSeries ones = inv_pochhammer_series(1, 5);
    for (int d = 0; d <= 5; ++d) CHECK(ones.coeff(d) == 1);

    CHECK(inv_pochhammer_series(2, 4).coeff(4) == 3);  // 2+2, 2+1+1, 1+1+1+1
    CHECK(inv_pochhammer_series(0, 3).coeff(0) == 1);
    CHECK(inv_pochhammer_series(0, 3).coeff(3) == 0);
    CHECK_THROWS_AS(inv_pochhammer_series(-1, 3), usage_error);
}

TEST_CASE("pochhammer times its inverse is 1 on the window") {
    for (int m = 0; m <= 5; ++m) {
        const int window = 9;
        const TruncatedSeries prod = inv_pochhammer_series(m, window) * q_pochhammer(m);
        CHECK(prod.hi() >= window - 0);  // polynomial factor keeps the window
        for (int d = 0; d <= prod.hi() && d <= window; ++d)
            CHECK(prod.coeff(d) == (d == 0 ? 1 : 0));
    }
}

TEST_CASE("substitute q inverse") {
    CHECK(substitute_q_inverse(poly({{1, 1}})) == poly({{-1, 1}}));
    CHECK(substitute_q_inverse(poly({{0, 1}, {1, 1}, {2, 1}})) ==
          poly({{0, 1}, {-1, 1}, {-2, 1}}));
    CHECK(substitute_q_inverse(QLaurent{}).is_zero());
}

TEST_CASE("truncated series window arithmetic") {
    TruncatedSeries a(0, 3);
    a.add_term(0, 1);
    a.add_term(1, 2);
    TruncatedSeries b(1, 5);
    b.add_term(1, 1);
    b.add_term(2, 1);

    const TruncatedSeries sum = a + b;
    CHECK(sum.window() == std::pair<int, int>{0, 3});
    CHECK(sum.coeff(1) == 3);

    const TruncatedSeries prod = a * b;
    // product exact through min(lo_a + hi_b, hi_a + lo_b) = min(5, 4) = 4
    CHECK(prod.window() == std::pair<int, int>{1, 4});
    CHECK(prod.coeff(2) == 3);

    const TruncatedSeries shifted = a.shifted(-2);
    CHECK(shifted.window() == std::pair<int, int>{-2, 1});
    CHECK(shifted.coeff(-2) == 1);
}
