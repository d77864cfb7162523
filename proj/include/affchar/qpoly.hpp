#ifndef AFFCHAR_QPOLY_HPP
#define AFFCHAR_QPOLY_HPP

#include <map>
#include <utility>

#include "affchar/numeric.hpp"

namespace affchar {

/// Sparse Laurent polynomial in q with arbitrary-precision integer
/// coefficients. No zero coefficients are stored.
class QLaurent {
public:
    QLaurent() = default;
    static QLaurent one() { return monomial(0, 1); }
    static QLaurent monomial(int exponent, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    Int coeff(int exponent) const;
    const std::map<int, Int>& terms() const { return terms_; }

    void add_term(int exponent, const Int& coeff);
    QLaurent shifted(int by) const;
    Int eval_at_one() const;
    bool has_nonnegative_coefficients() const;

    QLaurent operator+(const QLaurent& o) const;
    QLaurent operator-(const QLaurent& o) const;
    QLaurent operator*(const QLaurent& o) const;
    QLaurent operator-() const;
    bool operator==(const QLaurent&) const = default;

private:
    std::map<int, Int> terms_;
};

/// (q)_m = prod_{i=1..m} (1 - q^i), with (q)_0 = 1.
QLaurent q_pochhammer(int m);

/// [n+m; m]_q = (q)_{n+m} / ((q)_n (q)_m) for n,m >= 0 and zero otherwise.
/// Computed by the Pascal recurrence, no polynomial division.
QLaurent q_binomial(int n, int m);

/// q -> 1/q on every term.
QLaurent substitute_q_inverse(const QLaurent& p);

/// Power series in q known exactly on a finite window: the series is
/// supported on exponents >= lo(), coefficients are exact for exponents
/// <= hi(), and anything above hi() is unknown (dropped). Product windows
/// follow [lo1+lo2, min(lo1+hi2, hi1+lo2)].
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(int lo, int hi) : lo_(lo), hi_(hi) {}
    static TruncatedSeries one(int hi) {
        TruncatedSeries s(0, hi);
        if (hi >= 0) s.add_term(0, 1);
        return s;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::pair<int, int> window() const { return {lo_, hi_}; }

    Int coeff(int exponent) const;  // requires exponent <= hi
    const std::map<int, Int>& terms() const { return terms_; }
    void add_term(int exponent, const Int& coeff);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const QLaurent& p) const;
    TruncatedSeries shifted(int by) const;
    TruncatedSeries truncated(int hi) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::map<int, Int> terms_;
    int lo_ = 0;
    int hi_ = -1;
};

/// 1/(q)_m as a series on [0, max_exp]: the coefficient of q^d counts
/// partitions of d into parts <= m.
TruncatedSeries inv_pochhammer_series(int m, int max_exp);

/// 1/(q)_inf on [0, max_exp]: unrestricted partition counts.
TruncatedSeries inv_pochhammer_series_inf(int max_exp);

}  // namespace affchar

#endif
