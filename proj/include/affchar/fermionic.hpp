#ifndef AFFCHAR_FERMIONIC_HPP
#define AFFCHAR_FERMIONIC_HPP

#include <functional>
#include <vector>

#include "affchar/charseries.hpp"
#include "affchar/lie.hpp"

namespace affchar {

/// Restricted-partition data m^{(i)}_a for colors i=1..r and row widths
/// a=1..k. In translated mode the a=k entries may be negative; all other
/// entries are nonnegative.
struct MVector {
    int rank = 0;
    int width = 0;
    bool translated = false;
    std::vector<int> counts;  // counts[i*width + a], zero-based

    MVector() = default;
    MVector(int rank, int width, bool translated);

    int at(int color, int row_width) const { return counts[index(color, row_width)]; }
    void set(int color, int row_width, int value);
    /// m^{(i)} = sum_a a * m^{(i)}_a.
    long long color_total(int color) const;

private:
    std::size_t index(int color, int row_width) const {
        return static_cast<std::size_t>(color) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(row_width);
    }
};

/// Exponent (1/2) m (C x A) m - sum_{i,a} A_{a,l_i} m^{(i)}_a; the quadratic
/// form value is asserted integral.
int exponent(const MVector& m, const DynkinLabel& l, const CartanData& cd, const AMatrix& amat);

/// mu_i = l_i - sum_j C_{ji} m^{(j)}.
DynkinLabel weight_of(const MVector& m, const DynkinLabel& l, const CartanData& cd);

/// Untranslated character ch F: all m >= 0, denominator factors
/// 1/(q)_{m^{(i)}_a} for every a = 1..k. Window [min exponent, max_exp].
CharSeries ch_F(const DynkinLabel& l, int level, int max_exp);

/// Translated character ch F^inf: a=k entries range over Z, denominator the
/// a<k factors times 1/(q)_inf^r. Window [-B, max_exp] with B the negation of
/// the minimal enumerated exponent.
CharSeries ch_F_inf(const DynkinLabel& l, int level, int max_exp);

/// Lossless enumeration of all m with exponent <= max_exp, pruned by exact
/// conditional minima of the convex quadratic over real completions.
class FermionicEnumerator {
public:
    FermionicEnumerator(const DynkinLabel& l, int level, bool translated);

    /// visit(m, exponent) for every admissible m; deterministic order.
    void enumerate(int max_exp, const std::function<void(const MVector&, int)>& visit) const;

private:
    struct Level {
        // 2*scale*mu_p(z) = z^T S z - c2 . z + d2, entries integer.
        std::vector<std::vector<long long>> S;
        std::vector<long long> c2;
        long long d2 = 0;
        long long scale = 1;
    };

    void scan(std::vector<int>& prefix, int max_exp,
              const std::function<void(const MVector&, int)>& visit) const;
    int exact_exponent(const std::vector<int>& full) const;

    DynkinLabel l_;
    int rank_ = 0;
    int width_ = 0;
    int vars_ = 0;
    bool translated_ = false;
    std::vector<std::vector<long long>> q_;  // C x A, integer
    std::vector<long long> lin_;             // A_{a,l_i}
    std::vector<Level> levels_;              // levels_[p-1] bounds prefixes of length p
};

namespace testing {
/// Naive box enumeration sharing the series assembly; used by the
/// pruned-vs-naive completeness checks.
CharSeries ch_F_boxed(const DynkinLabel& l, int level, int max_exp, int box);
CharSeries ch_F_inf_boxed(const DynkinLabel& l, int level, int max_exp, int box);
}  // namespace testing

}  // namespace affchar

#endif
