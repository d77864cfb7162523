#ifndef AFFCHAR_CHARSERIES_HPP
#define AFFCHAR_CHARSERIES_HPP

#include <map>
#include <utility>

#include "affchar/lie.hpp"
#include "affchar/qpoly.hpp"

namespace affchar {

/// Graded character: multiplicity per (q-exponent, finite weight). Carries
/// the same window semantics as TruncatedSeries in the q direction:
/// supported on degrees >= lo(), exact through hi(), unknown above.
class CharSeries {
public:
    CharSeries() = default;
    CharSeries(int rank, int level, int lo, int hi)
        : rank_(rank), level_(level), lo_(lo), hi_(hi) {}

    int rank() const { return rank_; }
    int level() const { return level_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::pair<int, int> window() const { return {lo_, hi_}; }

    void add_term(int degree, const DynkinLabel& weight, const Int& mult);
    Int multiplicity(int degree, const DynkinLabel& weight) const;

    /// degree -> (weight -> multiplicity); no zero entries.
    const std::map<int, std::map<DynkinLabel, Int>>& data() const { return data_; }
    const std::map<DynkinLabel, Int>& slice(int degree) const;

    bool empty() const { return data_.empty(); }
    int min_degree() const;  // requires nonempty

    CharSeries operator+(const CharSeries& o) const;

    /// Multiply by a Laurent polynomial in q (convolution over the degree).
    CharSeries scaled(const QLaurent& p) const;

    CharSeries truncated(int hi) const;

    /// Drop the window floor to `lo`, asserting nothing is stored below it.
    CharSeries with_floor(int lo) const;

    bool all_nonnegative() const;
    bool operator==(const CharSeries&) const = default;

private:
    int rank_ = 0;
    int level_ = 0;
    int lo_ = 0;
    int hi_ = -1;
    std::map<int, std::map<DynkinLabel, Int>> data_;
};

}  // namespace affchar

#endif
