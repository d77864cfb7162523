#ifndef AFFCHAR_KOSTKA_HPP
#define AFFCHAR_KOSTKA_HPP

#include <vector>

#include "affchar/lie.hpp"
#include "affchar/qpoly.hpp"

namespace affchar {

/// Generalized Kostka polynomial for the fusion product of the rectangles
/// n_i omega_i decomposing onto the highest weight l. Zero unless
/// C^-1 (n - l) is a vector of nonnegative integers.
QLaurent kostka_poly(const DynkinLabel& l, const DynkinLabel& n, int rank);

/// Same sum with the row widths allowed up to `parts_bound` instead of
/// k(n); rows wider than k(n) only add vanishing q-binomial factors, which
/// the truncation spot checks verify.
QLaurent kostka_poly_with_parts(const DynkinLabel& l, const DynkinLabel& n, int rank,
                                int parts_bound);

/// kostka_poly at q=1: the Littlewood-Richardson multiplicity.
Int lr_coefficient(const DynkinLabel& l, const DynkinLabel& n, int rank);

/// Square matrix of Kostka polynomials over a threshold-ordered basis of
/// dominant weights in one congruence class; upper triangular with unit
/// diagonal by the threshold vanishing rules (asserted on construction).
struct KostkaMatrix {
    std::vector<DynkinLabel> basis;
    std::vector<std::vector<QLaurent>> entries;  // [row l][col n]

    int size() const { return static_cast<int>(basis.size()); }
    int index_of(const DynkinLabel& w) const;  // -1 when absent
};

KostkaMatrix kostka_matrix(int rank, int max_threshold, int congruence);

/// Exact inverse by back substitution; K * K^-1 = I is verified.
KostkaMatrix invert(const KostkaMatrix& k);

}  // namespace affchar

#endif
