#ifndef AFFCHAR_ORACLES_HPP
#define AFFCHAR_ORACLES_HPP

#include <map>
#include <utility>
#include <vector>

#include "affchar/charseries.hpp"
#include "affchar/lie.hpp"

namespace affchar {

/// Weight multiplicities of an integrable module, depth-indexed (depth = -d).
/// The table stores full finite-Weyl orbits at every depth.
struct WeightTable {
    DynkinLabel highest;
    int level = 0;
    int max_depth = 0;
    std::map<std::pair<int, DynkinLabel>, Int> mult;  // (depth, weight) -> multiplicity

    Int multiplicity(int depth, const DynkinLabel& weight) const;
    CharSeries to_char_series() const;
};

/// Exact multiplicities for depths 0..max_depth via the affine Freudenthal
/// recursion, with real roots of multiplicity one and imaginary roots of
/// multiplicity r.
WeightTable freudenthal_affine(const DynkinLabel& l, int level, int max_depth);

/// Weight multiplicities of the finite irreducible V_l (full orbit table).
std::map<DynkinLabel, Int> finite_character(const DynkinLabel& l, int rank);

Int finite_dimension(const DynkinLabel& l, int rank);

/// Irreducible content of an iterated tensor product, by multiplying weight
/// tables and stripping highest weights.
std::map<DynkinLabel, Int> tensor_decompose(const std::vector<DynkinLabel>& factors, int rank);

}  // namespace affchar

#endif
