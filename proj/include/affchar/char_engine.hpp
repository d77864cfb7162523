#ifndef AFFCHAR_CHAR_ENGINE_HPP
#define AFFCHAR_CHAR_ENGINE_HPP

#include <string>
#include <utility>
#include <vector>

#include "affchar/charseries.hpp"
#include "affchar/kostka.hpp"
#include "affchar/lie.hpp"

namespace affchar {

/// Fusion-product decomposition of ch F^inf_n onto irreducible characters:
/// the coefficient of ch H_l is the Kostka polynomial K_{l,n} at 1/q.
struct Decomposition {
    DynkinLabel source;
    std::vector<std::pair<DynkinLabel, QLaurent>> terms;  // coefficients in 1/q
};

Decomposition decompose_fusion(const DynkinLabel& n, int rank);

/// Character of the irreducible integrable module H_{(l;k)}: the K^-1(1/q)
/// combination of translated fermionic characters. All negative q-exponents
/// cancel exactly; window [0, max_exp].
CharSeries ch_H(const DynkinLabel& l, int level, int max_exp);

/// Principal-subspace character: the same combination applied to the
/// untranslated ch F series.
CharSeries ch_W(const DynkinLabel& l, int level, int max_exp);

struct VerifyReport {
    bool equal = false;
    std::string detail;  // first counterexample when not equal
};

/// Checks ch F^inf(n) against the Kostka combination of Freudenthal
/// characters, exactly on the full window up to max_exp.
VerifyReport verify_decomposition(const DynkinLabel& n, int level, int max_exp);

}  // namespace affchar

#endif
