#ifndef AFFCHAR_LIE_HPP
#define AFFCHAR_LIE_HPP

#include <compare>
#include <vector>

#include "affchar/numeric.hpp"

namespace affchar {

/// Finite weight of su(r+1) in the fundamental-weight (Dynkin-label) basis.
/// Entries may be negative; dominance is a property, not an invariant.
class DynkinLabel {
public:
    DynkinLabel() = default;
    explicit DynkinLabel(std::vector<int> entries) : entries_(std::move(entries)) {}
    static DynkinLabel zero(int rank) { return DynkinLabel(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool dominant() const {
        for (int e : entries_)
            if (e < 0) return false;
        return true;
    }

    auto operator<=>(const DynkinLabel&) const = default;

private:
    std::vector<int> entries_;
};

/// Weight of the affine algebra: finite part, level, grading eigenvalue d <= 0
/// for weights of the integrable modules built here.
struct AffineWeight {
    DynkinLabel finite;
    int level = 0;
    int degree = 0;

    bool operator==(const AffineWeight&) const = default;
};

/// Cartan matrix of su(r+1) and its exact rational inverse.
struct CartanData {
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<Rat>> inv;

    static CartanData make(int rank);
};

/// A_{ab} = min(a,b); symmetric positive definite. Indices are 1-based.
struct AMatrix {
    int size = 0;
    int at(int a, int b) const { return a < b ? a : b; }
};

std::vector<std::vector<int>> cartan_matrix(int rank);
std::vector<std::vector<Rat>> inverse_cartan(int rank);

/// k(l) = sum of Dynkin labels; rejects non-dominant l.
int threshold_level(const DynkinLabel& l);

/// Sum_i i*l_i mod (r+1); defined for any integer label.
int congruence_class(const DynkinLabel& l, int rank);

/// Affine Weyl translation by the root-lattice vector N: the finite part
/// shifts by k*Sum N_i alpha_i, the degree drops by Sum N_i l_i + (k/2) N^T C N.
AffineWeight weyl_translate(const AffineWeight& w, const std::vector<int>& shifts);

/// All dominant labels with threshold <= max_threshold in the given congruence
/// class, ordered by threshold ascending, ties lexicographically descending.
std::vector<DynkinLabel> dominant_weights(int rank, int max_threshold, int congruence);

// Weyl-group helpers shared by the oracles and the symmetry tests.
DynkinLabel simple_reflection(const DynkinLabel& mu, int i, const CartanData& cd);
DynkinLabel dominant_representative(const DynkinLabel& mu, const CartanData& cd);
std::vector<DynkinLabel> weyl_orbit(const DynkinLabel& mu, const CartanData& cd);

/// Invariant form (mu|nu) = mu^T C^-1 nu, normalized so roots have length^2 2.
Rat weight_form(const DynkinLabel& mu, const DynkinLabel& nu, const CartanData& cd);

}  // namespace affchar

#endif
