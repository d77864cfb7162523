#include "affchar/charseries.hpp"

#include <algorithm>

namespace affchar {

void CharSeries::add_term(int degree, const DynkinLabel& weight, const Int& mult) {
    if (mult == 0 || degree > hi_) return;
    AFFCHAR_CHECK(degree >= lo_, "character term below the support bound");
    auto& slot = data_[degree][weight];
    slot += mult;
    if (slot == 0) {
        data_[degree].erase(weight);
        if (data_[degree].empty()) data_.erase(degree);
    }
}

Int CharSeries::multiplicity(int degree, const DynkinLabel& weight) const {
    AFFCHAR_CHECK(degree <= hi_, "multiplicity outside the exact window");
    auto it = data_.find(degree);
    if (it == data_.end()) return 0;
    auto jt = it->second.find(weight);
    return jt == it->second.end() ? Int(0) : jt->second;
}

const std::map<DynkinLabel, Int>& CharSeries::slice(int degree) const {
    static const std::map<DynkinLabel, Int> empty;
    AFFCHAR_CHECK(degree <= hi_, "slice outside the exact window");
    auto it = data_.find(degree);
    return it == data_.end() ? empty : it->second;
}

int CharSeries::min_degree() const {
    AFFCHAR_CHECK(!data_.empty(), "min_degree of empty series");
    return data_.begin()->first;
}

CharSeries CharSeries::operator+(const CharSeries& o) const {
    AFFCHAR_CHECK(rank_ == o.rank_ && level_ == o.level_, "mismatched series");
    CharSeries out(rank_, level_, std::min(lo_, o.lo_), std::min(hi_, o.hi_));
    for (const auto& [d, ws] : data_) {
        if (d > out.hi_) break;
        for (const auto& [w, m] : ws) out.add_term(d, w, m);
    }
    for (const auto& [d, ws] : o.data_) {
        if (d > out.hi_) break;
        for (const auto& [w, m] : ws) out.add_term(d, w, m);
    }
    return out;
}

CharSeries CharSeries::scaled(const QLaurent& p) const {
    if (p.is_zero()) return CharSeries(rank_, level_, lo_, hi_);
    CharSeries out(rank_, level_, lo_ + p.min_exp(), hi_ + p.min_exp());
    for (const auto& [d, ws] : data_)
        for (const auto& [e, c] : p.terms()) {
            if (d + e > out.hi_) continue;
            for (const auto& [w, m] : ws) out.add_term(d + e, w, m * c);
        }
    return out;
}

CharSeries CharSeries::truncated(int hi) const {
    CharSeries out(rank_, level_, lo_, std::min(hi_, hi));
    for (const auto& [d, ws] : data_) {
        if (d > out.hi_) break;
        for (const auto& [w, m] : ws) out.add_term(d, w, m);
    }
    return out;
}

CharSeries CharSeries::with_floor(int lo) const {
    AFFCHAR_CHECK(data_.empty() || data_.begin()->first >= lo,
                  "raising the floor would drop stored terms");
    CharSeries out(rank_, level_, lo, hi_);
    out.data_ = data_;
    return out;
}

bool CharSeries::all_nonnegative() const {
    for (const auto& [d, ws] : data_)
        for (const auto& [w, m] : ws)
            if (m < 0) return false;
    return true;
}

}  // namespace affchar
