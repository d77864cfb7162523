// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "affchar/verify.hpp"

namespace {

struct Criterion {
    const char* label;
    const char* suite;
};

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const std::vector<Criterion> criteria = {
        {"criterion 1: su(4) Kostka matrix and inverse match the printed fixtures",
         "kostka-matrix-fixture"},
        {"criterion 2: su(2)_2 vacuum diagram reproduced by ch_H and Freudenthal",
         "su2k2-figure"},
        {"criterion 3: nine su(4)_4 fusion expansions verified against the oracle to degree 4",
         "su4-level4-tables"},
        {"criterion 4: ch_F_inf(l1,0,l3;4) = sum_j q^-j ch_H(l1-j,0,l3-j;4) to degree 4",
         "l1-0-l3-relation"},
        {"criterion 5: Kostka(q=1) equals tensor-product multiplicities on the full grid",
         "lr-specialization"},
        {"criterion 6: property suites (vanishing, inverses, positivity, rectangles, "
         "q-binomials, pruning)",
         "properties"},
        {"criterion 7: affine Weyl translations map the su(2)_2 vacuum to v_1 and v_-1",
         "weyl-translation"},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        bool ok = true;
        std::string detail;
        try {
            const auto results = affchar::run_verify_suite(c.suite);
            for (const auto& r : results)
                if (!r.pass) {
                    ok = false;
                    detail = r.name + (r.detail.empty() ? "" : ": " + r.detail);
                    break;
                }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("%s  %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.label, seconds,
                    detail.empty() ? "" : "  -- ", detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
