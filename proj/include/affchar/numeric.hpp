#ifndef AFFCHAR_NUMERIC_HPP
#define AFFCHAR_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace affchar {

// Exact arithmetic only. No floating point anywhere in the engine.
using Int = mpz_class;
using Rat = mpq_class;

// Bad input from a caller (CLI maps this to a usage error).
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Broken internal invariant; never a data-dependent condition.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line,
                                      const std::string& msg) {
    std::ostringstream os;
    os << "invariant violated: " << expr << " at " << file << ":" << line;
    if (!msg.empty()) os << " (" << msg << ")";
    throw internal_error(os.str());
}
}  // namespace detail

#define AFFCHAR_CHECK(cond, msg)                                             \
    do {                                                                     \
        if (!(cond)) ::affchar::detail::check_failed(#cond, __FILE__, __LINE__, (msg)); \
    } while (0)

inline std::int64_t to_int64(const Int& v) {
    AFFCHAR_CHECK(v.fits_slong_p(), "value exceeds int64 range");
    return static_cast<std::int64_t>(v.get_si());
}

// gmpxx has no long long constructor; this relies on LP64 long.
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace affchar

#endif
