#ifndef MME_ERRORS_HPP
#define MME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mme {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated precondition or malformed argument (caller bug).
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// An element that was required to be a unit is not (gcd with the modulus > 1).
struct NonUnitError : Error {
    explicit NonUnitError(const std::string& msg) : Error(msg) {}
};

/// ap_prime_search exhausted the candidate cap for every common difference.
struct NoProgressionError : Error {
    explicit NoProgressionError(const std::string& msg) : Error(msg) {}
};

/// Input out of the supported range (e.g. primality beyond 64 bits).
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

/// Memory or size budget exceeded.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

/// Broken internal invariant; indicates a bug, not a usage problem.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

namespace detail {
[[noreturn]] inline void assert_fail(const char* expr, const char* file, int line) {
    throw InternalError(std::string("assertion failed: ") + expr + " at " + file + ":" +
                        std::to_string(line));
}
}  // namespace detail

}  // namespace mme

// Runtime invariant checks (CRT magnitude bounds, degree bounds, unit
// differences). Compiled in unless MME_UNCHECKED is defined, so the checked
// profile can run the full suite with them and a benchmarking build can drop
// them.
#ifndef MME_UNCHECKED
#define MME_ASSERT(expr) \
    ((expr) ? (void)0 : ::mme::detail::assert_fail(#expr, __FILE__, __LINE__))
#else
#define MME_ASSERT(expr) ((void)0)
#endif

#endif
