#ifndef MME_TESTUTIL_HPP
#define MME_TESTUTIL_HPP

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

// Tiny check harness in the style of the rest of our test mains: every
// CHECK records a failure instead of aborting, so one run reports them all.

namespace testutil {

inline int g_failures = 0;
inline std::string g_context;

inline void set_context(const std::string& ctx) { g_context = ctx; }

inline void fail(const std::string& what, const char* file, int line) {
    ++g_failures;
    std::cerr << "FAIL " << file << ":" << line << " [" << g_context << "] " << what << "\n";
}

#define CHECK(cond)                                     \
    do {                                                \
        if (!(cond)) testutil::fail(#cond, __FILE__, __LINE__); \
    } while (0)

#define CHECK_EQ(a, b)                                                              \
    do {                                                                            \
        if (!((a) == (b))) testutil::fail(std::string(#a " == " #b), __FILE__, __LINE__); \
    } while (0)

#define CHECK_THROWS(expr, ExType)                                                      \
    do {                                                                                \
        bool caught_ = false;                                                           \
        try {                                                                           \
            (void)(expr);                                                               \
        } catch (const ExType&) {                                                       \
            caught_ = true;                                                             \
        } catch (...) {                                                                 \
        }                                                                               \
        if (!caught_) testutil::fail("expected " #ExType " from " #expr, __FILE__, __LINE__); \
    } while (0)

inline int finish(const char* name) {
    if (g_failures == 0) {
        std::cout << name << ": all tests passed\n";
        return 0;
    }
    std::cout << name << ": " << g_failures << " failure(s)\n";
    return 1;
}

}  // namespace testutil

#endif
