#ifndef KGK_COMMON_HPP
#define KGK_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kgk {

/// Thrown on malformed input: schema violations, precondition failures,
/// rank mismatches. The CLI maps this class of error to exit code 2;
/// check *failures* are ordinary report values, never exceptions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal invariant broke. Indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

/// Execution policy for the exhaustive verification kernels. Serial is the
/// reference implementation; parallel must produce identical reports.
enum class Exec { serial, parallel };

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw InputError("integer overflow in exact arithmetic: " + std::to_string(a) +
                         " * " + std::to_string(b));
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw InputError("integer overflow in exact arithmetic: " + std::to_string(a) +
                         " + " + std::to_string(b));
    return r;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return std::gcd(a, b);
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a < 0 ? -a : a, (b < 0 ? -b : b) / gcd_ll(a, b));
}

/// Bounded integer draw from a raw 64-bit engine. Modulo bias is irrelevant
/// for test-corpus generation and keeps draws identical across platforms
/// (std::uniform_int_distribution is implementation-defined).
template <typename Rng>
long long rand_range(Rng& rng, long long lo, long long hi) {
    if (lo > hi) throw InternalError("rand_range: empty interval");
    unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ull;
    return lo + static_cast<long long>(rng() % span);
}

}  // namespace kgk

#endif
