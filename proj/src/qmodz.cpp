#include "kgk/qmodz.hpp"

#include <algorithm>

namespace kgk {

QmodZ::QmodZ(long long num, long long den) {
    if (den <= 0) throw InputError("QmodZ: denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    long long g = gcd_ll(num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

bool QmodZ::operator<(const QmodZ& o) const {
    // num_/den_ < o.num_/o.den_ without overflow on sane denominators
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

QmodZ QmodZ::operator+(const QmodZ& o) const {
    long long d = lcm_ll(den_, o.den_);
    long long n = checked_add(checked_mul(num_, d / den_), checked_mul(o.num_, d / o.den_));
    return QmodZ(n, d);
}

QmodZ QmodZ::operator-(const QmodZ& o) const {
    long long d = lcm_ll(den_, o.den_);
    long long n = checked_mul(num_, d / den_) - checked_mul(o.num_, d / o.den_);
    return QmodZ(n, d);
}

std::string QmodZ::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

QmodZ root_pow(const QmodZ& z, long long n) {
    return QmodZ(checked_mul(n, z.num()), z.den());
}

std::vector<QmodZ> root_preimages(const QmodZ& z, long long n) {
    if (n < 1) throw InputError("root_preimages: n must be >= 1");
    std::vector<QmodZ> out;
    out.reserve(static_cast<size_t>(n));
    for (long long j = 0; j < n; ++j)
        out.push_back(signed_preimage(z, n, j));
    std::sort(out.begin(), out.end());
    return out;
}

QmodZ signed_preimage(const QmodZ& z, long long n, long long j) {
    if (n < 1) throw InputError("signed_preimage: n must be >= 1");
    j %= n;
    if (j < 0) j += n;
    // (num/den + j) / n = (num + j*den) / (n*den)
    return QmodZ(checked_add(z.num(), checked_mul(j, z.den())), checked_mul(n, z.den()));
}

}  // namespace kgk
