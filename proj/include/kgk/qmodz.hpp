#ifndef KGK_QMODZ_HPP
#define KGK_QMODZ_HPP

#include <string>
#include <vector>

#include "kgk/common.hpp"

namespace kgk {

/// Point on the rational circle Q/Z, stored as a reduced fraction num/den
/// with 0 <= num < den. All arithmetic is exact; overflow throws rather
/// than wrapping, so verification results are never silently wrong.
class QmodZ {
public:
    QmodZ() : num_(0), den_(1) {}
    QmodZ(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool operator==(const QmodZ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QmodZ& o) const { return !(*this == o); }
    bool operator<(const QmodZ& o) const;  // order as rationals in [0,1)

    QmodZ operator+(const QmodZ& o) const;
    QmodZ operator-(const QmodZ& o) const;

    std::string to_string() const;  // "num/den"

private:
    long long num_, den_;
};

/// z^n on the circle written additively: n * z mod 1. Negative n allowed.
QmodZ root_pow(const QmodZ& z, long long n);

/// All w with n*w == z, n >= 1: the n preimages (num + j*den)/(n*den),
/// sorted ascending.
std::vector<QmodZ> root_preimages(const QmodZ& z, long long n);

/// The j-th preimage (z + j)/n for n >= 1, j in Z_n.
QmodZ signed_preimage(const QmodZ& z, long long n, long long j);

}  // namespace kgk

#endif
