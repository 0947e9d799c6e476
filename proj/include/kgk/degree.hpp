#ifndef KGK_DEGREE_HPP
#define KGK_DEGREE_HPP

#include <string>
#include <vector>

#include "kgk/common.hpp"

namespace kgk {

/// Element of the lattice N^k: the multidegree of a path, one nonnegative
/// count per edge colour. The coordinatewise partial order drives
/// factorization, so comparisons here are `leq`/`geq` plus join and meet;
/// operator< is a plain lexicographic order for use in ordered containers.
class Degree {
public:
    Degree() = default;
    explicit Degree(std::vector<int> coords);
    static Degree zero(int rank);
    static Degree unit(int rank, int color);  // e_color, 0-based
    static Degree constant(int rank, int value);

    int rank() const { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<int>& coords() const { return c_; }

    bool operator==(const Degree& o) const { return c_ == o.c_; }
    bool operator!=(const Degree& o) const { return c_ != o.c_; }
    bool operator<(const Degree& o) const;  // lexicographic

    bool leq(const Degree& o) const;  // coordinatewise <=
    bool geq(const Degree& o) const { return o.leq(*this); }

    Degree operator+(const Degree& o) const;
    /// Coordinatewise difference; requires o.leq(*this).
    Degree minus(const Degree& o) const;
    Degree join(const Degree& o) const;
    Degree meet(const Degree& o) const;

    int total() const;
    bool is_zero() const;
    /// Every coordinate >= 1.
    bool strictly_positive() const;

    std::string to_string() const;  // "(a,b,...)"

private:
    void check_rank(const Degree& o) const;
    std::vector<int> c_;
};

struct DegreeCompare {
    bool leq = false;
    bool geq = false;
    Degree join;
    Degree meet;
};

DegreeCompare degree_compare(const Degree& m, const Degree& n);

/// All degrees d with 0 <= d <= bound, in lexicographic order.
std::vector<Degree> degrees_up_to(const Degree& bound);

}  // namespace kgk

#endif
