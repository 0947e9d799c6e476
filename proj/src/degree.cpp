#include "kgk/degree.hpp"

#include <algorithm>
#include <numeric>

namespace kgk {

Degree::Degree(std::vector<int> coords) : c_(std::move(coords)) {
    for (int v : c_)
        if (v < 0) throw InputError("degree coordinate must be nonnegative, got " + std::to_string(v));
}

Degree Degree::zero(int rank) {
    return Degree(std::vector<int>(static_cast<size_t>(rank), 0));
}

Degree Degree::unit(int rank, int color) {
    if (color < 0 || color >= rank)
        throw InternalError("Degree::unit: color out of range");
    std::vector<int> c(static_cast<size_t>(rank), 0);
    c[static_cast<size_t>(color)] = 1;
    return Degree(std::move(c));
}

Degree Degree::constant(int rank, int value) {
    return Degree(std::vector<int>(static_cast<size_t>(rank), value));
}

void Degree::check_rank(const Degree& o) const {
    if (rank() != o.rank())
        throw InputError("degree rank mismatch: " + std::to_string(rank()) + " vs " +
                         std::to_string(o.rank()));
}

bool Degree::operator<(const Degree& o) const {
    check_rank(o);
    return c_ < o.c_;
}

bool Degree::leq(const Degree& o) const {
    check_rank(o);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] > o.c_[i]) return false;
    return true;
}

Degree Degree::operator+(const Degree& o) const {
    check_rank(o);
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return Degree(std::move(r));
}

Degree Degree::minus(const Degree& o) const {
    check_rank(o);
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] < o.c_[i])
            throw InternalError("Degree::minus: result would be negative at coordinate " +
                                std::to_string(i));
        r[i] = c_[i] - o.c_[i];
    }
    return Degree(std::move(r));
}

Degree Degree::join(const Degree& o) const {
    check_rank(o);
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = std::max(c_[i], o.c_[i]);
    return Degree(std::move(r));
}

Degree Degree::meet(const Degree& o) const {
    check_rank(o);
    std::vector<int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = std::min(c_[i], o.c_[i]);
    return Degree(std::move(r));
}

int Degree::total() const {
    return std::accumulate(c_.begin(), c_.end(), 0);
}

bool Degree::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

bool Degree::strictly_positive() const {
    return !c_.empty() && std::all_of(c_.begin(), c_.end(), [](int v) { return v >= 1; });
}

std::string Degree::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    s += ")";
    return s;
}

DegreeCompare degree_compare(const Degree& m, const Degree& n) {
    DegreeCompare r;
    r.leq = m.leq(n);
    r.geq = m.geq(n);
    r.join = m.join(n);
    r.meet = m.meet(n);
    return r;
}

std::vector<Degree> degrees_up_to(const Degree& bound) {
    std::vector<Degree> out;
    std::vector<int> cur(static_cast<size_t>(bound.rank()), 0);
    while (true) {
        out.push_back(Degree(cur));
        // odometer increment, most significant coordinate first
        int i = bound.rank() - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == bound[i]) {
            cur[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
    }
    return out;
}

}  // namespace kgk
