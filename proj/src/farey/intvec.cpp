#include "intvec.hpp"

#include <sstream>

namespace farey {

namespace {
void check_same_size(std::size_t a, std::size_t b) {
    if (a != b) throw Error("vector length mismatch");
}
} // namespace

IntVec::IntVec(std::initializer_list<long> xs) {
    c_.reserve(xs.size());
    for (long x : xs) c_.emplace_back(x);
}

IntVec IntVec::operator+(const IntVec& o) const {
    check_same_size(size(), o.size());
    IntVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

IntVec IntVec::operator-(const IntVec& o) const {
    check_same_size(size(), o.size());
    IntVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

IntVec IntVec::operator-() const {
    IntVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = -c_[i];
    return r;
}

IntVec IntVec::operator*(const Int& s) const {
    IntVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

bool IntVec::operator<(const IntVec& o) const {
    if (size() != o.size()) return size() < o.size();
    for (std::size_t i = 0; i < size(); ++i) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool IntVec::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

std::size_t IntVec::nonzero_count() const {
    std::size_t k = 0;
    for (const auto& x : c_)
        if (x != 0) ++k;
    return k;
}

std::string IntVec::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ')';
    return os.str();
}

RatVec::RatVec(std::vector<Rat> xs) : c_(std::move(xs)) {
    for (auto& x : c_) x.canonicalize();
}

RatVec::RatVec(const IntVec& v) : c_(v.size()) {
    for (std::size_t i = 0; i < v.size(); ++i) c_[i] = Rat(v[i]);
}

RatVec RatVec::operator+(const RatVec& o) const {
    check_same_size(size(), o.size());
    RatVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

RatVec RatVec::operator-(const RatVec& o) const {
    check_same_size(size(), o.size());
    RatVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

RatVec RatVec::operator*(const Rat& s) const {
    RatVec r(size());
    for (std::size_t i = 0; i < size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

bool RatVec::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

std::string RatVec::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ')';
    return os.str();
}

IntVec RatVec::primitive_direction() const {
    if (is_zero()) throw Error("zero vector has no direction");
    Int lcm = 1;
    for (const auto& x : c_) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        lcm = l;
    }
    IntVec r(size());
    Int g = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        r[i] = c_[i].get_num() * (lcm / c_[i].get_den());
        g = gcd(g, r[i]);
    }
    for (std::size_t i = 0; i < size(); ++i) r[i] /= g;
    return r;
}

IntVec basis_vector(std::size_t n, std::size_t i) {
    IntVec e(n);
    e[i] = 1;
    return e;
}

IntVec ones_vector(std::size_t n) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1;
    return v;
}

} // namespace farey
