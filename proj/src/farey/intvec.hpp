#pragma once

#include "numeric.hpp"

#include <initializer_list>
#include <vector>

namespace farey {

// Point/vector in Z^n with arbitrary-precision coordinates.
// The length is fixed at construction; mixed-length arithmetic throws.
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::size_t n) : c_(n, Int(0)) {}
    IntVec(std::initializer_list<long> xs);
    explicit IntVec(std::vector<Int> xs) : c_(std::move(xs)) {}

    std::size_t size() const { return c_.size(); }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    Int& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Int>& coords() const { return c_; }

    IntVec operator+(const IntVec& o) const;
    IntVec operator-(const IntVec& o) const;
    IntVec operator-() const;
    IntVec operator*(const Int& s) const;
    bool operator==(const IntVec& o) const { return c_ == o.c_; }
    bool operator!=(const IntVec& o) const { return c_ != o.c_; }
    bool operator<(const IntVec& o) const; // lexicographic, for ordered containers

    bool is_zero() const;
    std::size_t nonzero_count() const;

    std::string str() const; // "(a,b,c)"

private:
    std::vector<Int> c_;
};

// Vector in Q^n, denominators positive, fractions reduced.
class RatVec {
public:
    RatVec() = default;
    explicit RatVec(std::size_t n) : c_(n, Rat(0)) {}
    explicit RatVec(std::vector<Rat> xs);
    explicit RatVec(const IntVec& v);

    std::size_t size() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }

    RatVec operator+(const RatVec& o) const;
    RatVec operator-(const RatVec& o) const;
    RatVec operator*(const Rat& s) const;
    bool operator==(const RatVec& o) const { return c_ == o.c_; }

    bool is_zero() const;
    std::string str() const;

    // Clears denominators and divides by the content; zero vector throws.
    IntVec primitive_direction() const;

private:
    std::vector<Rat> c_;
};

IntVec basis_vector(std::size_t n, std::size_t i);
IntVec ones_vector(std::size_t n);

} // namespace farey
