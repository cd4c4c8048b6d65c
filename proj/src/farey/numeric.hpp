#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace farey {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown for violated preconditions and unrepresentable requests.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// floor(a / b), b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(a / b) for rationals, b > 0
inline Int floor_div(const Rat& a, const Rat& b) {
    Rat q = a / b;
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace farey
