#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "valgb/error.hpp"
#include "valgb/ext_int.hpp"

namespace valgb {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

/// Exponent of the largest power of p dividing z; infinity for z = 0.
inline ExtInt padic_order(const mpz_class& z, unsigned long p) {
    if (sgn(z) == 0) return ExtInt::infinity();
    if (p == 2) return static_cast<std::int64_t>(mpz_scan1(z.get_mpz_t(), 0));
    if (!mpz_divisible_ui_p(z.get_mpz_t(), p)) return 0;
    mpz_class rest;
    mpz_class prime(p);
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

inline ExtInt padic_order(const mpq_class& q, unsigned long p) {
    if (sgn(q) == 0) return ExtInt::infinity();
    return ExtInt(padic_order(q.get_num(), p).value() - padic_order(q.get_den(), p).value());
}

inline mpz_class ipow(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

/// Bit size of a rational, used by coefficient-growth circuit breakers.
inline std::size_t bit_size(const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

inline mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
        throw DomainError("invalid rational literal '" + text + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace detail
}  // namespace valgb
