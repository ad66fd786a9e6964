#pragma once

// Closed-form degree and valuation bounds for reduced bases of homogeneous
// ideals in Q[x_1..x_n] with the p-adic valuation.
//
// The degree bound is double exponential in n, so the Hilbert dimension A at
// that degree is read off the Hilbert series of the initial monomial ideal,
// which stays cheap for any degree. The two agree because I and its initial
// ideal share a Hilbert function.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "valgb/buchberger.hpp"
#include "valgb/error.hpp"
#include "valgb/gmp_util.hpp"
#include "valgb/monomial.hpp"
#include "valgb/polynomial.hpp"

namespace valgb {

/// ceil(2 (d^2/2 + d)^(2^(n-2))), evaluated exactly.
inline mpz_class dube_degree_bound(std::uint64_t n, std::uint64_t d) {
    if (n < 2) throw DomainError("dube_degree_bound: needs at least two variables");
    if (d < 1) throw DomainError("dube_degree_bound: degree must be positive");
    mpq_class base(mpz_class(d) * d, 2);
    base.canonicalize();
    base += mpz_class(d);
    if (n - 2 >= 32) throw DomainError("dube_degree_bound: exponent 2^(n-2) is too large to evaluate");
    const unsigned long e = 1UL << (n - 2);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    num *= 2;
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

/// Smallest k >= 0 with p^k >= x, for x >= 1.
inline std::uint64_t ceil_log(const mpz_class& x, unsigned long p) {
    if (x < 1) throw DomainError("ceil_log: argument must be at least 1");
    std::uint64_t k = 0;
    mpz_class power = 1;
    while (power < x) {
        power *= p;
        ++k;
    }
    return k;
}

/// A/2 * ceil(log_p(C^2 A)); the ceiling keeps the value rational and never
/// below the real bound.
inline mpq_class valuation_bound(const mpz_class& C, const mpz_class& A, unsigned long p) {
    if (C < 1 || A < 1) throw DomainError("valuation_bound: C and A must be positive");
    if (!detail::is_prime(p)) throw DomainError("valuation_bound: p must be prime");
    mpq_class out(A * mpz_class(ceil_log(C * C * A, p)), 2);
    out.canonicalize();
    return out;
}

namespace detail {

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/<monos>, as a map
/// from degree to coefficient.
inline std::map<std::uint64_t, mpz_class> hilbert_numerator(std::vector<Monomial> monos) {
    monos = minimal_monomials(monos);
    if (monos.empty()) return {{0, 1}};
    // N(<M, m>) = N(<M>) - t^deg(m) N(<M> : m).
    Monomial last = monos.back();
    monos.pop_back();
    auto result = hilbert_numerator(monos);
    std::vector<Monomial> colon;
    for (const auto& u : monos) colon.push_back(u / Monomial::gcd(u, last));
    for (const auto& [deg, c] : hilbert_numerator(colon)) {
        result[deg + last.degree()] -= c;
    }
    return result;
}

inline mpz_class binomial(const mpz_class& top, unsigned long k) {
    if (top < 0) return 0;
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return out;
}

}  // namespace detail

/// Number of degree-d monomials in n variables outside <monos>.
inline mpz_class standard_monomial_count(const std::vector<Monomial>& monos, std::size_t n, const mpz_class& d) {
    if (n == 0) return d == 0 ? 1 : 0;
    mpz_class total = 0;
    for (const auto& [deg, c] : detail::hilbert_numerator(monos)) {
        if (mpz_class(deg) > d) continue;
        total += c * detail::binomial(d - deg + n - 1, n - 1);
    }
    return total;
}

struct BoundReport {
    std::size_t n = 0;
    std::uint64_t delta = 0;  // largest generator degree
    mpz_class C = 0;          // largest absolute integer coefficient after clearing
    mpz_class D = 0;          // degree bound
    mpz_class D_used = 0;     // degree at which A was evaluated
    bool truncated = false;   // D_used < D because of the degree cap
    mpz_class A = 0;          // dim I_{D_used}
    mpq_class bound = 0;      // A/2 ceil(log_p(C^2 A))
};

/// Valuation bound for the generators `gens`: each is scaled to coprime
/// integer coefficients, D comes from the degree bound (capped at degree_cap
/// unless it is 0), and A = dim I_D is taken from the initial ideal of a
/// reduced basis for `ord`.
template <CoefficientDomain F>
BoundReport effective_valuation_bound(const std::vector<Polynomial<F>>& gens, unsigned long p,
                                      const WeightedOrder& ord, std::uint64_t degree_cap = 64) {
    static_assert(std::is_same_v<typename F::scalar_type, mpq_class>, "bounds need rational coefficients");
    BoundReport r;
    r.n = ord.nvars();
    std::vector<Polynomial<F>> nonzero;
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        if (!f.is_homogeneous()) throw DomainError("effective_valuation_bound: generator is not homogeneous");
        nonzero.push_back(f);
        r.delta = std::max(r.delta, *f.homogeneous_degree());
        mpz_class den = 1, content = 0;
        for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
        for (const auto& t : f.terms()) {
            const mpz_class c = t.coeff.get_num() * (den / t.coeff.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        }
        for (const auto& t : f.terms()) {
            mpz_class c = abs(t.coeff.get_num() * (den / t.coeff.get_den())) / content;
            if (c > r.C) r.C = c;
        }
    }
    if (nonzero.empty()) return r;
    if (r.delta == 0) throw DomainError("effective_valuation_bound: constant generator");
    r.D = r.n >= 2 ? dube_degree_bound(r.n, r.delta) : mpz_class(r.delta);
    r.D_used = r.D;
    if (degree_cap != 0 && r.D > degree_cap) {
        r.D_used = degree_cap;
        r.truncated = true;
    }
    const auto red = reduced_groebner_basis(nonzero, ord);
    const auto lms = leading_monomials(red.elements, ord);
    const mpz_class all = detail::binomial(r.D_used + r.n - 1, static_cast<unsigned long>(r.n - 1));
    r.A = all - standard_monomial_count(lms, r.n, r.D_used);
    r.bound = r.A == 0 ? mpq_class(0) : valuation_bound(r.C, r.A, p);
    return r;
}

}  // namespace valgb
