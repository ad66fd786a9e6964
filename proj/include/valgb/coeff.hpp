#pragma once

// Valued coefficient domains.
//
// Every domain is a small copyable value that performs all scalar arithmetic
// for its scalar_type and answers valuation queries. The algorithms in this
// library are templates over a domain type providing:
//
//   scalar_type, residue_field_type, is_field, trivially_valued
//   zero(), one(), from_integer(), from_rational()
//   is_zero(a), equal(a, b), add, sub, mul, neg, div
//   val(a) -> ExtInt, phi(w), residue_field(), residue(a)
//   to_string(a), is_compound(a), bit_size(a), name()
//
// Value groups are Z (or {0} for trivial valuations).

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "valgb/error.hpp"
#include "valgb/ext_int.hpp"
#include "valgb/gmp_util.hpp"
#include "valgb/upoly.hpp"

namespace valgb {

/// Residue field Z/p and also a trivially valued field in its own right.
class PrimeField {
public:
    using scalar_type = std::uint64_t;
    using residue_field_type = PrimeField;
    static constexpr bool is_field = true;
    static constexpr bool trivially_valued = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (1ULL << 31) || !detail::is_prime(static_cast<unsigned long>(p))) {
            throw DomainError("PrimeField: modulus must be a prime below 2^31");
        }
    }

    std::uint64_t characteristic() const { return p_; }

    scalar_type zero() const { return 0; }
    scalar_type one() const { return 1 % p_; }
    scalar_type from_integer(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<scalar_type>(r < 0 ? r + static_cast<long>(p_) : r);
    }
    scalar_type from_integer(const mpz_class& v) const {
        mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
        if (sgn(r) < 0) r += static_cast<unsigned long>(p_);
        return r.get_ui();
    }
    scalar_type from_rational(const mpq_class& q) const {
        scalar_type d = from_integer(q.get_den());
        if (d == 0) throw DomainError("PrimeField: denominator divisible by the characteristic");
        return mul(from_integer(q.get_num()), inv(d));
    }

    bool is_zero(scalar_type a) const { return a == 0; }
    bool equal(scalar_type a, scalar_type b) const { return a == b; }
    scalar_type add(scalar_type a, scalar_type b) const { return (a + b) % p_; }
    scalar_type sub(scalar_type a, scalar_type b) const { return (a + p_ - b) % p_; }
    scalar_type neg(scalar_type a) const { return a == 0 ? 0 : p_ - a; }
    scalar_type mul(scalar_type a, scalar_type b) const { return (a * b) % p_; }
    scalar_type inv(scalar_type a) const {
        if (a == 0) throw DomainError("PrimeField: inverse of zero");
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return result;
    }
    scalar_type div(scalar_type a, scalar_type b) const { return mul(a, inv(b)); }

    ExtInt val(scalar_type a) const { return a == 0 ? ExtInt::infinity() : ExtInt(0); }
    scalar_type phi(std::int64_t w) const {
        if (w != 0) throw DomainError("phi: trivially valued field has value group {0}");
        return one();
    }
    PrimeField residue_field() const { return *this; }
    scalar_type residue(scalar_type a) const { return a; }

    std::string to_string(scalar_type a) const { return std::to_string(a); }
    bool is_compound(scalar_type) const { return false; }
    std::size_t bit_size(scalar_type) const { return 0; }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

namespace detail {

/// Shared scalar arithmetic for the two valuations on Q.
struct RationalArithmetic {
    using scalar_type = mpq_class;
    static constexpr bool is_field = true;

    scalar_type zero() const { return 0; }
    scalar_type one() const { return 1; }
    scalar_type from_integer(long v) const { return v; }
    scalar_type from_integer(const mpz_class& v) const { return mpq_class(v); }
    scalar_type from_rational(const mpq_class& q) const { return q; }

    bool is_zero(const scalar_type& a) const { return sgn(a) == 0; }
    bool equal(const scalar_type& a, const scalar_type& b) const { return a == b; }
    scalar_type add(const scalar_type& a, const scalar_type& b) const { return a + b; }
    scalar_type sub(const scalar_type& a, const scalar_type& b) const { return a - b; }
    scalar_type neg(const scalar_type& a) const { return -a; }
    scalar_type mul(const scalar_type& a, const scalar_type& b) const { return a * b; }
    scalar_type inv(const scalar_type& a) const {
        if (sgn(a) == 0) throw DomainError("inverse of zero");
        return 1 / a;
    }
    scalar_type div(const scalar_type& a, const scalar_type& b) const {
        if (sgn(b) == 0) throw DomainError("division by zero");
        return a / b;
    }

    std::string to_string(const scalar_type& a) const { return a.get_str(); }
    bool is_compound(const scalar_type&) const { return false; }
    std::size_t bit_size(const scalar_type& a) const { return detail::bit_size(a); }
};

}  // namespace detail

/// Q with the trivial valuation; its own residue field.
class RationalField : public detail::RationalArithmetic {
public:
    using residue_field_type = RationalField;
    static constexpr bool trivially_valued = true;

    ExtInt val(const scalar_type& a) const { return sgn(a) == 0 ? ExtInt::infinity() : ExtInt(0); }
    scalar_type phi(std::int64_t w) const {
        if (w != 0) throw DomainError("phi: trivially valued field has value group {0}");
        return 1;
    }
    RationalField residue_field() const { return {}; }
    scalar_type residue(const scalar_type& a) const { return a; }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Q with the p-adic valuation; residue field Z/p.
class PAdicRationals : public detail::RationalArithmetic {
public:
    using residue_field_type = PrimeField;
    static constexpr bool trivially_valued = false;

    explicit PAdicRationals(unsigned long p) : p_(p) {
        if (!detail::is_prime(p) || p >= (1UL << 31)) throw DomainError("Qp: p must be a prime below 2^31");
    }

    unsigned long prime() const { return p_; }

    ExtInt val(const scalar_type& a) const { return detail::padic_order(a, p_); }

    scalar_type phi(std::int64_t w) const {
        mpq_class r(detail::ipow(p_, static_cast<unsigned long>(w < 0 ? -w : w)));
        if (w < 0) r = 1 / r;
        return r;
    }

    PrimeField residue_field() const { return PrimeField(p_); }

    PrimeField::scalar_type residue(const scalar_type& a) const {
        if (val(a) < ExtInt(0)) throw DomainError("residue: element not in valuation ring");
        return residue_field().from_rational(a);
    }

    std::string name() const { return "Qp(" + std::to_string(p_) + ")"; }

    friend bool operator==(const PAdicRationals& a, const PAdicRationals& b) { return a.p_ == b.p_; }

private:
    unsigned long p_;
};

/// Element of Q(t): num/den with gcd 1 and den monic. Zero is 0/1.
struct RatFunc {
    UPoly num;
    UPoly den = UPoly(mpq_class(1));

    RatFunc() = default;
    RatFunc(UPoly n, UPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    explicit RatFunc(const mpq_class& c) : num(c) {}

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    void normalize() {
        if (den.is_zero()) throw DomainError("rational function with zero denominator");
        if (num.is_zero()) {
            den = UPoly(mpq_class(1));
            return;
        }
        if (den.degree() > 0) {
            UPoly g = UPoly::gcd(num, den);
            if (g.degree() > 0) {
                num = UPoly::divmod(num, g).first;
                den = UPoly::divmod(den, g).first;
            }
        }
        mpq_class lead = den.lead();
        if (lead != 1) {
            num = num.scaled(1 / lead);
            den = den.scaled(1 / lead);
        }
    }
};

/// Q(t) with the t-adic valuation (lowest exponent of the Taylor expansion);
/// residue field Q.
class RationalFunctionField {
public:
    using scalar_type = RatFunc;
    using residue_field_type = RationalField;
    static constexpr bool is_field = true;
    static constexpr bool trivially_valued = false;

    scalar_type zero() const { return {}; }
    scalar_type one() const { return RatFunc(mpq_class(1)); }
    scalar_type from_integer(long v) const { return RatFunc(mpq_class(v)); }
    scalar_type from_integer(const mpz_class& v) const { return RatFunc(mpq_class(v)); }
    scalar_type from_rational(const mpq_class& q) const { return RatFunc(q); }
    /// The transcendental t itself.
    scalar_type t() const { return RatFunc(UPoly::monomial(1, 1), UPoly(mpq_class(1))); }

    bool is_zero(const scalar_type& a) const { return a.num.is_zero(); }
    bool equal(const scalar_type& a, const scalar_type& b) const { return a == b; }
    scalar_type add(const scalar_type& a, const scalar_type& b) const {
        if (a.den == b.den) return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    scalar_type neg(const scalar_type& a) const {
        scalar_type r = a;
        r.num = -r.num;
        return r;
    }
    scalar_type sub(const scalar_type& a, const scalar_type& b) const { return add(a, neg(b)); }
    scalar_type mul(const scalar_type& a, const scalar_type& b) const {
        if (is_zero(a) || is_zero(b)) return {};
        return {a.num * b.num, a.den * b.den};
    }
    scalar_type inv(const scalar_type& a) const {
        if (is_zero(a)) throw DomainError("inverse of zero");
        return {a.den, a.num};
    }
    scalar_type div(const scalar_type& a, const scalar_type& b) const { return mul(a, inv(b)); }

    ExtInt val(const scalar_type& a) const {
        if (is_zero(a)) return ExtInt::infinity();
        return ExtInt(a.num.order().value() - a.den.order().value());
    }

    scalar_type phi(std::int64_t w) const {
        if (w >= 0) return {UPoly::monomial(1, static_cast<std::size_t>(w)), UPoly(mpq_class(1))};
        return {UPoly(mpq_class(1)), UPoly::monomial(1, static_cast<std::size_t>(-w))};
    }

    RationalField residue_field() const { return {}; }

    /// Constant term of the Taylor expansion.
    mpq_class residue(const scalar_type& a) const {
        ExtInt v = val(a);
        if (v < ExtInt(0)) throw DomainError("residue: element not in valuation ring");
        if (v > ExtInt(0)) return 0;
        return a.num.low() / a.den.low();
    }

    std::string to_string(const scalar_type& a) const {
        if (a.den.is_one()) return a.num.to_string();
        return "(" + a.num.to_string() + ")/(" + a.den.to_string() + ")";
    }
    bool is_compound(const scalar_type& a) const { return !a.den.is_one() || a.num.term_count() > 1; }
    std::size_t bit_size(const scalar_type& a) const {
        std::size_t bits = 0;
        for (const auto& c : a.num.coeffs()) bits = std::max(bits, detail::bit_size(c));
        for (const auto& c : a.den.coeffs()) bits = std::max(bits, detail::bit_size(c));
        return bits;
    }
    std::string name() const { return "Qt"; }

    friend bool operator==(const RationalFunctionField&, const RationalFunctionField&) { return true; }
};

/// The valuation semiring Z/p^m: val lands in {0, ..., m-1} union infinity.
/// Not a field; div(a, b) succeeds exactly when val(a) >= val(b).
class ModPmRing {
public:
    using scalar_type = mpz_class;
    using residue_field_type = PrimeField;
    static constexpr bool is_field = false;
    static constexpr bool trivially_valued = false;

    ModPmRing(unsigned long p, unsigned long m) {
        if (!detail::is_prime(p) || p >= (1UL << 31)) throw DomainError("Z/p^m: p must be a prime below 2^31");
        if (m == 0) throw DomainError("Z/p^m: m must be positive");
        state_ = std::make_shared<const State>(State{p, m, detail::ipow(p, m)});
    }

    unsigned long prime() const { return state_->p; }
    unsigned long exponent() const { return state_->m; }
    const mpz_class& modulus() const { return state_->modulus; }

    scalar_type zero() const { return 0; }
    scalar_type one() const { return reduce(1); }
    scalar_type from_integer(long v) const { return reduce(mpz_class(v)); }
    scalar_type from_integer(const mpz_class& v) const { return reduce(v); }
    scalar_type from_rational(const mpq_class& q) const {
        if (mpz_divisible_ui_p(q.get_den_mpz_t(), prime())) {
            throw DomainError("Z/p^m: denominator divisible by p");
        }
        return mul(reduce(q.get_num()), unit_inverse(reduce(q.get_den())));
    }

    bool is_zero(const scalar_type& a) const { return sgn(a) == 0; }
    bool equal(const scalar_type& a, const scalar_type& b) const { return a == b; }
    scalar_type add(const scalar_type& a, const scalar_type& b) const { return reduce(a + b); }
    scalar_type sub(const scalar_type& a, const scalar_type& b) const { return reduce(a - b); }
    scalar_type neg(const scalar_type& a) const { return reduce(-a); }
    scalar_type mul(const scalar_type& a, const scalar_type& b) const { return reduce(a * b); }

    /// A solution c of c*b = a; requires val(a) >= val(b).
    scalar_type div(const scalar_type& a, const scalar_type& b) const {
        if (is_zero(b)) throw DomainError("Z/p^m: division by zero");
        if (is_zero(a)) return 0;
        const std::int64_t k = val(b).value();
        if (val(a) < ExtInt(k)) throw DomainError("Z/p^m: quotient does not exist");
        const mpz_class pk = detail::ipow(prime(), static_cast<unsigned long>(k));
        mpz_class a_shift = a / pk;
        mpz_class b_unit = b / pk;
        return mul(a_shift, unit_inverse(b_unit));
    }
    scalar_type inv(const scalar_type& a) const { return div(one(), a); }

    /// a / p^k as an integer; requires p^k to divide the representative.
    scalar_type shift_down(const scalar_type& a, std::int64_t k) const {
        return a / detail::ipow(prime(), static_cast<unsigned long>(k));
    }

    ExtInt val(const scalar_type& a) const { return detail::padic_order(a, prime()); }

    scalar_type phi(std::int64_t w) const {
        if (w < 0 || static_cast<unsigned long>(w) >= exponent()) {
            throw DomainError("phi: Z/p^m only realises valuations 0..m-1");
        }
        return detail::ipow(prime(), static_cast<unsigned long>(w));
    }

    PrimeField residue_field() const { return PrimeField(prime()); }
    PrimeField::scalar_type residue(const scalar_type& a) const {
        return mpz_class(a % mpz_class(prime())).get_ui();
    }

    std::string to_string(const scalar_type& a) const { return a.get_str(); }
    bool is_compound(const scalar_type&) const { return false; }
    std::size_t bit_size(const scalar_type& a) const { return mpz_sizeinbase(a.get_mpz_t(), 2); }
    std::string name() const {
        return "Z/" + std::to_string(prime()) + "^" + std::to_string(exponent());
    }

    friend bool operator==(const ModPmRing& a, const ModPmRing& b) {
        return a.prime() == b.prime() && a.exponent() == b.exponent();
    }

private:
    struct State {
        unsigned long p;
        unsigned long m;
        mpz_class modulus;
    };

    scalar_type reduce(const mpz_class& v) const {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), v.get_mpz_t(), state_->modulus.get_mpz_t());
        return r;
    }

    scalar_type unit_inverse(const scalar_type& u) const {
        mpz_class r;
        if (mpz_invert(r.get_mpz_t(), u.get_mpz_t(), state_->modulus.get_mpz_t()) == 0) {
            throw DomainError("Z/p^m: element is not a unit");
        }
        return r;
    }

    std::shared_ptr<const State> state_;
};

/// Requirements shared by every coefficient domain.
template <class F>
concept CoefficientDomain = requires(const F& f, const typename F::scalar_type& a, std::int64_t w) {
    typename F::residue_field_type;
    { f.zero() } -> std::convertible_to<typename F::scalar_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.add(a, a) } -> std::convertible_to<typename F::scalar_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::scalar_type>;
    { f.div(a, a) } -> std::convertible_to<typename F::scalar_type>;
    { f.val(a) } -> std::same_as<ExtInt>;
    { f.phi(w) } -> std::convertible_to<typename F::scalar_type>;
    { f.residue(a) };
    { f.to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(CoefficientDomain<PrimeField>);
static_assert(CoefficientDomain<RationalField>);
static_assert(CoefficientDomain<PAdicRationals>);
static_assert(CoefficientDomain<RationalFunctionField>);
static_assert(CoefficientDomain<ModPmRing>);

}  // namespace valgb
