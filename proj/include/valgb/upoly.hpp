#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "valgb/gmp_util.hpp"

namespace valgb {

/// Dense univariate polynomial over Q in the variable t, coefficients
/// stored from the constant term upwards with no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const mpq_class& c) {
        if (sgn(c) != 0) coeffs_.push_back(c);
    }
    explicit UPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const mpq_class& c, std::size_t exp) {
        if (sgn(c) == 0) return {};
        std::vector<mpq_class> v(exp + 1);
        v[exp] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const mpq_class& lead() const { return coeffs_.back(); }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& c : coeffs_) n += sgn(c) != 0;
        return n;
    }

    /// Order of vanishing at t = 0; infinity for zero.
    ExtInt order() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (sgn(coeffs_[i]) != 0) return static_cast<std::int64_t>(i);
        }
        return ExtInt::infinity();
    }

    /// Lowest nonzero coefficient.
    const mpq_class& low() const {
        for (const auto& c : coeffs_) {
            if (sgn(c) != 0) return c;
        }
        throw DomainError("UPoly::low of zero polynomial");
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<mpq_class> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
        return UPoly(std::move(r));
    }

    friend UPoly operator-(const UPoly& a) {
        UPoly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpq_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UPoly(std::move(r));
    }

    UPoly scaled(const mpq_class& c) const {
        if (sgn(c) == 0) return {};
        UPoly r = *this;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    /// Euclidean division: returns (quotient, remainder).
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw DomainError("UPoly division by zero");
        if (a.degree() < b.degree()) return {UPoly{}, a};
        std::vector<mpq_class> rem = a.coeffs_;
        std::vector<mpq_class> quo(a.coeffs_.size() - b.coeffs_.size() + 1);
        const mpq_class inv_lead = 1 / b.lead();
        for (long i = a.degree(); i >= b.degree(); --i) {
            const auto ui = static_cast<std::size_t>(i);
            if (sgn(rem[ui]) == 0) continue;
            mpq_class f = rem[ui] * inv_lead;
            const std::size_t shift = ui - b.coeffs_.size() + 1;
            quo[shift] = f;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[shift + j] -= f * b.coeffs_[j];
        }
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }

    UPoly monic() const { return is_zero() ? UPoly{} : scaled(1 / lead()); }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Renders e.g. "1+t^5", "-3/2*t^2+t".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const mpq_class& c = coeffs_[i];
            if (sgn(c) == 0) continue;
            std::string mag = mpq_class(abs(c)).get_str();
            out += sgn(c) < 0 ? "-" : (out.empty() ? "" : "+");
            if (i == 0) {
                out += mag;
                continue;
            }
            if (mag != "1") out += mag + "*";
            out += i == 1 ? std::string("t") : "t^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<mpq_class> coeffs_;
};

}  // namespace valgb
