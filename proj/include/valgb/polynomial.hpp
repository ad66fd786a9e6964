#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valgb/coeff.hpp"
#include "valgb/error.hpp"
#include "valgb/monomial.hpp"

namespace valgb {

/// Sparse multivariate polynomial over a coefficient domain.
///
/// Terms are kept in canonical storage order (descending lexicographic
/// exponent vectors, x1 most significant) with no zero coefficients, so two
/// polynomials are equal exactly when their term vectors are equal.
template <CoefficientDomain F>
class Polynomial {
public:
    using field_type = F;
    using scalar_type = typename F::scalar_type;

    struct Term {
        Monomial mono;
        scalar_type coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

    static Polynomial constant(const F& field, std::size_t nvars, const scalar_type& c) {
        return term(field, Monomial(nvars), c);
    }

    static Polynomial term(const F& field, const Monomial& mono, const scalar_type& c) {
        Polynomial p(field, mono.nvars());
        if (!field.is_zero(c)) p.terms_.push_back({mono, c});
        return p;
    }

    static Polynomial variable(const F& field, std::size_t nvars, std::size_t i) {
        return term(field, Monomial::variable(nvars, i), field.one());
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static Polynomial from_terms(const F& field, std::size_t nvars, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
        Polynomial p(field, nvars);
        for (auto& t : terms) {
            if (t.mono.nvars() != nvars) throw DomainError("term has wrong number of variables");
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
                if (field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            } else if (!field.is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    scalar_type coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.mono > key; });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return field_.zero();
    }

    /// Degree shared by all terms, or nullopt. Zero is homogeneous of every
    /// degree and reports 0.
    std::optional<std::uint64_t> homogeneous_degree() const {
        if (terms_.empty()) return std::uint64_t{0};
        const auto d = terms_.front().mono.degree();
        for (const auto& t : terms_) {
            if (t.mono.degree() != d) return std::nullopt;
        }
        return d;
    }

    bool is_homogeneous() const { return homogeneous_degree().has_value(); }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        return a.combine(b, a.field_.one(), Monomial(a.nvars_), false);
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        return a.combine(b, a.field_.one(), Monomial(a.nvars_), true);
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& t : r.terms_) t.coeff = a.field_.neg(t.coeff);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial acc(a.field_, a.nvars_);
        for (const auto& t : b.terms_) acc = acc.combine(a, t.coeff, t.mono, false);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scale(const scalar_type& c) const {
        Polynomial r(field_, nvars_);
        if (field_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            scalar_type v = field_.mul(c, t.coeff);
            // Zero divisors (Z/p^m) can annihilate individual terms.
            if (!field_.is_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
        }
        return r;
    }

    Polynomial mono_mul(const Monomial& m) const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.mono = t.mono * m;
        return r;
    }

    /// this - c * m * g, computed in a single merge pass.
    Polynomial sub_scaled(const scalar_type& c, const Monomial& m, const Polynomial& g) const {
        check_compatible(g);
        return combine(g, c, m, true);
    }

    /// this + c * m * g.
    Polynomial add_scaled(const scalar_type& c, const Monomial& m, const Polynomial& g) const {
        check_compatible(g);
        return combine(g, c, m, false);
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(field_, nvars_, field_.one());
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Applies `fn` to every coefficient, producing a polynomial over `target`.
    template <CoefficientDomain G, class Fn>
    Polynomial<G> map_coefficients(const G& target, Fn&& fn) const {
        std::vector<typename Polynomial<G>::Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back({t.mono, fn(t.coeff)});
        return Polynomial<G>::from_terms(target, nvars_, std::move(out));
    }

    std::size_t max_coefficient_bits() const {
        std::size_t bits = 0;
        for (const auto& t : terms_) bits = std::max(bits, field_.bit_size(t.coeff));
        return bits;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// Text form with "+"/"-" separators, "*" between factors and "^" for
    /// powers; terms appear in storage order.
    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            const bool has_mono = !t.mono.is_one();
            std::string c = field_.to_string(t.coeff);
            if (field_.is_compound(t.coeff)) {
                out += (out.empty() ? "(" : "+(") + c + ")";
                if (has_mono) out += "*" + t.mono.to_string(names);
                continue;
            }
            const bool negative = !c.empty() && c.front() == '-';
            if (negative) c.erase(0, 1);
            out += negative ? "-" : (out.empty() ? "" : "+");
            if (!has_mono) {
                out += c;
            } else {
                if (c != "1") out += c + "*";
                out += t.mono.to_string(names);
            }
        }
        return out;
    }

    std::string to_string() const { return to_string(default_names(nvars_)); }

private:
    void check_compatible(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw DomainError("polynomials have different numbers of variables");
        if (!(field_ == o.field_)) throw DomainError("polynomials live over different coefficient domains");
    }

    Polynomial combine(const Polynomial& g, const scalar_type& c, const Monomial& m, bool subtract) const {
        Polynomial r(field_, nvars_);
        if (field_.is_zero(c) || g.terms_.empty()) {
            r.terms_ = terms_;
            return r;
        }
        const scalar_type factor = subtract ? field_.neg(c) : c;
        r.terms_.reserve(terms_.size() + g.terms_.size());
        auto it = terms_.begin();
        const bool shift = !m.is_one();
        for (const auto& gt : g.terms_) {
            Monomial gm = shift ? gt.mono * m : gt.mono;
            while (it != terms_.end() && it->mono > gm) r.terms_.push_back(*it++);
            scalar_type v = field_.mul(factor, gt.coeff);
            if (it != terms_.end() && it->mono == gm) {
                v = field_.add(it->coeff, v);
                ++it;
            }
            if (!field_.is_zero(v)) r.terms_.push_back({std::move(gm), std::move(v)});
        }
        while (it != terms_.end()) r.terms_.push_back(*it++);
        return r;
    }

    F field_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// Throws DomainError unless every polynomial is homogeneous.
template <CoefficientDomain F>
void require_homogeneous(const std::vector<Polynomial<F>>& polys, const char* context) {
    for (const auto& p : polys) {
        if (!p.is_homogeneous()) {
            throw DomainError(std::string(context) + ": input polynomial is not homogeneous");
        }
    }
}

}  // namespace valgb
