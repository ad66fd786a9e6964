#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "valgb/error.hpp"

namespace valgb {

/// Exponent vector x^u of a fixed number of variables.
class Monomial {
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<exponent_type> exps) : exps_(exps) {}

    static Monomial variable(std::size_t nvars, std::size_t i, exponent_type power = 1) {
        Monomial m(nvars);
        m.exps_.at(i) = power;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    exponent_type operator[](std::size_t i) const { return exps_[i]; }
    exponent_type& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<exponent_type>& exponents() const { return exps_; }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](exponent_type e) { return e == 0; });
    }

    /// True when this monomial divides `other`.
    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > other.exps_[i]) return false;
        }
        return true;
    }

    bool coprime(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] != 0 && other.exps_[i] != 0) return false;
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
        return r;
    }

    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        if (!b.divides(a)) throw DomainError("monomial quotient: divisor does not divide");
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        return r;
    }

    /// Canonical storage order: lexicographic on the exponent vector.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string(const std::vector<std::string>& names) const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += names.at(i);
            if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<exponent_type> exps_;
};

/// Drops duplicates and monomials divisible by another one in the list.
inline std::vector<Monomial> minimal_monomials(const std::vector<Monomial>& monos) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < monos.size() && !redundant; ++k) {
            if (k == i || !monos[k].divides(monos[i])) continue;
            redundant = monos[k] != monos[i] || k < i;
        }
        if (!redundant) out.push_back(monos[i]);
    }
    return out;
}

/// Default variable names x1..xn.
inline std::vector<std::string> default_names(std::size_t nvars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

enum class OrderKind { Lex, GrevLex };

/// A monomial term order: lex or graded reverse lex with respect to a
/// variable priority list (most significant variable first).
class TermOrder {
public:
    TermOrder(OrderKind kind, std::vector<std::size_t> priority) : kind_(kind), priority_(std::move(priority)) {
        std::vector<std::size_t> sorted = priority_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != i) throw DomainError("TermOrder: priority must be a permutation of the variables");
        }
    }

    /// Lex or grevlex with x1 > x2 > ... > xn.
    static TermOrder lex(std::size_t nvars) { return {OrderKind::Lex, identity(nvars)}; }
    static TermOrder grevlex(std::size_t nvars) { return {OrderKind::GrevLex, identity(nvars)}; }

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& priority() const { return priority_; }
    std::size_t nvars() const { return priority_.size(); }

    /// `greater` means a is larger than b in this order.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == OrderKind::GrevLex) {
            const auto da = a.degree();
            const auto db = b.degree();
            if (da != db) return da <=> db;
            for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
                if (a[*it] != b[*it]) return b[*it] <=> a[*it];
            }
            return std::strong_ordering::equal;
        }
        for (std::size_t v : priority_) {
            if (a[v] != b[v]) return a[v] <=> b[v];
        }
        return std::strong_ordering::equal;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string to_string(const std::vector<std::string>& names) const {
        std::string out = kind_ == OrderKind::Lex ? "lex " : "grevlex ";
        for (std::size_t i = 0; i < priority_.size(); ++i) {
            if (i) out += ">";
            out += names.at(priority_[i]);
        }
        return out;
    }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    static std::vector<std::size_t> identity(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), std::size_t{0});
        return v;
    }

    OrderKind kind_;
    std::vector<std::size_t> priority_;
};

/// All monomials of degree d in n variables, largest first under `order`.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d, const TermOrder& order) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    Monomial cur(nvars);
    // Enumerate compositions of d into nvars parts.
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == nvars) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return out;
}

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    return monomials_of_degree(nvars, d, TermOrder::lex(nvars));
}

}  // namespace valgb
