#pragma once

// Exact linear algebra on the degree-d pieces of an ideal, and the
// Z/p^m pipeline: compute leading monomials cheaply modulo p^m, then recover
// the reduced basis over Q by solving for the rows with an identity block on
// the initial-ideal columns. Too small an m shows up as an inconsistent
// claim or a failed check over Q, and m is doubled.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "valgb/buchberger.hpp"
#include "valgb/error.hpp"
#include "valgb/polynomial.hpp"
#include "valgb/worder.hpp"

namespace valgb {

namespace detail {

/// All x^v f of degree d, in generator order then lex order of v.
template <CoefficientDomain F>
std::vector<Polynomial<F>> degree_multiples(const std::vector<Polynomial<F>>& gens, std::uint64_t d) {
    std::vector<Polynomial<F>> out;
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        const auto df = f.homogeneous_degree();
        if (!df) throw DomainError("degree matrix: generator is not homogeneous");
        if (*df > d) continue;
        for (const auto& v : monomials_of_degree(f.nvars(), static_cast<std::uint32_t>(d - *df))) {
            out.push_back(f.mono_mul(v));
        }
    }
    return out;
}

/// Sparse row echelon form. Every stored row has coefficient 1 at its pivot
/// and 0 at the pivots of earlier rows. Pivots are restricted to `allowed`
/// when given; among admissible entries the one of lowest valuation wins,
/// ties going to the larger monomial in storage order.
template <CoefficientDomain F>
class Echelon {
public:
    explicit Echelon(std::optional<std::set<Monomial>> allowed = std::nullopt) : allowed_(std::move(allowed)) {}

    /// Adds a row; returns false when it was dependent on the stored rows.
    /// Throws InconsistentInitialIdeal if an independent row has no
    /// admissible pivot.
    bool insert(Polynomial<F> r) {
        for (const auto& row : rows_) {
            const auto c = r.coefficient(row.pivot);
            if (!r.field().is_zero(c)) r = r.sub_scaled(c, Monomial(r.nvars()), row.poly);
        }
        if (r.is_zero()) return false;
        const F& field = r.field();
        const typename Polynomial<F>::Term* best = nullptr;
        for (const auto& t : r.terms()) {
            if (allowed_ && !allowed_->count(t.mono)) continue;
            if (!best || field.val(t.coeff) < field.val(best->coeff)) best = &t;
        }
        if (!best) throw InconsistentInitialIdeal("an element of the ideal avoids every claimed initial monomial");
        const Monomial pivot = best->mono;
        r = r.scale(field.inv(best->coeff));
        rows_.push_back({pivot, std::move(r)});
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    /// Clears every pivot column outside its own row.
    void back_substitute() {
        for (std::size_t k = rows_.size(); k-- > 0;) {
            for (std::size_t l = k + 1; l < rows_.size(); ++l) {
                const auto c = rows_[k].poly.coefficient(rows_[l].pivot);
                if (!rows_[k].poly.field().is_zero(c)) {
                    rows_[k].poly = rows_[k].poly.sub_scaled(c, Monomial(rows_[k].poly.nvars()), rows_[l].poly);
                }
            }
        }
    }

    struct Row {
        Monomial pivot;
        Polynomial<F> poly;
    };
    const std::vector<Row>& rows() const { return rows_; }

private:
    std::optional<std::set<Monomial>> allowed_;
    std::vector<Row> rows_;
};

}  // namespace detail

/// dim_K I_d for I generated by homogeneous F: the rank of all degree-d
/// monomial multiples of the generators.
template <CoefficientDomain F>
std::size_t hilbert_dim(const std::vector<Polynomial<F>>& gens, std::uint64_t d) {
    static_assert(F::is_field, "hilbert_dim needs a field");
    detail::Echelon<F> ech;
    for (auto& row : detail::degree_multiples(gens, d)) ech.insert(std::move(row));
    return ech.rank();
}

/// Degree-d data of the lifting step. Columns list the initial-ideal
/// monomials of degree d first, then the rest, each block in decreasing
/// term order. rows_B holds the rows of the reduced matrix as polynomials:
/// row k has coefficient 1 at columns[k] and 0 at the other initial columns.
template <CoefficientDomain F>
struct DegreeMatrix {
    std::uint64_t d = 0;
    std::vector<Monomial> columns;
    std::size_t H = 0;
    std::vector<Polynomial<F>> rows_B;

    /// B as a dense H x |columns| matrix.
    std::vector<std::vector<typename F::scalar_type>> dense_B() const {
        std::vector<std::vector<typename F::scalar_type>> out;
        for (const auto& row : rows_B) {
            std::vector<typename F::scalar_type> dense;
            for (const auto& m : columns) dense.push_back(row.coefficient(m));
            out.push_back(std::move(dense));
        }
        return out;
    }
};

/// Builds B_d for the claim that `initial` generates the initial ideal.
template <CoefficientDomain F>
DegreeMatrix<F> degree_matrix(const std::vector<Polynomial<F>>& gens, const WeightedOrder& ord, std::uint64_t d,
                              const std::vector<Monomial>& initial) {
    static_assert(F::is_field, "degree_matrix needs a field");
    const std::size_t n = ord.nvars();
    DegreeMatrix<F> dm;
    dm.d = d;
    std::set<Monomial> in_d;
    std::vector<Monomial> rest;
    for (const auto& m : monomials_of_degree(n, static_cast<std::uint32_t>(d), ord.prec)) {
        const bool inside = std::any_of(initial.begin(), initial.end(), [&](const Monomial& u) { return u.divides(m); });
        if (inside) {
            dm.columns.push_back(m);
            in_d.insert(m);
        } else {
            rest.push_back(m);
        }
    }
    dm.H = dm.columns.size();
    dm.columns.insert(dm.columns.end(), rest.begin(), rest.end());

    detail::Echelon<F> ech(in_d);
    for (auto& row : detail::degree_multiples(gens, d)) ech.insert(std::move(row));
    if (ech.rank() != dm.H) {
        throw InconsistentInitialIdeal("degree " + std::to_string(d) + ": ideal has dimension " +
                                       std::to_string(ech.rank()) + " but the claim needs " + std::to_string(dm.H));
    }
    ech.back_substitute();
    std::map<Monomial, Polynomial<F>> by_pivot;
    for (const auto& row : ech.rows()) by_pivot.emplace(row.pivot, row.poly);
    for (std::size_t k = 0; k < dm.H; ++k) dm.rows_B.push_back(by_pivot.at(dm.columns[k]));
    return dm;
}

/// The reduced basis of <gens> under the claim that `monomials` generate
/// in_prec(in_w(I)): for each minimal monomial x^u, the row of B_|u| with its
/// 1 in column x^u. Throws InconsistentInitialIdeal when a degree matrix
/// contradicts the claim or a lifted element has a different leading monomial.
template <CoefficientDomain F>
GroebnerBasis<F> lift_groebner(const std::vector<Polynomial<F>>& gens, const WeightedOrder& ord,
                               const std::vector<Monomial>& monomials) {
    const auto G = detail::prepare_generators(gens, "lift_groebner");
    const auto minimal = minimal_monomials(monomials);
    if (minimal.empty()) throw DomainError("lift_groebner: no monomials given");
    std::map<std::uint64_t, DegreeMatrix<F>> matrices;
    GroebnerBasis<F> out{{}, ord, true, true, true, {}};
    for (const auto& u : minimal) {
        if (u.nvars() != ord.nvars()) throw DomainError("lift_groebner: monomial has wrong number of variables");
        const auto d = u.degree();
        auto it = matrices.find(d);
        if (it == matrices.end()) it = matrices.emplace(d, degree_matrix(G, ord, d, minimal)).first;
        const auto& dm = it->second;
        const auto pos = std::find(dm.columns.begin(), dm.columns.end(), u) - dm.columns.begin();
        const auto& g = dm.rows_B[static_cast<std::size_t>(pos)];
        if (leading_data(g, ord).lm != u) {
            throw InconsistentInitialIdeal("lifted element for " + u.to_string(default_names(u.nvars())) +
                                           " has a different leading monomial");
        }
        out.elements.push_back(g);
    }
    sort_basis(out.elements, ord);
    return out;
}

struct ModPmOptions {
    /// Starting exponent; 0 picks max(16, 2 (1 + largest coefficient valuation)).
    unsigned long m0 = 0;
    /// Number of times m may be doubled after the first attempt.
    std::size_t max_doublings = 5;
    /// Compute over Q directly once the doublings are used up; otherwise throw.
    bool fallback = true;
    std::function<void(const std::string&)> log;
};

template <CoefficientDomain F>
struct ModPmResult {
    GroebnerBasis<F> basis;
    unsigned long final_m = 0;
    std::size_t attempts = 0;
    bool fell_back = false;
};

namespace detail {

/// Generators after x_i -> p^{w_i} x_i, each divided by its p-content.
inline std::vector<Polynomial<PAdicRationals>> substitute_weights(const std::vector<Polynomial<PAdicRationals>>& gens,
                                                                  const WeightVector& w) {
    std::vector<Polynomial<PAdicRationals>> out;
    for (const auto& f : gens) {
        const PAdicRationals& field = f.field();
        std::vector<Polynomial<PAdicRationals>::Term> terms;
        ExtInt content = ExtInt::infinity();
        for (const auto& t : f.terms()) {
            std::int64_t shift = 0;
            for (std::size_t i = 0; i < w.size(); ++i) shift += w[i] * static_cast<std::int64_t>(t.mono[i]);
            auto c = field.mul(t.coeff, field.phi(shift));
            content = std::min(content, field.val(c));
            terms.push_back({t.mono, std::move(c)});
        }
        if (terms.empty()) continue;
        const auto unit = field.phi(-content.value());
        for (auto& t : terms) t.coeff = field.mul(t.coeff, unit);
        out.push_back(Polynomial<PAdicRationals>::from_terms(field, f.nvars(), std::move(terms)));
    }
    return out;
}

}  // namespace detail

/// Reduced basis over Q with the p-adic valuation, computed through Z/p^m.
/// Each attempt runs Buchberger modulo p^m with w = 0 on the substituted
/// generators, lifts the resulting leading monomials, and accepts the lift
/// only if it is a Groebner basis over Q that generates every input.
inline ModPmResult<PAdicRationals> gb_mod_pm(const std::vector<Polynomial<PAdicRationals>>& gens,
                                             const WeightedOrder& ord, const ModPmOptions& opts = {}) {
    const auto G = detail::prepare_generators(gens, "gb_mod_pm");
    const unsigned long p = G.front().field().prime();
    const auto substituted = detail::substitute_weights(G, ord.w);
    const WeightedOrder flat(WeightVector(ord.nvars(), 0), ord.prec);

    unsigned long m = opts.m0;
    if (m == 0) {
        std::int64_t top = 0;
        for (const auto& f : substituted) {
            for (const auto& t : f.terms()) top = std::max(top, f.field().val(t.coeff).value());
        }
        m = static_cast<unsigned long>(std::max<std::int64_t>(16, 2 * (1 + top)));
    }
    auto say = [&](const std::string& s) {
        if (opts.log) opts.log(s);
    };

    ModPmResult<PAdicRationals> result{{{}, ord, false, false, false, {}}, m, 0, false};
    for (std::size_t attempt = 0; attempt <= opts.max_doublings; ++attempt, m *= 2) {
        result.attempts = attempt + 1;
        result.final_m = m;
        const ModPmRing ring(p, m);
        std::vector<Polynomial<ModPmRing>> reduced;
        for (const auto& f : substituted) {
            auto r = f.map_coefficients(ring, [&](const mpq_class& c) { return ring.from_rational(c); });
            if (!r.is_zero()) reduced.push_back(std::move(r));
        }
        try {
            const auto gb_pm = buchberger(reduced, flat);
            const auto lms = minimal_monomials(leading_monomials(gb_pm.elements, flat));
            auto lifted = lift_groebner(G, ord, lms);
            if (is_groebner(lifted.elements, ord) && generates_all(G, lifted.elements, ord)) {
                lifted.stats = gb_pm.stats;
                result.basis = std::move(lifted);
                return result;
            }
            say("m=" + std::to_string(m) + ": lifted set failed verification");
        } catch (const Error& e) {
            say("m=" + std::to_string(m) + ": " + e.what());
        }
    }
    if (!opts.fallback) {
        throw BudgetExceeded("gb_mod_pm: no consistent lift up to m=" + std::to_string(result.final_m));
    }
    say("warning: retry budget exhausted at m=" + std::to_string(result.final_m) + ", computing over Q directly");
    result.basis = reduced_groebner_basis(G, ord);
    result.fell_back = true;
    return result;
}

}  // namespace valgb
