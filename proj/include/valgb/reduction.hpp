#pragma once

// Remainders by exact linear algebra.
//
// For a degree d, let D be the degree-d monomials divisible by some lm(g_i).
// Fix one shifted divisor rho_m = x^v g_i with lm(rho_m) = m for each m in D.
// After scaling column m by phi(w.m) the square matrix (coefficient of m' in
// rho_m) has entries in the valuation ring and a residue that is
// unitriangular for the term order, so it is invertible and every pivot met
// by elimination (in any order) is a unit. Solving f - sum a_m rho_m = 0 on
// the columns D therefore gives r with the same guarantees as the Mora
// division: a_m rho_m >= f, r >= f, and no term of r in D.
//
// Rows are kept per degree and extended incrementally when generators are
// added, so successive S-polynomials of one degree share the elimination.

#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "valgb/error.hpp"
#include "valgb/normal_form.hpp"
#include "valgb/polynomial.hpp"
#include "valgb/worder.hpp"

namespace valgb {

enum class ReducerKind { Linear, Mora };

template <CoefficientDomain F>
class LinearReducer {
public:
    using P = Polynomial<F>;

    explicit LinearReducer(WeightedOrder ord) : ord_(std::move(ord)) {}

    LinearReducer(const std::vector<P>& G, WeightedOrder ord) : ord_(std::move(ord)) {
        for (const auto& g : G) add(g);
    }

    void add(const P& g) {
        if (g.is_zero()) throw DomainError("LinearReducer: zero divisor");
        if (!g.is_homogeneous()) throw DomainError("LinearReducer: divisor is not homogeneous");
        if constexpr (std::is_same_v<F, ModPmRing>) {
            for (auto wi : ord_.w) {
                if (wi != 0) throw DomainError("LinearReducer: Z/p^m coefficients need the zero weight vector");
            }
        }
        gens_.push_back({g, leading_data(g, ord_).lm, *g.homogeneous_degree()});
    }

    std::size_t size() const { return gens_.size(); }

    P remainder(const P& f) {
        if (!f.is_homogeneous()) throw DomainError("LinearReducer: dividend is not homogeneous");
        if (f.is_zero() || gens_.empty()) return f;
        if (f.nvars() != ord_.nvars()) throw DomainError("LinearReducer: wrong number of variables");
        Table& table = sync(*f.homogeneous_degree(), f);
        P r = f;
        for (const auto& row : table.rows) {
            const auto c = r.coefficient(row.pivot);
            if (!r.field().is_zero(c)) r = r.sub_scaled(c, Monomial(r.nvars()), row.poly);
        }
        return r;
    }

private:
    struct Generator {
        P poly;
        Monomial lm;
        std::uint64_t degree;
    };

    struct Row {
        Monomial pivot;
        P poly;  // coefficient 1 at pivot, 0 at every earlier pivot
    };

    struct Table {
        std::size_t synced = 0;
        std::vector<Row> rows;
        std::map<Monomial, std::size_t> pivots;
    };

    Table& sync(std::uint64_t d, const P& like) {
        Table& table = tables_[d];
        const F& field = like.field();
        const std::size_t n = like.nvars();
        for (; table.synced < gens_.size(); ++table.synced) {
            const Generator& g = gens_[table.synced];
            if (g.degree > d) continue;
            for (const auto& v : monomials_of_degree(n, static_cast<std::uint32_t>(d - g.degree))) {
                const Monomial m = g.lm * v;
                if (table.pivots.count(m)) continue;
                P row = g.poly.mono_mul(v);
                for (const auto& prev : table.rows) {
                    const auto c = row.coefficient(prev.pivot);
                    if (!field.is_zero(c)) row = row.sub_scaled(c, Monomial(n), prev.poly);
                }
                const auto pivot = row.coefficient(m);
                if (!usable_pivot(field, pivot)) {
                    throw Error("LinearReducer: elimination met a non-unit pivot at " + m.to_string(default_names(n)));
                }
                row = row.scale(field.inv(pivot));
                table.pivots.emplace(m, table.rows.size());
                table.rows.push_back({m, std::move(row)});
            }
        }
        return table;
    }

    static bool usable_pivot(const F& field, const typename F::scalar_type& c) {
        if (field.is_zero(c)) return false;
        if constexpr (std::is_same_v<F, ModPmRing>) return field.val(c) == ExtInt(0);
        return true;
    }

    WeightedOrder ord_;
    std::vector<Generator> gens_;
    std::map<std::uint64_t, Table> tables_;
};

/// Strong normal form of f modulo G with the chosen engine.
template <CoefficientDomain F>
Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G, const WeightedOrder& ord,
                     ReducerKind kind = ReducerKind::Linear, const NormalFormOptions<F>& nf = {}) {
    if (kind == ReducerKind::Mora) return remainder(f, G, ord, nf);
    LinearReducer<F> reducer(G, ord);
    return reducer.remainder(f);
}

}  // namespace valgb
