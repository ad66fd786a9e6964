#pragma once

// Division with remainder for valued coefficient domains.
//
// Naive long division (always cancel the leading term by some g_i) need not
// terminate when coefficients carry valuations: dividing x by
// {x-2y, y-2z, z-2x} 2-adically cycles through 2y, 4z, 8x, ... forever.
// The division below follows Mora's tangent cone idea: intermediate
// polynomials q_j are kept in the divisor set T and may later be used as
// divisors themselves, with an ecart function E(q, g) steering the choice.
// With the support-count ecart the loop always terminates.

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "valgb/error.hpp"
#include "valgb/polynomial.hpp"
#include "valgb/worder.hpp"

namespace valgb {

/// |{u : u in supp(m*g), u not in supp(f)}|. Both term lists are in storage
/// order and multiplication by m preserves that order.
template <CoefficientDomain F>
std::size_t support_count_shifted(const Polynomial<F>& f, const Polynomial<F>& g, const Monomial& m) {
    const auto& ft = f.terms();
    std::size_t missing = 0;
    auto it = ft.begin();
    const bool shift = !m.is_one();
    for (const auto& t : g.terms()) {
        Monomial u = shift ? t.mono * m : t.mono;
        while (it != ft.end() && it->mono > u) ++it;
        if (it == ft.end() || it->mono != u) ++missing;
    }
    return missing;
}

/// Support-count ecart E(f, g) = |{u : b_u != 0, c_u = 0}| for f = sum c_u x^u,
/// g = sum b_u x^u of equal degree.
template <CoefficientDomain F>
std::size_t ecart(const Polynomial<F>& f, const Polynomial<F>& g) {
    if (f.is_zero() || g.is_zero()) throw DomainError("ecart: zero polynomial");
    if (f.homogeneous_degree() != g.homogeneous_degree() || !f.is_homogeneous()) {
        throw DomainError("ecart: inputs must be homogeneous of equal degree");
    }
    return support_count_shifted(f, g, Monomial(f.nvars()));
}

template <CoefficientDomain F>
struct NormalFormOptions {
    /// Ecart E(q, x^v g) evaluated against the shifted divisor. Empty means
    /// the support count, the only choice with a termination guarantee.
    std::function<std::size_t(const Polynomial<F>&, const Polynomial<F>&)> ecart;
    std::size_t max_steps = 1'000'000;
    /// Abort once any coefficient of q_j exceeds this many bits (0 = off).
    std::size_t max_coefficient_bits = 0;
    bool trace = false;
    /// Re-check the loop invariants after every step (expensive).
    bool check_invariants = false;
};

enum class DivisionAction { MoveToRemainder, DivideByGenerator, DivideByPartial };

/// State at the start of iteration j, recorded when tracing.
template <CoefficientDomain F>
struct TraceStep {
    std::size_t j;
    DivisionAction action;
    /// Generator index, or the iteration that created the partial quotient.
    std::size_t divisor = 0;
    Monomial lm;
    std::size_t divisor_set_size;
    Polynomial<F> q;
    Polynomial<F> r;
};

template <CoefficientDomain F>
struct DivisionResult {
    std::vector<Polynomial<F>> quotients;
    Polynomial<F> remainder;
    std::size_t step_count = 0;
    std::vector<TraceStep<F>> trace;
};

template <CoefficientDomain F>
std::string format_trace_step(const TraceStep<F>& s, const std::vector<std::string>& names) {
    std::string action;
    switch (s.action) {
        case DivisionAction::MoveToRemainder: action = "move"; break;
        case DivisionAction::DivideByGenerator: action = "divide g" + std::to_string(s.divisor + 1); break;
        case DivisionAction::DivideByPartial: action = "divide q" + std::to_string(s.divisor); break;
    }
    return "j=" + std::to_string(s.j) + " action=" + action + " lm=" + s.lm.to_string(names) +
           " |T|=" + std::to_string(s.divisor_set_size);
}

namespace detail {

template <CoefficientDomain F>
struct DivisorEntry {
    Polynomial<F> poly;
    LeadingData<F> lead;
    std::optional<std::size_t> generator;  // index into G for originals
    std::size_t created_at = 0;            // iteration j for partial quotients
    std::vector<Polynomial<F>> h_snapshot;
    std::optional<Polynomial<F>> r_snapshot;
};

template <CoefficientDomain F>
Polynomial<F> combination(const Polynomial<F>& q, const std::vector<Polynomial<F>>& h,
                          const std::vector<Polynomial<F>>& G, const Polynomial<F>& r) {
    Polynomial<F> sum = q + r;
    for (std::size_t i = 0; i < G.size(); ++i) sum += h[i] * G[i];
    return sum;
}

}  // namespace detail

/// Computes f = sum h_i g_i + r with h_i g_i >= f, r >= f and no term of r
/// divisible by any lm(g_i).
///
/// Divisor choice: among the elements of T whose leading monomial divides
/// lm(q_j), the one of minimal ecart; ties go to generators before partial
/// quotients and then to the lowest index.
template <CoefficientDomain F>
DivisionResult<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G,
                              const WeightedOrder& ord, const NormalFormOptions<F>& opts = {}) {
    using P = Polynomial<F>;
    const F& field = f.field();
    const std::size_t n = f.nvars();
    if (ord.nvars() != n) throw DomainError("normal_form: order has wrong number of variables");
    if (!f.is_homogeneous()) throw DomainError("normal_form: dividend is not homogeneous");
    for (const auto& g : G) {
        if (g.nvars() != n || !(g.field() == field)) throw DomainError("normal_form: divisor from a different ring");
        if (g.is_zero()) throw DomainError("normal_form: zero divisor");
        if (!g.is_homogeneous()) throw DomainError("normal_form: divisor is not homogeneous");
    }

    DivisionResult<F> result{std::vector<P>(G.size(), P(field, n)), P(field, n), 0, {}};
    if (f.is_zero()) return result;

    std::vector<detail::DivisorEntry<F>> T;
    T.reserve(G.size() + 16);
    for (std::size_t i = 0; i < G.size(); ++i) T.push_back({G[i], leading_data(G[i], ord), i, 0, {}, std::nullopt});

    auto ecart_of = [&](const P& q, const detail::DivisorEntry<F>& e, const Monomial& shift) -> std::size_t {
        if (!opts.ecart) return support_count_shifted(q, e.poly, shift);
        return opts.ecart(q, shift.is_one() ? e.poly : e.poly.mono_mul(shift));
    };

    P q = f;
    P& r = result.remainder;
    std::vector<P>& h = result.quotients;
    std::optional<LeadingData<F>> previous_lead;

    for (std::size_t j = 0; !q.is_zero(); ++j) {
        if (j >= opts.max_steps) {
            throw BudgetExceeded("normal_form: step budget of " + std::to_string(opts.max_steps) + " exhausted");
        }
        const LeadingData<F> lead = leading_data(q, ord);
        if (opts.check_invariants && previous_lead &&
            compare_leading(lead, *previous_lead, ord.prec) != PolyOrdering::Greater) {
            throw Error("normal_form: q_j did not strictly increase");
        }
        previous_lead = lead;

        std::optional<std::size_t> best;
        std::size_t best_ecart = std::numeric_limits<std::size_t>::max();
        for (std::size_t k = 0; k < T.size(); ++k) {
            if (!T[k].lead.lm.divides(lead.lm)) continue;
            const std::size_t e = ecart_of(q, T[k], lead.lm / T[k].lead.lm);
            if (e < best_ecart) {
                best = k;
                best_ecart = e;
                if (e == 0) break;
            }
        }

        if (opts.trace) {
            TraceStep<F> step{j, DivisionAction::MoveToRemainder, 0, lead.lm, T.size(), q, r};
            if (best) {
                const auto& e = T[*best];
                step.action = e.generator ? DivisionAction::DivideByGenerator : DivisionAction::DivideByPartial;
                step.divisor = e.generator ? *e.generator : e.created_at;
            }
            result.trace.push_back(std::move(step));
        }

        if (!best) {
            T.push_back({q, lead, std::nullopt, j, h, r});
            r = r.add_scaled(lead.lc, lead.lm, P::constant(field, n, field.one()));
            q = q.sub_scaled(lead.lc, lead.lm, P::constant(field, n, field.one()));
        } else {
            const std::size_t k = *best;
            if (best_ecart > 0) T.push_back({q, lead, std::nullopt, j, h, r});
            const auto& g = T[k];
            const Monomial shift = lead.lm / g.lead.lm;
            const auto c = field.div(lead.lc, g.lead.lc);
            P p = q.sub_scaled(c, shift, g.poly);
            if (g.generator) {
                const std::size_t m = *g.generator;
                h[m] = h[m].add_scaled(c, shift, P::constant(field, n, field.one()));
                q = std::move(p);
            } else {
                // g = q_m for an earlier m: x^v = 1 and val(c) > 0, so 1 - c is a unit.
                if (!(field.val(c) > ExtInt(0))) {
                    throw Error("normal_form: partial-quotient step with val(c_v) <= 0");
                }
                const auto s = field.div(field.one(), field.sub(field.one(), c));
                q = p.scale(s);
                for (std::size_t i = 0; i < h.size(); ++i) {
                    h[i] = h[i].sub_scaled(c, Monomial(n), g.h_snapshot[i]).scale(s);
                }
                r = r.sub_scaled(c, Monomial(n), *g.r_snapshot).scale(s);
            }
        }
        ++result.step_count;

        if (opts.max_coefficient_bits != 0 && q.max_coefficient_bits() > opts.max_coefficient_bits) {
            throw BudgetExceeded("normal_form: coefficient size exceeded " +
                                 std::to_string(opts.max_coefficient_bits) + " bits");
        }
        if (opts.check_invariants && !(detail::combination(q, h, G, r) == f)) {
            throw Error("normal_form: f = q + sum h g + r violated");
        }
    }
    return result;
}

/// Convenience: remainder only.
template <CoefficientDomain F>
Polynomial<F> remainder(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G, const WeightedOrder& ord,
                        const NormalFormOptions<F>& opts = {}) {
    return normal_form(f, G, ord, opts).remainder;
}

}  // namespace valgb
