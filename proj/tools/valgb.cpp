// Command-line front end. Exit status: 0 success, 1 input error, 2 budget
// exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "valgb/bounds.hpp"
#include "valgb/buchberger.hpp"
#include "valgb/experiments.hpp"
#include "valgb/lift.hpp"
#include "valgb/normal_form.hpp"
#include "valgb/parser.hpp"
#include "valgb/tropical.hpp"

namespace {

using namespace valgb;

constexpr int kInputError = 1;
constexpr int kBudgetError = 2;

struct Flags {
    std::string file;
    bool no_criteria = false;
    unsigned long modpm = 0;
    std::size_t retries = 5;
    bool verify = false;
    bool trace = false;
    bool progress = false;
    std::string reducer = "linear";
    std::uint64_t degree_cap = 64;
    bool allow_inhomogeneous = false;
    std::uint64_t e = 1;
    std::uint64_t seeds = 10;
    std::uint64_t seed = 0;
    long height = 20;
};

ProblemFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

void print_all(const std::vector<std::string>& lines) {
    for (const auto& s : lines) std::cout << s << "\n";
}

template <CoefficientDomain F>
std::vector<std::string> render(const std::vector<Polynomial<F>>& G, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& g : G) out.push_back(g.to_string(names));
    return out;
}

template <CoefficientDomain F>
BuchbergerOptions<F> buchberger_options(const Flags& fl) {
    BuchbergerOptions<F> opts;
    opts.use_criteria = !fl.no_criteria;
    opts.reducer = fl.reducer == "mora" ? ReducerKind::Mora : ReducerKind::Linear;
    if (fl.progress) {
        opts.progress = [](std::size_t done, std::size_t left, std::size_t size) {
            std::cerr << "pairs processed " << done << ", remaining " << left << ", basis size " << size << "\n";
        };
    }
    return opts;
}

template <CoefficientDomain F>
int run_gb(const ProblemFile& pf, const F& field, const Flags& fl) {
    const auto pr = materialize(pf, field);
    const auto ord = pf.weighted_order();
    GroebnerBasis<F> red{{}, ord, false, false, false, {}};
    if (fl.modpm != 0) {
        if constexpr (std::is_same_v<F, PAdicRationals>) {
            ModPmOptions opts;
            opts.m0 = fl.modpm;
            opts.max_doublings = fl.retries;
            opts.log = [](const std::string& s) { std::cerr << s << "\n"; };
            const auto r = gb_mod_pm(pr.generators, ord, opts);
            std::cerr << "modulus exponent " << r.final_m << " after " << r.attempts << " attempt(s)"
                      << (r.fell_back ? ", fell back to Q" : "") << "\n";
            red = r.basis;
        } else {
            throw DomainError("--modpm needs a field Qp(p) problem");
        }
    } else {
        red = reduced_groebner_basis(pr.generators, ord, buchberger_options<F>(fl));
        if (fl.progress) {
            std::cerr << "pairs " << red.stats.pairs_processed << ", skipped by B1 " << red.stats.skipped_b1
                      << ", by B2 " << red.stats.skipped_b2 << "\n";
        }
    }
    print_all(render(red.elements, pr.vars));
    if (fl.verify) {
        const bool ok = is_groebner(red.elements, ord) && generates_all(pr.generators, red.elements, ord);
        std::cerr << (ok ? "verified: Groebner basis of the input ideal" : "verification FAILED") << "\n";
        if (!ok) return kBudgetError;
    }
    return 0;
}

template <CoefficientDomain F>
int run_nf(const ProblemFile& pf, const F& field, const Flags& fl) {
    const auto pr = materialize(pf, field);
    if (!pr.dividend) throw DomainError("nf needs a 'divide:' line");
    NormalFormOptions<F> opts;
    opts.trace = fl.trace;
    const auto res = normal_form(*pr.dividend, pr.generators, pf.weighted_order(), opts);
    for (const auto& s : res.trace) {
        std::cout << format_trace_step(s, pr.vars) << " q=" << s.q.to_string(pr.vars) << " r=" << s.r.to_string(pr.vars)
                  << "\n";
    }
    for (std::size_t i = 0; i < res.quotients.size(); ++i) {
        std::cout << "h" << i + 1 << " = " << res.quotients[i].to_string(pr.vars) << "\n";
    }
    std::cout << "r = " << res.remainder.to_string(pr.vars) << "\n";
    return 0;
}

template <CoefficientDomain F>
int run_initial(const ProblemFile& pf, const F& field, const Flags& fl) {
    const auto pr = materialize(pf, field, fl.allow_inhomogeneous);
    const auto ord = pf.weighted_order();
    const bool homogeneous = std::all_of(pr.generators.begin(), pr.generators.end(),
                                         [](const auto& g) { return g.is_homogeneous(); });
    if (!homogeneous) {
        std::cerr << "input is not homogeneous: printing initial forms of the generators only\n";
        print_all(render(initial_forms(pr.generators, ord.w).generators, pr.vars));
        return 0;
    }
    print_all(render(initial_ideal(pr.generators, ord).generators, pr.vars));
    return 0;
}

template <CoefficientDomain F>
int run_tropical(const ProblemFile& pf, const F& field, const Flags&) {
    const auto pr = materialize(pf, field);
    const auto ord = pf.weighted_order();
    const auto in_w = initial_ideal(pr.generators, ord);
    const bool member = !contains_monomial(in_w);
    std::cout << "in tropical variety: " << (member ? "yes" : "no") << "\n";
    std::cout << "initial ideal:\n";
    print_all(render(in_w.generators, pr.vars));
    return 0;
}

int run_bounds(const ProblemFile& pf, const Flags& fl) {
    if (pf.field.kind != FieldKind::QP) throw DomainError("bounds needs a field Qp(p) problem");
    const PAdicRationals field(pf.field.prime);
    const auto pr = materialize(pf, field);
    const auto r = effective_valuation_bound(pr.generators, pf.field.prime, pf.weighted_order(), fl.degree_cap);
    std::cout << "n=" << r.n << "\n"
              << "d=" << r.delta << "\n"
              << "C=" << r.C << "\n"
              << "D=" << r.D << "\n"
              << "A=" << r.A << " (dimension in degree " << r.D_used << ")\n"
              << "valuation bound=" << r.bound << "\n"
              << "truncated=" << (r.truncated ? "yes" : "no") << "\n";
    return 0;
}

int run_cardinality(const Flags& fl) {
    CardinalityOptions opts;
    opts.height = fl.height;
    opts.max_resamples = fl.retries;
    opts.log = [](const std::string& s) { std::cerr << s << "\n"; };
    const auto orders = default_cardinality_orders();
    const std::vector<std::string> names{"x1", "x2", "x3"};
    std::cout << "e,d,seed,padic_size,order,standard_size,bound\n";
    bool all_hold = true;
    for (std::uint64_t s = fl.seed; s < fl.seed + fl.seeds; ++s) {
        const auto r = cardinality_report(fl.e, orders, s, opts);
        for (const auto& [order, size] : r.standard_sizes) {
            std::cout << r.e << "," << r.d << "," << r.seed << "," << r.padic_size << "," << order.to_string(names)
                      << "," << size << "," << r.lower_bound << "\n";
        }
        all_hold = all_hold && r.holds();
    }
    std::cerr << (all_hold ? "lower bound holds on every sample" : "lower bound VIOLATED") << "\n";
    return 0;
}

template <class Fn>
int with_field(const ProblemFile& pf, Fn&& fn) {
    switch (pf.field.kind) {
        case FieldKind::QP: return fn(PAdicRationals(pf.field.prime));
        case FieldKind::QTrivial: return fn(RationalField{});
        case FieldKind::QT: return fn(RationalFunctionField{});
    }
    throw DomainError("unknown field");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases over fields with valuations"};
    app.require_subcommand(1);
    Flags fl;

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis, sorted by degree then leading monomial");
    gb->add_option("file", fl.file, "problem file")->required();
    gb->add_flag("--no-criteria", fl.no_criteria, "process every S-pair");
    gb->add_option("--modpm", fl.modpm, "compute modulo p^m starting from this m, then lift");
    gb->add_option("--retries", fl.retries, "doublings of m before falling back")->capture_default_str();
    gb->add_flag("--verify", fl.verify, "check the Groebner property and generation over the field");
    gb->add_flag("--progress", fl.progress, "report pair counts and criteria skips on stderr");
    gb->add_option("--reducer", fl.reducer, "S-polynomial reduction engine")->capture_default_str()
        ->check(CLI::IsMember({"linear", "mora"}));

    auto* nf = app.add_subcommand("nf", "normal form of the 'divide:' polynomial with quotients");
    nf->add_option("file", fl.file, "problem file")->required();
    nf->add_flag("--trace", fl.trace, "print every division step");

    auto* initial = app.add_subcommand("initial", "generators of the initial ideal over the residue field");
    initial->add_option("file", fl.file, "problem file")->required();
    initial->add_flag("--allow-inhomogeneous", fl.allow_inhomogeneous, "accept non-homogeneous generators");

    auto* tropical = app.add_subcommand("tropical-member", "is the weight in the tropical variety");
    tropical->add_option("file", fl.file, "problem file")->required();

    auto* bounds = app.add_subcommand("bounds", "degree and valuation bounds for a Qp problem");
    bounds->add_option("file", fl.file, "problem file")->required();
    bounds->add_option("--degree-cap", fl.degree_cap, "evaluate A at most at this degree (0 = no cap)")->capture_default_str();

    auto* card = app.add_subcommand("compare-cardinality", "2-adic against standard basis sizes as CSV");
    card->add_option("--e", fl.e, "half the degree")->capture_default_str()->check(CLI::Range(1, 3));
    card->add_option("--seeds", fl.seeds, "number of seeds")->capture_default_str();
    card->add_option("--seed", fl.seed, "first seed")->capture_default_str();
    card->add_option("--retries", fl.retries, "redraws allowed per seed")->capture_default_str();
    card->add_option("--height", fl.height, "coefficient bound")->capture_default_str()->check(CLI::Range(2L, 1000000L));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*card) return run_cardinality(fl);
        const ProblemFile pf = load(fl.file);
        if (*gb) return with_field(pf, [&](const auto& f) { return run_gb(pf, f, fl); });
        if (*nf) return with_field(pf, [&](const auto& f) { return run_nf(pf, f, fl); });
        if (*initial) return with_field(pf, [&](const auto& f) { return run_initial(pf, f, fl); });
        if (*tropical) return with_field(pf, [&](const auto& f) { return run_tropical(pf, f, fl); });
        if (*bounds) return run_bounds(pf, fl);
    } catch (const ParseError& e) {
        std::cerr << fl.file << ":" << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudgetError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudgetError;
    }
    return kInputError;
}
