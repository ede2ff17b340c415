#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unihopf/heisenberg.hpp"
#include "unihopf/specfile.hpp"

namespace unihopf {

// Command-line surface. Reports are tab-separated tables with a header row;
// rationals print exactly, never as floats. Exit codes: 0 success, 2 input
// validation error, 3 internal-consistency failure (a structural check that
// the theory guarantees came out false).
namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ValidationError("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Context {
    SpecFile spec;
    QuadraticData q;
    int truncation = 4;
};

inline Context load_context(const std::string& path, int truncation_override) {
    Context ctx;
    ctx.spec = parse_spec(read_file(path));
    ctx.q = resolve_quadratic(ctx.spec);
    ctx.truncation = truncation_override >= 0 ? truncation_override : ctx.spec.truncation;
    return ctx;
}

inline GradedHopf quad_hopf_of(const Context& ctx) {
    return build_quad_hopf(tn_tower(ctx.q, ctx.truncation), ctx.truncation);
}

inline int cmd_dims(const Context& ctx, std::ostream& out) {
    const GradedHopf h = quad_hopf_of(ctx);
    out << "weight\tdim\n";
    const auto dims = graded_dims(h);
    for (size_t w = 0; w < dims.size(); ++w) out << w << "\t" << dims[w] << "\n";
    return 0;
}

inline int cmd_tower(const Context& ctx, std::ostream& out) {
    const GradedHopf h = quad_hopf_of(ctx);
    const int height = std::max(1, ctx.truncation);
    const PointedTower t = iterated_tower(h, height);
    out << "n\tdim\tdepth\n";
    for (int n = 1; n <= height; ++n)
        out << n << "\t" << t.level(n).E.dim << "\t" << depth(t.level(n).E) << "\n";
    return 0;
}

inline int cmd_conil(const Context& ctx, std::ostream& out) {
    const GradedHopf h = quad_hopf_of(ctx);
    const ConilFiltration a = conil_filtration(h, ctx.truncation);
    const ConilFiltration b = conil_filtration_annihilator(h, ctx.truncation);
    out << "n\tdim_coproduct\tdim_annihilator\tagree\n";
    bool all = true;
    for (int n = 0; n <= ctx.truncation; ++n) {
        const bool eq = a.levels[n] == b.levels[n];
        all = all && eq;
        out << n << "\t" << a.levels[n].dim() << "\t" << b.levels[n].dim() << "\t"
            << (eq ? "yes" : "no") << "\n";
    }
    return all ? 0 : 3;
}

inline int cmd_cohomology(const Context& ctx, int degree, std::ostream& out) {
    const GradedHopf h = quad_hopf_of(ctx);
    const CohomologyReport rep = cobar_cohomology(h, degree, ctx.truncation);
    out << "weight\tdim\n";
    for (size_t w = 0; w < rep.dims.size(); ++w) out << w << "\t" << rep.dims[w] << "\n";
    return 0;
}

inline int suite_hopf(const Context& ctx, std::ostream& out) {
    const GradedHopf h = quad_hopf_of(ctx);
    const HopfCheckResult r = check_hopf_axioms(h);
    out << "check\tresult\n";
    out << "hopf_axioms\t" << (r.ok ? "pass" : "FAIL " + r.axiom + " at " + r.witness) << "\n";
    return r.ok ? 0 : 3;
}

// Closure through an independent route: embed T_n into H(V) and verify that
// shuffle products, deconcatenations and antipodes computed there land back
// in the tower.
inline int suite_closure(const Context& ctx, std::ostream& out) {
    const int N = ctx.truncation;
    const TnTower t = tn_tower(ctx.q, N);
    bool built = true, prod_ok = true, cop_ok = true, antip_ok = true;
    try {
        (void)build_quad_hopf(t, N);
    } catch (const InternalConsistencyError&) {
        built = false;
    }
    const int d = ctx.q.d1;
    for (int a = 1; a <= N; ++a) {
        const auto words_a = enumerate_words(d, a);
        for (int b = 1; a + b <= N; ++b) {
            const auto words_b = enumerate_words(d, b);
            for (int i = 0; i < t.spaces[a].dim(); ++i)
                for (int j = 0; j < t.spaces[b].dim(); ++j) {
                    const Vec u = t.spaces[a].basis_vector(i), v = t.spaces[b].basis_vector(j);
                    GradedVector prod{d, {}};
                    for (size_t p = 0; p < words_a.size(); ++p) {
                        if (u[p].is_zero()) continue;
                        for (size_t q = 0; q < words_b.size(); ++q) {
                            if (v[q].is_zero()) continue;
                            const GradedVector s = shuffle_words(words_a[p], words_b[q], d);
                            for (const auto& [w, c] : s.terms) prod.add(w, u[p] * v[q] * c);
                        }
                    }
                    if (!t.spaces[a + b].contains(prod.component_coords(a + b))) prod_ok = false;
                }
        }
    }
    for (int w = 1; w <= N; ++w) {
        const auto words = enumerate_words(d, w);
        for (int i = 0; i < t.spaces[w].dim(); ++i) {
            const Vec x = t.spaces[w].basis_vector(i);
            for (int a = 1; a < w; ++a) {
                const Subspace pair = Subspace::from_rows(
                    kron(t.spaces[a].basis(), t.spaces[w - a].basis()));
                if (!pair.contains(x)) cop_ok = false;
            }
            Vec rev(x.size());
            for (size_t p = 0; p < words.size(); ++p)
                if (!x[p].is_zero()) rev[word_index(words[p].reversed(), d)] = x[p];
            if (!t.spaces[w].contains(rev)) antip_ok = false;
        }
    }
    out << "check\tresult\n";
    out << "construction\t" << (built ? "pass" : "FAIL") << "\n";
    out << "product_closure\t" << (prod_ok ? "pass" : "FAIL") << "\n";
    out << "coproduct_closure\t" << (cop_ok ? "pass" : "FAIL") << "\n";
    out << "antipode_closure\t" << (antip_ok ? "pass" : "FAIL") << "\n";
    return (built && prod_ok && cop_ok && antip_ok) ? 0 : 3;
}

inline int suite_tower(const Context& ctx, std::ostream& out) {
    const GradedHopf h = quad_hopf_of(ctx);
    const int height = std::max(1, ctx.truncation);
    const PointedTower t = iterated_tower(h, height);
    const ConilFiltration c = conil_filtration(h, height);
    out << "check\tresult\n";
    bool all = true;
    for (int n = 1; n <= height; ++n) {
        const bool dims_ok = t.level(n).E.dim == c.levels[n - 1].dim();
        const bool depth_ok = depth(t.level(n).E) == n;
        const bool factor_ok = !verify_conil_factorization(t.level(n).E, c).has_value();
        const bool hom_ok = n == 1 || hom_to_trivial_dim(t.level(n).E) ==
                                          hom_to_trivial_dim(t.level(n - 1).E);
        all = all && dims_ok && depth_ok && factor_ok && hom_ok;
        out << "dim_E" << n << "_eq_dim_C" << n - 1 << "\t" << (dims_ok ? "pass" : "FAIL") << "\n";
        out << "depth_E" << n << "\t" << (depth_ok ? "pass" : "FAIL") << "\n";
        out << "conil_factorization_E" << n << "\t" << (factor_ok ? "pass" : "FAIL") << "\n";
        if (n > 1)
            out << "hom_dim_E" << n << "_eq_E" << n - 1 << "\t" << (hom_ok ? "pass" : "FAIL")
                << "\n";
    }
    return all ? 0 : 3;
}

inline int suite_universal(const Context& ctx, unsigned long seed, std::ostream& out) {
    const GradedHopf h = quad_hopf_of(ctx);
    const int height = std::min(3, std::max(1, ctx.truncation));
    const PointedTower t = iterated_tower(h, height);
    const auto gens = dual_algebra_generators(h);
    std::mt19937_64 rng(seed);
    out << "check\tresult\n";
    bool all = true;
    for (int n = 1; n <= height; ++n) {
        bool ok = true;
        for (int trial = 0; trial < 25; ++trial) {
            const auto [f, point] = random_nilpotent_pointed(h, rng, n);
            const PointedHomSet hom = hom_pointed(t.level(n).E, t.level(n).point, f, point, &gens);
            if (!hom.singleton()) ok = false;
        }
        all = all && ok;
        out << "universal_property_E" << n << "\t" << (ok ? "pass" : "FAIL") << "\n";
    }
    return all ? 0 : 3;
}

inline int cmd_compare(int truncation, std::ostream& out) {
    const int N = truncation;
    const GradedHopf heis = build_heisenberg_hopf(N);
    const ConilFiltration conil = conil_filtration(heis, N);
    const std::vector<int> heis_gr = conil.graded_dims();

    const QuadraticData q = quadratic_from_cohomology(heis);
    const GradedHopf approx = build_quad_hopf(tn_tower(q, N), N);
    const std::vector<int> quad = graded_dims(approx);

    out << "weight\theisenberg_conil_graded\tquadratic_hopf\tequal\n";
    int first_divergence = -1;
    for (int w = 0; w <= N; ++w) {
        const bool eq = heis_gr[w] == quad[w];
        if (!eq && first_divergence < 0) first_divergence = w;
        out << w << "\t" << heis_gr[w] << "\t" << quad[w] << "\t" << (eq ? "yes" : "no") << "\n";
    }
    if (first_divergence >= 0)
        out << "# dims diverge first at weight " << first_divergence << "\n";
    else
        out << "# no divergence up to weight " << N << "\n";
    return 0;
}

} // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"unipotent fundamental-group Hopf algebras from quadratic data"};
    app.require_subcommand(1);

    std::string spec_path;
    int truncation_flag = -1;
    int degree = 1;
    std::string suite;
    std::string against;
    unsigned long seed = 0;

    auto add_spec = [&spec_path](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("spec", spec_path, "input spec file (JSON)");
        if (required) opt->required();
    };
    auto add_trunc = [&truncation_flag](CLI::App* cmd) {
        cmd->add_option("--truncation", truncation_flag, "weight truncation override");
    };

    CLI::App* dims = app.add_subcommand("dims", "graded dimensions of H(V,J)");
    add_spec(dims, true);
    add_trunc(dims);

    CLI::App* tower = app.add_subcommand("tower", "iterated universal extension dims and depths");
    add_spec(tower, true);
    add_trunc(tower);

    CLI::App* conil = app.add_subcommand("conil", "conilpotency filtration, both algorithms");
    add_spec(conil, true);
    add_trunc(conil);

    CLI::App* coh = app.add_subcommand("cohomology", "cobar cohomology dims per weight");
    add_spec(coh, true);
    add_trunc(coh);
    coh->add_option("--degree", degree, "cohomology degree")->check(CLI::IsMember({1, 2}));

    CLI::App* check = app.add_subcommand("check", "property suites");
    add_spec(check, true);
    add_trunc(check);
    check->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"hopf", "closure", "tower", "universal"}));
    check->add_option("--seed", seed, "seed for randomized suites");

    CLI::App* compare = app.add_subcommand("compare", "compare against a builtin oracle");
    compare->add_option("--against", against, "oracle name")
        ->required()
        ->check(CLI::IsMember({"heisenberg"}));
    add_trunc(compare);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (compare->parsed()) return cmd_compare(truncation_flag >= 0 ? truncation_flag : 4, out);

        const Context ctx = load_context(spec_path, truncation_flag);
        if (dims->parsed()) return cmd_dims(ctx, out);
        if (tower->parsed()) return cmd_tower(ctx, out);
        if (conil->parsed()) return cmd_conil(ctx, out);
        if (coh->parsed()) return cmd_cohomology(ctx, degree, out);
        if (check->parsed()) {
            if (suite == "hopf") return suite_hopf(ctx, out);
            if (suite == "closure") return suite_closure(ctx, out);
            if (suite == "tower") return suite_tower(ctx, out);
            return suite_universal(ctx, seed, out);
        }
        err << "no command\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace unihopf
