// padic: command-line front end. Exit codes: 0 pass, 1 check failure,
// 2 input error, 3 budget exceeded.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "padic/acceptance.hpp"
#include "padic/oracle.hpp"
#include "padic/serialize.hpp"
#include "padic/sobolev.hpp"

using namespace padic;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kBudget = 3 };

struct Globals {
    unsigned precision_bits = kDefaultPrecisionBits;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";
    int depth_budget = SearchBudget{}.max_depth;
};

struct Inputs {
    std::string poly, expr, rhs, points, alpha, l = "0", kind = "H", additive = "0", route = "spectral";
    std::string suite = "default", criteria = "all", fixtures, tolerance = "1e-18";
    std::optional<std::int64_t> p;
    std::optional<int> n, level;
    int sign = 1;
    bool timings = false;
};

std::string csv_point(const Point& x) {
    std::string out;
    for (std::size_t i = 0; i < x.coords.size(); ++i) out += (i ? " " : "") + to_string(x.coords[i]);
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void require_json(const Globals& g, const char* command) {
    if (g.format != "json") throw InputError(std::string(command) + " supports only --format json");
}

SearchBudget budget(const Globals& g) {
    SearchBudget b;
    b.max_depth = g.depth_budget;
    return b;
}

Real real_flag(const std::string& text, const char* name) {
    if (text.empty()) throw InputError(std::string("--") + name + " is required");
    return parse_real(text);
}

PolynomialInput load_polynomial(const Inputs& in) {
    if (!in.poly.empty()) return polynomial_from_json(read_json_file(in.poly));
    if (in.expr.empty()) throw InputError("give --poly FILE or --expr TEXT with --p and --n");
    if (!in.p || !in.n) throw InputError("--expr needs --p and --n");
    return {Prime(*in.p), parse_polynomial(in.expr, *in.n)};
}

HomogeneousSymbol load_symbol(const Inputs& in, const Globals& g) {
    const auto poly = load_polynomial(in);
    if (!poly.f.is_homogeneous()) throw InputError("the polynomial must be homogeneous");
    return HomogeneousSymbol::elliptic(poly.f, sphere_covering(poly.f, poly.p, budget(g)));
}

TestFunction load_function(const std::string& path) {
    if (path.empty()) throw InputError("--rhs FILE is required");
    return test_function_from_json(read_json_file(path));
}

std::vector<Point> load_points(const std::string& path, int n) {
    if (path.empty()) throw InputError("--points FILE is required");
    return points_from_json(read_json_file(path), n);
}

void check_dims(const TestFunction& phi, const HomogeneousSymbol& h) {
    if (phi.prime() != h.prime() || phi.dim() != h.dim())
        throw InputError("function and polynomial disagree on p or n");
}

int cmd_zeta(const Inputs& in, const Globals& g) {
    const auto poly = load_polynomial(in);
    if (!poly.f.is_homogeneous()) throw InputError("the polynomial must be homogeneous");
    const auto cov = sphere_covering(poly.f, poly.p, budget(g));
    const auto z = igusa_zeta(cov);
    if (g.format == "csv") {
        std::cout << "part,exponent,coefficient\n";
        for (const auto& [e, c] : z.num().coeffs()) std::cout << "num," << e << "," << to_string(c) << "\n";
        for (const auto& [e, c] : z.den().coeffs()) std::cout << "den," << e << "," << to_string(c) << "\n";
        return kOk;
    }
    const auto c = norm_comparison(cov);
    emit(Json{{"command", "zeta"},
              {"polynomial", to_json(poly.f, poly.p)},
              {"zeta", to_json(z)},
              {"leaves", cov.leaves.size()},
              {"m_min", cov.m_min},
              {"m_max", cov.m_max},
              {"c0", to_json(c.c0)},
              {"c1", to_json(c.c1)}});
    return kOk;
}

int cmd_apply(const Inputs& in, const Globals& g) {
    const auto phi = load_function(in.rhs);
    const Real alpha = real_flag(in.alpha, "alpha");
    std::optional<HomogeneousSymbol> h;
    if (!in.poly.empty() || !in.expr.empty()) {
        h = load_symbol(in, g);
        check_dims(phi, *h);
    }
    if (in.route != "spectral" && in.route != "direct") throw InputError("--route must be spectral or direct");
    if (in.route == "direct" && (h || in.sign != 1)) throw InputError("the direct route exists only for D_T^alpha");
    const auto pts = load_points(in.points, phi.dim());
    const Multiplier m = h ? Multiplier::elliptic(*h, alpha, in.sign) : Multiplier::taibleson(phi.prime(), phi.dim(), alpha, in.sign);
    Json rows = Json::array();
    if (g.format == "csv") std::cout << "x,re,im\n";
    for (const auto& x : pts) {
        const auto v = in.route == "direct" ? taibleson_direct(alpha, phi, x) : multiplier_apply(m, phi, x);
        if (g.format == "csv")
            std::cout << csv_point(x) << "," << to_string(v.value.re) << "," << to_string(v.value.im) << "\n";
        else
            rows.push_back(Json{{"x", to_json(x)}, {"value", to_json(v.value)}});
    }
    if (g.format == "json")
        emit(Json{{"command", "apply"}, {"symbol", h ? "elliptic" : "norm"}, {"alpha", to_json(alpha)},
                  {"sign", in.sign}, {"route", in.route}, {"results", rows}});
    return kOk;
}

int cmd_solve(const Inputs& in, const Globals& g) {
    const auto h = load_symbol(in, g);
    const auto v = load_function(in.rhs);
    check_dims(v, h);
    const auto sol = solve(h, real_flag(in.alpha, "alpha"), v);
    const auto pts = load_points(in.points, v.dim());
    for (const auto& w : sol.warnings()) std::cerr << "warning: " << w << "\n";
    Json rows = Json::array();
    if (g.format == "csv") std::cout << "x,u_re,u_im,residual_re,residual_im\n";
    for (const auto& x : pts) {
        const auto u = sol.u(x).value;
        const auto r = sol.residual(x).value;
        if (g.format == "csv")
            std::cout << csv_point(x) << "," << to_string(u.re) << "," << to_string(u.im) << "," << to_string(r.re) << ","
                      << to_string(r.im) << "\n";
        else
            rows.push_back(Json{{"x", to_json(x)}, {"u", to_json(u)}, {"residual", to_json(r)}});
    }
    if (g.format == "json")
        emit(Json{{"command", "solve"}, {"alpha", to_json(sol.alpha())}, {"kernel", sol.kernel().describe()},
                  {"warnings", sol.warnings()}, {"results", rows}});
    return kOk;
}

int cmd_norm(const Inputs& in, const Globals& g) {
    const auto phi = load_function(in.rhs);
    NormKind kind;
    if (in.kind == "H")
        kind = NormKind::H;
    else if (in.kind == "singular_H")
        kind = NormKind::singular_H;
    else if (in.kind == "L1_fourier")
        kind = NormKind::L1_fourier;
    else
        throw InputError("--kind must be H, singular_H or L1_fourier");
    const auto r = h_norm(phi, parse_real(in.l), kind);
    if (g.format == "csv") {
        std::cout << "part,mass\n";
        for (const auto& [j, m] : r.shell_breakdown) std::cout << "shell " << j << "," << to_string(m) << "\n";
        std::cout << "core," << to_string(r.core_mass) << "\n";
        return kOk;
    }
    Json shells = Json::array();
    for (const auto& [j, m] : r.shell_breakdown) shells.push_back(Json{{"j", j}, {"mass", to_json(m)}});
    emit(Json{{"command", "norm"}, {"kind", to_string(kind)}, {"l", to_json(r.l)}, {"value", to_json(r.squared_norm)},
              {"core_mass", to_json(r.core_mass)}, {"shells", shells}});
    return kOk;
}

int cmd_kernel(const Inputs& in, const Globals& g) {
    const Real alpha = real_flag(in.alpha, "alpha");
    const Real additive = parse_real(in.additive);
    Kernel e;
    if (!in.poly.empty() || !in.expr.empty()) {
        e = elliptic_kernel(load_symbol(in, g), alpha, additive);
    } else {
        if (!in.p || !in.n) throw InputError("kernel needs --p and --n (or a polynomial)");
        e = taibleson_kernel(Prime(*in.p), *in.n, alpha, additive);
    }
    std::vector<Point> pts;
    if (!in.points.empty()) pts = load_points(in.points, e.n);
    Json rows = Json::array();
    if (g.format == "csv") std::cout << "x,value\n";
    for (const auto& x : pts) {
        const bool at_zero = x.is_zero();
        if (g.format == "csv")
            std::cout << csv_point(x) << "," << (at_zero ? "" : to_string(e(x))) << "\n";
        else
            rows.push_back(Json{{"x", to_json(x)}, {"value", at_zero ? Json(nullptr) : to_json(e(x))}});
    }
    if (g.format == "json")
        emit(Json{{"command", "kernel"},
                  {"kernel", e.describe()},
                  {"form", e.form == KernelForm::power ? "power" : "log"},
                  {"coeff", to_json(e.coeff)},
                  {"exponent", to_json(e.exponent)},
                  {"additive", to_json(e.additive)},
                  {"w_only", e.domain == KernelDomain::w_only},
                  {"fourier_factor", to_json(e.fourier_factor())},
                  {"fourier_exponent", to_json(e.fourier_exponent())},
                  {"values", rows}});
    return kOk;
}

std::vector<int> parse_criteria(const std::string& text) {
    std::vector<int> ids;
    if (text == "none") return ids;
    if (text == "all") {
        for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
        return ids;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int id = std::stoi(item, &used);
            if (used != item.size() || id < 1 || id > kCriterionCount) throw std::invalid_argument(item);
            ids.push_back(id);
        } catch (const std::exception&) {
            throw InputError("--criteria: expected all, none or ids 1-10, got '" + item + "'");
        }
    }
    return ids;
}

int cmd_verify(const Inputs& in, const Globals& g) {
    if (in.suite != "default") throw InputError("unknown suite '" + in.suite + "' (only 'default')");
    AcceptanceOptions opt;
    opt.seed = g.seed;
    const auto ids = parse_criteria(in.criteria);
    bool ok = true;
    Json crit = Json::array(), fx = Json::array();
    if (g.format == "csv") std::cout << "item,pass,title\n";
    for (int id : ids) {
        const auto r = run_criterion(id, opt);
        ok = ok && r.pass();
        if (g.format == "csv")
            std::cout << "criterion " << id << "," << (r.pass() ? "pass" : "fail") << ",\"" << r.title << "\"\n";
        else
            crit.push_back(to_json(r, in.timings));
    }
    if (!in.fixtures.empty())
        for (const auto& r : check_fixture_dir(in.fixtures)) {
            ok = ok && r.pass;
            if (g.format == "csv")
                std::cout << "fixture " << r.name << "," << (r.pass ? "pass" : "fail") << ",\n";
            else
                fx.push_back(Json{{"fixture", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
    if (g.format == "json")
        emit(Json{{"command", "verify"}, {"seed", g.seed}, {"pass", ok}, {"criteria", crit}, {"fixtures", fx}});
    return ok ? kOk : kCheckFailed;
}

int cmd_oracle(const Inputs& in, const Globals& g) {
    require_json(g, "oracle-check");
    const auto phi = load_function(in.rhs);
    const int k = in.level ? *in.level : std::max(required_level(phi), 0);
    const Real tol = parse_real(in.tolerance);
    const auto grid = project(phi, k);
    const auto spec = dft(grid);
    const auto forward = compare(spec, fourier(phi), tol);
    const auto back = compare(dft(spec, Direction::inverse), phi, tol);
    bool ok = forward.pass && back.pass;
    Json out{{"command", "oracle-check"},
             {"level", k},
             {"points", grid.size()},
             {"forward_max_abs", to_json(forward.max_abs)},
             {"inverse_max_abs", to_json(back.max_abs)}};
    if (!in.alpha.empty()) {
        const Real alpha = parse_real(in.alpha);
        const auto brute = norm_multiplier(grid, alpha);
        std::vector<std::size_t> idx;
        const std::size_t step = std::max<std::size_t>(1, brute.size() / 50);
        for (std::size_t i = 0; i < brute.size(); i += step) idx.push_back(i);
        const auto m = Multiplier::taibleson(phi.prime(), phi.dim(), alpha);
        const auto rep = compare(brute, idx, [&](const Point& x) { return multiplier_apply(m, phi, x).value; }, tol);
        ok = ok && rep.pass;
        out["multiplier_max_abs"] = to_json(rep.max_abs);
        out["multiplier_points"] = rep.points;
    }
    out["tolerance"] = to_json(tol);
    out["pass"] = ok;
    emit(out);
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic pseudo-differential operators: exact transforms, Igusa zeta functions, solvers"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    Inputs in;
    app.add_option("--precision-bits", g.precision_bits, "working precision of reals")->check(CLI::Range(53u, 4096u));
    app.add_option("--seed", g.seed, "seed for random suites");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--depth-budget", g.depth_budget, "maximum refinement depth of the sphere covering")
        ->check(CLI::Range(1, 64));

    auto poly_opts = [&](CLI::App* c) {
        c->add_option("--poly", in.poly, "polynomial JSON file");
        c->add_option("--expr", in.expr, "polynomial as text, e.g. \"x1^2 + x2^2\"");
        c->add_option("--p", in.p, "prime");
        c->add_option("--n", in.n, "dimension");
    };
    auto* zeta = app.add_subcommand("zeta", "Igusa zeta function of an elliptic homogeneous polynomial");
    poly_opts(zeta);
    auto* apply = app.add_subcommand("apply", "apply |f(D)|^{+-alpha} (default ||D||^alpha) at sample points");
    poly_opts(apply);
    apply->add_option("--rhs", in.rhs, "test function JSON file");
    apply->add_option("--alpha", in.alpha, "order");
    apply->add_option("--sign", in.sign, "+1 or -1")->check(CLI::IsMember({-1, 1}));
    apply->add_option("--route", in.route, "spectral or direct (hypersingular integral)");
    apply->add_option("--points", in.points, "sample point JSON file");
    auto* solve_cmd = app.add_subcommand("solve", "solve f(D, alpha) u = v and report u and residuals");
    poly_opts(solve_cmd);
    solve_cmd->add_option("--rhs", in.rhs, "right-hand side JSON file");
    solve_cmd->add_option("--alpha", in.alpha, "order, 0 < alpha < n/d");
    solve_cmd->add_option("--points", in.points, "sample point JSON file");
    auto* norm = app.add_subcommand("norm", "Sobolev norms of a test function");
    norm->add_option("--rhs", in.rhs, "test function JSON file");
    norm->add_option("--l", in.l, "Sobolev index");
    norm->add_option("--kind", in.kind, "H, singular_H or L1_fourier");
    auto* kernel = app.add_subcommand("kernel", "fundamental solution kernel and its values");
    poly_opts(kernel);
    kernel->add_option("--alpha", in.alpha, "order");
    kernel->add_option("--additive", in.additive, "additive constant");
    kernel->add_option("--points", in.points, "sample point JSON file");
    auto* verify = app.add_subcommand("verify", "run acceptance criteria and stored fixtures");
    verify->add_option("--suite", in.suite, "suite name");
    verify->add_option("--criteria", in.criteria, "all, none or a list such as 1,3,9");
    verify->add_option("--fixtures", in.fixtures, "directory of fixture JSON files");
    verify->add_flag("--timings", in.timings, "include wall-clock seconds");
    auto* oracle = app.add_subcommand("oracle-check", "compare exact transforms with the finite quotient");
    oracle->add_option("--rhs", in.rhs, "test function JSON file");
    oracle->add_option("--level", in.level, "quotient level K (default: smallest that fits)");
    oracle->add_option("--alpha", in.alpha, "also check the norm multiplier of this order");
    oracle->add_option("--tolerance", in.tolerance, "absolute tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        set_precision_bits(g.precision_bits);
        if (*zeta) return cmd_zeta(in, g);
        if (*apply) return cmd_apply(in, g);
        if (*solve_cmd) return cmd_solve(in, g);
        if (*norm) return cmd_norm(in, g);
        if (*kernel) return cmd_kernel(in, g);
        if (*verify) return cmd_verify(in, g);
        if (*oracle) return cmd_oracle(in, g);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
