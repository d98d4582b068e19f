// ampcalc command-line front end.
//
// Subcommands:
//   amp             evaluate a setup expression under a kernel
//   check-rules     randomized combination-rule suite, JSON report
//   check-fe        functional-equation residual suite, JSON report
//   extract-h       Hamiltonian extraction convergence report, JSON
//   nonlinear-demo  consistency-residual sweep of the nonlinear evolver, CSV
//
// Exit codes: 0 pass, 1 check failure, 2 usage or input error.
// Reports go to stdout and are byte-identical for identical flags and
// seeds; wall time is printed to stderr only.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ampcalc/algebra.hpp"
#include "ampcalc/amplitude.hpp"
#include "ampcalc/errors.hpp"
#include "ampcalc/generators.hpp"
#include "ampcalc/kernel.hpp"
#include "ampcalc/lattice.hpp"
#include "ampcalc/random.hpp"
#include "ampcalc/regraduation.hpp"
#include "ampcalc/report.hpp"
#include "ampcalc/schrodinger.hpp"
#include "ampcalc/setup_expr.hpp"
#include "ampcalc/textio.hpp"

namespace {

using namespace ampcalc;

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const std::uint64_t value = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadInput, "bad " + what + " '" + text + "'");
    }
}

//! "lo:hi:n" -> n log-spaced points from lo to hi inclusive.
std::vector<double> parse_log_sweep(const std::string& text) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw Error(ErrorCode::BadInput, "sweep must be lo:hi:n, got '" + text + "'");
    double lo = 0, hi = 0;
    long n = 0;
    try {
        lo = std::stod(text.substr(0, c1));
        hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        n = std::stol(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadInput, "sweep must be lo:hi:n, got '" + text + "'");
    }
    if (!(lo > 0) || !(hi > lo) || n < 2)
        throw Error(ErrorCode::BadInput, "sweep needs 0 < lo < hi and n >= 2");
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        points.push_back(lo * std::pow(hi / lo, static_cast<double>(i) /
                                                    static_cast<double>(n - 1)));
    return points;
}

//! Kernel spec: identity | hadamard | dft | random:<seed> | file:<path>.
StepKernel kernel_from_spec(const std::string& spec, int num_sites) {
    if (spec == "identity") return identity_kernel(num_sites);
    if (spec == "hadamard") {
        if (num_sites != 2)
            throw Error(ErrorCode::GridMismatch, "hadamard kernel is 2-site, grid has " +
                                                     std::to_string(num_sites));
        return hadamard_kernel();
    }
    if (spec == "dft") return dft_kernel(num_sites);
    if (spec.rfind("random:", 0) == 0) {
        Rng rng(parse_u64(spec.substr(7), "kernel seed"));
        return random_kernel(num_sites, rng);
    }
    if (spec.rfind("file:", 0) == 0) {
        StepKernel kernel = load_kernel_file(spec.substr(5));
        if (kernel.num_sites() != num_sites)
            throw Error(ErrorCode::GridMismatch,
                        "kernel file is " + std::to_string(kernel.num_sites()) +
                            "-site, grid has " + std::to_string(num_sites));
        return kernel;
    }
    throw Error(ErrorCode::BadInput, "unknown kernel spec '" + spec + "'");
}

//! Grid size for `amp`: explicit flag, else fixed by the kernel spec, else
//! the smallest grid containing every referenced site.
int infer_sites(const std::string& spec, const SetupExpr& expr, int sites_flag) {
    if (sites_flag > 0) return sites_flag;
    if (spec == "hadamard") return 2;
    if (spec.rfind("file:", 0) == 0) return load_kernel_file(spec.substr(5)).num_sites();
    return max_referenced_site(expr) + 1;
}

int run_amp(const std::string& expr_text, const std::string& kernel_spec,
            const std::string& engine, double tol, int sites_flag, std::uint64_t budget) {
    const SetupExprPtr ast = parse_setup_expr(expr_text);
    const int sites = infer_sites(kernel_spec, *ast, sites_flag);
    const StepKernel kernel = kernel_from_spec(kernel_spec, sites);
    const Setup setup = eval_setup_expr(*ast, Grid(sites));

    std::optional<Amplitude> from_paths, from_matrix;
    if (engine == "paths" || engine == "both")
        from_paths = amplitude_paths(setup, kernel, budget);
    if (engine == "matrix" || engine == "both")
        from_matrix = amplitude_matrix(setup, kernel);

    if (from_paths) std::cout << "amplitude[paths] = " << format_complex(*from_paths, 12) << "\n";
    if (from_matrix)
        std::cout << "amplitude[matrix] = " << format_complex(*from_matrix, 12) << "\n";
    if (from_paths && from_matrix) {
        const double discrepancy = std::abs(*from_paths - *from_matrix);
        const double scale =
            std::max({1.0, std::abs(*from_paths), std::abs(*from_matrix)});
        std::cout << "discrepancy = " << format_double(discrepancy) << "\n";
        if (discrepancy > tol * scale) return 1;
    }
    return 0;
}

int run_check_rules(int sites, int max_steps, int cases, std::uint64_t seed,
                    std::string kernel_spec, int max_filters, double tol) {
    if (kernel_spec.empty()) kernel_spec = "random:" + std::to_string(seed);
    const StepKernel kernel = kernel_from_spec(kernel_spec, sites);
    const Grid grid(sites);
    const SetupGenOptions opts{sites, max_steps, max_filters};
    Rng rng(seed);

    auto psi = [&](const Setup& s) { return amplitude_matrix(s, kernel); };

    std::vector<double> sum_res, prod_res, or_assoc, and_assoc, dist_later, dist_earlier,
        full_filter_res, resolution_res;
    for (int i = 0; i < cases; ++i) {
        {
            auto [a, b] = random_joinable_pair(opts, rng);
            sum_res.push_back(check_sum_rule(a, b, kernel));
        }
        {
            auto [later, earlier] = random_chainable_pair(opts, rng);
            prod_res.push_back(check_product_rule(later, earlier, kernel));
        }
        if (sites >= 3) {
            auto [a, b, c] = random_joinable_triple(opts, rng);
            const Setup lhs = or_join(or_join(a, b).setup, c).setup;
            const Setup rhs = or_join(a, or_join(b, c).setup).setup;
            double r = (lhs == rhs) ? 0.0 : 1.0;
            r = std::max(r, std::abs(psi(lhs) - psi(a) - psi(b) - psi(c)));
            or_assoc.push_back(r);
        }
        {
            auto [a, b, c] = random_chainable_triple(opts, rng);
            const Setup lhs = and_compose(and_compose(a, b), c);
            const Setup rhs = and_compose(a, and_compose(b, c));
            double r = (lhs == rhs) ? 0.0 : 1.0;
            r = std::max(r, std::abs(psi(lhs) - psi(a) * psi(b) * psi(c)));
            and_assoc.push_back(r);
        }
        {
            const DistributiveFamily fam = random_distributive_family(opts, rng, true);
            const Setup join = or_join(fam.left, fam.right).setup;
            const Setup lhs = and_compose(fam.solo, join);
            const Setup rhs = or_join(and_compose(fam.solo, fam.left),
                                      and_compose(fam.solo, fam.right))
                                  .setup;
            double r = (lhs == rhs) ? 0.0 : 1.0;
            r = std::max(r, std::abs(psi(lhs) - psi(and_compose(fam.solo, fam.left)) -
                                     psi(and_compose(fam.solo, fam.right))));
            dist_later.push_back(r);
        }
        {
            const DistributiveFamily fam = random_distributive_family(opts, rng, false);
            const Setup join = or_join(fam.left, fam.right).setup;
            const Setup lhs = and_compose(join, fam.solo);
            const Setup rhs = or_join(and_compose(fam.left, fam.solo),
                                      and_compose(fam.right, fam.solo))
                                  .setup;
            double r = (lhs == rhs) ? 0.0 : 1.0;
            r = std::max(r, std::abs(psi(lhs) - psi(and_compose(fam.left, fam.solo)) -
                                     psi(and_compose(fam.right, fam.solo))));
            dist_earlier.push_back(r);
        }
        {
            const Setup s = random_setup(opts, rng);
            const Amplitude base = psi(s);
            std::vector<Filter> filters = s.filters();
            std::vector<int> all_sites;
            for (int x = 0; x < sites; ++x) all_sites.push_back(x);
            for (int t = s.source().time + 1; t < s.sink().time; ++t)
                if (!s.filter_at(t)) filters.emplace_back(grid, t, all_sites);
            const Setup covered(grid, s.source(), std::move(filters), s.sink());
            full_filter_res.push_back(std::abs(psi(covered) - base));
        }
        {
            Setup s = random_setup(opts, rng);
            while (s.num_steps() < 2) s = random_setup(opts, rng);
            const Amplitude base = psi(s);
            double worst = 0.0;
            for (int t = s.source().time + 1; t < s.sink().time; ++t) {
                Amplitude total = 0.0;
                for (const auto& [later, earlier] : slice_decompose(s, t))
                    total += psi(later) * psi(earlier);
                worst = std::max(worst, std::abs(total - base));
            }
            resolution_res.push_back(worst);
        }
    }

    RunReport report;
    report.suite = "check-rules";
    report.add_param("kernel", kernel_spec);
    report.add_param("seed", static_cast<long long>(seed));
    report.add_param("sites", static_cast<long long>(sites));
    report.add_param("max_steps", static_cast<long long>(max_steps));
    report.add_param("max_filters", static_cast<long long>(max_filters));
    report.add_param("cases", static_cast<long long>(cases));
    report.checks.push_back(CheckResult::from_residuals("sum_rule", sum_res, tol));
    report.checks.push_back(CheckResult::from_residuals("product_rule", prod_res, tol));
    report.checks.push_back(CheckResult::from_residuals("or_associativity", or_assoc, tol));
    report.checks.push_back(CheckResult::from_residuals("and_associativity", and_assoc, tol));
    report.checks.push_back(
        CheckResult::from_residuals("distributivity_later_factor", dist_later, tol));
    report.checks.push_back(
        CheckResult::from_residuals("distributivity_earlier_factor", dist_earlier, tol));
    report.checks.push_back(
        CheckResult::from_residuals("full_filter_invariance", full_filter_res, tol));
    report.checks.push_back(
        CheckResult::from_residuals("resolution_of_identity", resolution_res, tol));
    std::cout << report.to_json();
    return report.all_pass() ? 0 : 1;
}

void add_sum_family_checks(RunReport& report, const Regraduator& reg, int samples, Rng& rng) {
    const std::vector<Triple> triples = sample_triples(reg, samples, rng);
    std::vector<double> round_trip;
    for (const Triple& t : triples)
        for (const Complex& u : t)
            round_trip.push_back(std::abs(reg.inverse(reg.forward(u)) - u));
    report.checks.push_back(
        CheckResult::from_residuals(reg.name + "_round_trip", round_trip, 1e-12));

    const SweepStats stats = check_sum_associativity(build_sum_rule(reg), triples);
    CheckResult assoc;
    assoc.name = reg.name + "_associativity";
    assoc.cases = stats.evaluated;
    assoc.max_residual = stats.max_residual;
    assoc.mean_residual = stats.mean_residual;
    assoc.tolerance = 1e-9;
    assoc.pass = stats.max_residual <= assoc.tolerance;
    report.checks.push_back(assoc);
    report.add_param(reg.name + "_skipped", static_cast<long long>(stats.skipped));
}

void add_zeta_checks(RunReport& report, int samples, Rng& rng) {
    const ProductRule rule = build_product_rule(ProductRep(Complex(1.0, 1.0), 2.0));
    std::vector<std::array<Complex, 2>> pairs;
    for (int i = 0; i < samples; ++i)
        pairs.push_back({Complex(rng.uniform(0.1, 2.0), 0.0), Complex(rng.uniform(0.1, 2.0), 0.0)});
    const SweepStats branch = rule.branch_agreement(pairs);
    CheckResult agreement;
    agreement.name = "zeta_branch_agreement";
    agreement.cases = branch.evaluated;
    agreement.max_residual = branch.max_residual;
    agreement.mean_residual = branch.mean_residual;
    agreement.tolerance = 1e-12;
    agreement.pass = branch.max_residual <= agreement.tolerance;
    report.checks.push_back(agreement);
    report.add_param("zeta_branch_escapes", static_cast<long long>(branch.skipped));

    std::vector<double> assoc, distrib;
    auto closed = [&](Complex u, Complex v) { return rule.closed_form(u, v); };
    for (int i = 0; i < samples; ++i) {
        const Complex u = rng.complex_in_disk(1.5);
        const Complex v = rng.complex_in_disk(1.5);
        const Complex w = rng.complex_in_disk(1.5);
        assoc.push_back(std::abs(closed(closed(u, v), w) - closed(u, closed(v, w))));
        distrib.push_back(std::abs(closed(u, v + w) - closed(u, v) - closed(u, w)));
    }
    report.checks.push_back(
        CheckResult::from_residuals("product_associativity", assoc, 1e-14));
    report.checks.push_back(
        CheckResult::from_residuals("product_distributivity", distrib, 1e-14));
}

void add_broken_sum_checks(RunReport& report, int samples, Rng& rng) {
    const Regraduator id = identity_regraduator();
    const SweepStats stats =
        check_sum_associativity(broken_sum_rule(), sample_triples(id, samples, rng));
    CheckResult control;
    control.name = "broken_sum_associativity";
    control.cases = stats.evaluated;
    control.max_residual = stats.max_residual;
    control.mean_residual = stats.mean_residual;
    control.tolerance = 1e-3;
    control.require_above = true;
    control.pass = stats.max_residual > control.tolerance;
    report.checks.push_back(control);
}

void add_broken_product_checks(RunReport& report, int samples, Rng& rng) {
    std::vector<double> assoc, distrib;
    const auto nonassoc = broken_product_nonassociative();
    const auto nondistrib = broken_product_nondistributive();
    for (int i = 0; i < samples; ++i) {
        const Complex u = rng.complex_in_disk(1.5);
        const Complex v = rng.complex_in_disk(1.5);
        const Complex w = rng.complex_in_disk(1.5);
        assoc.push_back(
            std::abs(nonassoc(nonassoc(u, v), w) - nonassoc(u, nonassoc(v, w))));
        distrib.push_back(
            std::abs(nondistrib(u, v + w) - nondistrib(u, v) - nondistrib(u, w)));
    }
    report.checks.push_back(CheckResult::from_residuals("broken_product_associativity",
                                                        assoc, 1e-3, true));
    report.checks.push_back(CheckResult::from_residuals("broken_product_distributivity",
                                                        distrib, 1e-3, true));
}

int run_check_fe(const std::string& family, int samples, std::uint64_t seed) {
    Rng rng(seed);
    RunReport report;
    report.suite = "check-fe";
    report.add_param("family", family);
    report.add_param("samples", static_cast<long long>(samples));
    report.add_param("seed", static_cast<long long>(seed));

    const bool all = family == "all";
    if (all || family == "identity") add_sum_family_checks(report, identity_regraduator(), samples, rng);
    if (all || family == "linear")
        add_sum_family_checks(report, linear_regraduator(Complex(2.0, 0.0)), samples, rng);
    if (all || family == "cubic") add_sum_family_checks(report, odd_power_regraduator(1), samples, rng);
    if (all || family == "quintic") add_sum_family_checks(report, odd_power_regraduator(2), samples, rng);
    if (all || family == "zeta") add_zeta_checks(report, samples, rng);
    if (all || family == "broken-sum") add_broken_sum_checks(report, samples, rng);
    if (all || family == "broken-product") add_broken_product_checks(report, samples, rng);

    std::cout << report.to_json();
    return report.all_pass() ? 0 : 1;
}

int run_extract_h(const std::string& ham_path, const std::string& sweep, double hbar) {
    const Matrix target = read_matrix_file(ham_path);
    const Hamiltonian h{target, hbar};
    const KernelFamily family = [&](double e) { return kernel_from_hamiltonian(h, e); };
    const std::vector<double> epses = parse_log_sweep(sweep);

    std::vector<double> log_eps, log_plain, log_rich;
    double smallest_eps_rich_err = 0.0;
    std::string eps_json = "[", plain_json = "[", rich_json = "[";
    for (std::size_t i = 0; i < epses.size(); ++i) {
        const HamiltonianExtraction ex = extract_hamiltonian(family, epses[i], hbar);
        const double plain_err = (ex.plain.matrix - target).norm();
        const double rich_err = (ex.richardson.matrix - target).norm();
        if (i == 0) smallest_eps_rich_err = rich_err;
        log_eps.push_back(std::log(epses[i]));
        log_plain.push_back(std::log(std::max(plain_err, 1e-300)));
        log_rich.push_back(std::log(std::max(rich_err, 1e-300)));
        const char* sep = i ? ", " : "";
        eps_json += sep + format_double(epses[i]);
        plain_json += sep + format_double(plain_err);
        rich_json += sep + format_double(rich_err);
    }
    eps_json += "]";
    plain_json += "]";
    rich_json += "]";

    const double plain_slope = least_squares_slope(log_eps, log_plain);
    const double rich_slope = least_squares_slope(log_eps, log_rich);

    RunReport report;
    report.suite = "extract-h";
    report.add_param("hamiltonian", ham_path);
    report.add_param("hbar", hbar);
    report.params.emplace_back("eps", eps_json);
    report.params.emplace_back("plain_error", plain_json);
    report.params.emplace_back("richardson_error", rich_json);
    report.add_param("plain_slope", plain_slope);
    report.add_param("richardson_slope", rich_slope);

    CheckResult plain_order;
    plain_order.name = "plain_convergence_order";
    plain_order.cases = static_cast<int>(epses.size());
    plain_order.max_residual = std::abs(plain_slope - 1.0);
    plain_order.mean_residual = plain_order.max_residual;
    plain_order.tolerance = 0.1;
    plain_order.pass = plain_order.max_residual <= plain_order.tolerance;
    report.checks.push_back(plain_order);

    CheckResult rich_order = plain_order;
    rich_order.name = "richardson_convergence_order";
    rich_order.max_residual = std::abs(rich_slope - 2.0);
    rich_order.mean_residual = rich_order.max_residual;
    rich_order.pass = rich_order.max_residual <= rich_order.tolerance;
    report.checks.push_back(rich_order);

    CheckResult round_trip;
    round_trip.name = "round_trip_at_smallest_eps";
    round_trip.cases = 1;
    round_trip.max_residual = smallest_eps_rich_err;
    round_trip.mean_residual = smallest_eps_rich_err;
    round_trip.tolerance = 1e-6;
    round_trip.pass = smallest_eps_rich_err <= round_trip.tolerance;
    report.checks.push_back(round_trip);

    std::cout << report.to_json();
    return report.all_pass() ? 0 : 1;
}

int run_nonlinear_demo(const std::string& sweep, std::uint64_t seed, int sites,
                       const std::string& kernel_spec, int steps) {
    const StepKernel kernel = kernel_from_spec(kernel_spec, sites);
    Rng rng(seed);
    WaveFunction psi{Vector::Zero(sites), 0};
    const int first = rng.uniform_int(0, sites - 1);
    int second = rng.uniform_int(0, sites - 2);
    if (second >= first) ++second;
    auto draw = [&] {
        const double mag = rng.uniform(0.5, 1.0);
        const double angle = rng.uniform(0.0, 2.0 * M_PI);
        return std::polar(mag, angle);
    };
    psi.values[first] = draw();
    psi.values[second] = draw();

    const std::vector<double> lambdas = parse_log_sweep(sweep);
    std::vector<double> log_lambda, log_residual;
    std::cout << "lambda,consistency_residual\n";
    for (double lambda : lambdas) {
        const Evolver evolver = make_nonlinear_evolver(kernel, lambda);
        const double residual = consistency_residual(evolver, psi, steps);
        std::cout << format_double(lambda) << "," << format_double(residual) << "\n";
        log_lambda.push_back(std::log(lambda));
        log_residual.push_back(std::log(std::max(residual, 1e-300)));
    }
    const double slope = least_squares_slope(log_lambda, log_residual);
    std::cout << "# loglog_slope = " << format_double(slope) << "\n";
    return std::abs(slope - 1.0) <= 0.1 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-lattice amplitude calculus toolkit"};
    app.require_subcommand(1);

    std::string amp_expr, amp_kernel, amp_engine = "matrix";
    double amp_tol = 1e-10;
    int amp_sites = 0;
    std::uint64_t amp_budget = kDefaultPathBudget;
    CLI::App* amp = app.add_subcommand("amp", "evaluate a setup expression");
    amp->add_option("--expr", amp_expr, "setup expression")->required();
    amp->add_option("--kernel", amp_kernel, "identity|hadamard|dft|random:<seed>|file:<path>")
        ->required();
    amp->add_option("--engine", amp_engine, "paths|matrix|both")
        ->check(CLI::IsMember({"paths", "matrix", "both"}));
    amp->add_option("--tol", amp_tol, "relative tolerance for --engine both");
    amp->add_option("--sites", amp_sites, "grid size override");
    amp->add_option("--budget", amp_budget, "path-count budget for the paths engine");

    int cr_sites = 3, cr_max_steps = 5, cr_cases = 200, cr_max_filters = 3;
    std::uint64_t cr_seed = 0;
    std::string cr_kernel;
    double cr_tol = 1e-12;
    CLI::App* check_rules =
        app.add_subcommand("check-rules", "randomized combination-rule suite");
    check_rules->add_option("--sites", cr_sites, "grid size")->check(CLI::PositiveNumber);
    check_rules->add_option("--max-steps", cr_max_steps, "max time extent")
        ->check(CLI::PositiveNumber);
    check_rules->add_option("--cases", cr_cases, "cases per check")->check(CLI::PositiveNumber);
    check_rules->add_option("--seed", cr_seed, "generator seed");
    check_rules->add_option("--kernel", cr_kernel, "kernel spec (default random:<seed>)");
    check_rules->add_option("--max-filters", cr_max_filters, "max filters per setup");
    check_rules->add_option("--tol", cr_tol, "absolute residual tolerance");

    std::string fe_family = "all";
    int fe_samples = 1000;
    std::uint64_t fe_seed = 0;
    CLI::App* check_fe = app.add_subcommand("check-fe", "functional-equation residual suite");
    check_fe->add_option("--family", fe_family,
                         "identity|linear|cubic|quintic|zeta|broken-sum|broken-product|all")
        ->check(CLI::IsMember({"identity", "linear", "cubic", "quintic", "zeta", "broken-sum",
                               "broken-product", "all"}));
    check_fe->add_option("--samples", fe_samples, "sample triples")->check(CLI::PositiveNumber);
    check_fe->add_option("--seed", fe_seed, "sampler seed");

    std::string eh_ham, eh_sweep;
    double eh_hbar = 1.0;
    CLI::App* extract_h = app.add_subcommand("extract-h", "Hamiltonian extraction convergence");
    extract_h->add_option("--hamiltonian", eh_ham, "matrix file")->required();
    extract_h->add_option("--eps-sweep", eh_sweep, "lo:hi:n log-spaced")->required();
    extract_h->add_option("--hbar", eh_hbar, "scale constant")->check(CLI::PositiveNumber);

    std::string nd_sweep, nd_kernel = "hadamard";
    std::uint64_t nd_seed = 0;
    int nd_sites = 2, nd_steps = 1;
    CLI::App* nonlinear =
        app.add_subcommand("nonlinear-demo", "consistency-residual sweep, CSV");
    nonlinear->add_option("--lambda-sweep", nd_sweep, "lo:hi:n log-spaced")->required();
    nonlinear->add_option("--seed", nd_seed, "state seed");
    nonlinear->add_option("--sites", nd_sites, "grid size")->check(CLI::Range(2, 64));
    nonlinear->add_option("--kernel", nd_kernel, "kernel spec");
    nonlinear->add_option("--steps", nd_steps, "evolution steps")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (*amp)
            rc = run_amp(amp_expr, amp_kernel, amp_engine, amp_tol, amp_sites, amp_budget);
        else if (*check_rules)
            rc = run_check_rules(cr_sites, cr_max_steps, cr_cases, cr_seed, cr_kernel,
                                 cr_max_filters, cr_tol);
        else if (*check_fe)
            rc = run_check_fe(fe_family, fe_samples, fe_seed);
        else if (*extract_h)
            rc = run_extract_h(eh_ham, eh_sweep, eh_hbar);
        else if (*nonlinear)
            rc = run_nonlinear_demo(nd_sweep, nd_seed, nd_sites, nd_kernel, nd_steps);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "# wall_time_s = %.3f\n", elapsed.count());
    return rc;
}
