// Command-line front end: fidelity checks, optimality certificates,
// Young-diagram tables, the inversion demo, and the Omega cross-check.
//
// Exit codes: 0 success (and, for certify, a valid certificate),
// 1 certificate failure, 2 usage error.
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conjucirc/circuit.hpp"
#include "conjucirc/haar.hpp"
#include "conjucirc/performance.hpp"
#include "conjucirc/young.hpp"

using json = nlohmann::ordered_json;
using namespace conjucirc;

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string theory_rational(int d, int k) {
    return rational_str(Rational(k + 1, d * (d - k)));
}

bool check_dk(int d, int k) {
    if (d < 2 || k < 1 || k > d - 1) {
        std::cerr << "usage error: need d >= 2 and 1 <= k <= d-1 (got d=" << d
                  << ", k=" << k << ")\n";
        return false;
    }
    return true;
}

enum class Format { json, csv, text };

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    return Format::json;
}

void emit(const json& doc, Format format, const std::string& csv_header,
          const std::vector<std::string>& csv_rows,
          const std::string& text_body) {
    switch (format) {
        case Format::json:
            std::cout << doc.dump(2) << "\n";
            break;
        case Format::csv:
            std::cout << csv_header << "\n";
            for (const auto& row : csv_rows) std::cout << row << "\n";
            break;
        case Format::text:
            std::cout << text_body;
            break;
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

int run_fidelity(int d, int k, long trials, std::uint64_t seed, Format format) {
    if (!check_dk(d, k)) return 2;
    double lo = 1.0, hi = 0.0;
    for (long t = 0; t < trials; ++t) {
        CMatrix u = haar_unitary(d, derive_seed(seed, static_cast<std::uint64_t>(t)));
        double f = conjugation_fidelity(d, k, u);
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    json doc{{"d", d},
             {"k", k},
             {"trials", trials},
             {"seed", seed},
             {"theory", theory_fidelity(d, k)},
             {"theory_rational", theory_rational(d, k)},
             {"observed_min", lo},
             {"observed_max", hi}};
    std::ostringstream text;
    text << "conjugation fidelity d=" << d << " k=" << k << ": theory "
         << theory_rational(d, k) << " = " << theory_fidelity(d, k)
         << "\nobserved over " << trials << " Haar samples: [" << fmt(lo) << ", "
         << fmt(hi) << "]\n";
    emit(doc, format, "d,k,trials,seed,theory,observed_min,observed_max",
         {std::to_string(d) + "," + std::to_string(k) + "," +
          std::to_string(trials) + "," + std::to_string(seed) + "," +
          fmt(theory_fidelity(d, k)) + "," + fmt(lo) + "," + fmt(hi)},
         text.str());
    return 0;
}

int run_certify(int d, int k, double tol, Format format) {
    if (!check_dk(d, k)) return 2;
    CertificateReport report = certify(d, k, tol);
    double max_residual = 0.0;
    json residuals = json::object();
    for (const auto& [name, value] : report.feasibility_residuals) {
        residuals[name] = value;
        max_residual = std::max(max_residual, value);
    }
    json doc{{"d", d},
             {"k", k},
             {"primal_value", report.primal_value},
             {"dual_c", rational_str(report.dual_c)},
             {"dual_c_value", static_cast<double>(report.dual_c)},
             {"theory", theory_fidelity(d, k)},
             {"theory_rational", theory_rational(d, k)},
             {"min_eig_gap", report.min_eig_gap},
             {"eigengap_computed", report.eigengap_computed},
             {"feasibility_residuals", residuals},
             {"tol", tol},
             {"valid", report.valid}};
    std::ostringstream text;
    text << "certificate d=" << d << " k=" << k << "\n  primal tr(S Omega) = "
         << fmt(report.primal_value) << "\n  dual c = "
         << rational_str(report.dual_c) << " = "
         << fmt(static_cast<double>(report.dual_c)) << "\n  min eig(c S-hat - Omega) = "
         << (report.eigengap_computed ? fmt(report.min_eig_gap) : "not computed (size cap)")
         << "\n  max feasibility residual = " << fmt(max_residual)
         << "\n  valid: " << (report.valid ? "yes" : "no") << "\n";
    emit(doc, format, "d,k,primal_value,dual_c,min_eig_gap,max_residual,valid",
         {std::to_string(d) + "," + std::to_string(k) + "," +
          fmt(report.primal_value) + "," + rational_str(report.dual_c) + "," +
          fmt(report.min_eig_gap) + "," + fmt(max_residual) + "," +
          (report.valid ? "1" : "0")},
         text.str());
    return report.valid ? 0 : 1;
}

int run_young(int n, int d, Format format) {
    if (n < 1 || d < 1) {
        std::cerr << "usage error: need n >= 1 and d >= 1\n";
        return 2;
    }
    json rows = json::array();
    std::vector<std::string> csv_rows;
    std::ostringstream text;
    text << "lambda |- " << n << " with height <= " << d << "\n";
    for (const Partition& lambda : partitions(n, d)) {
        auto sr = step_representation(lambda);
        Rational closed = c_lambda_closed(lambda, d);
        Rational brute = c_lambda_brute(lambda, d);
        std::ostringstream step;
        step << '(';
        for (std::size_t i = 0; i < sr.pairs.size(); ++i) {
            if (i) step << ',';
            step << sr.pairs[i];
        }
        step << ')';
        rows.push_back(json{{"partition", lambda.parts},
                            {"d_lambda", irrep_dim(lambda).str()},
                            {"m_lambda", multiplicity(lambda, d).str()},
                            {"step_representation", step.str()},
                            {"c_closed", rational_str(closed)},
                            {"c_brute", rational_str(brute)},
                            {"c_value", static_cast<double>(closed)}});
        csv_rows.push_back(lambda.to_string() + "," + irrep_dim(lambda).str() +
                           "," + multiplicity(lambda, d).str() + ",\"" +
                           step.str() + "\"," + rational_str(closed) + "," +
                           rational_str(brute));
        text << "  " << lambda.to_string() << "  d_lambda=" << irrep_dim(lambda)
             << "  m_lambda=" << multiplicity(lambda, d) << "  steps=" << step.str()
             << "  c=" << rational_str(closed) << " (brute " << rational_str(brute)
             << ")\n";
    }
    json doc{{"n", n}, {"d", d}, {"rows", rows}};
    emit(doc, format, "partition,d_lambda,m_lambda,steps,c_closed,c_brute",
         csv_rows, text.str());
    return 0;
}

int run_invert(int d, int k, long samples, std::uint64_t seed, Format format) {
    if (!check_dk(d, k)) return 2;
    CMatrix u = haar_unitary(d, derive_seed(seed, 0xc0ffee));
    InversionResult result = inversion_simulation(d, k, u, samples, seed);
    double expected = 1.0 / (d * d);
    json doc{{"d", d},
             {"k", k},
             {"samples", samples},
             {"seed", seed},
             {"success_rate", result.success_rate},
             {"expected_rate", expected},
             {"successes", result.successes},
             {"conditional_fidelity", result.conditional_fidelity},
             {"theory", theory_fidelity(d, k)},
             {"theory_rational", theory_rational(d, k)}};
    std::ostringstream text;
    text << "inversion demo d=" << d << " k=" << k << ": success rate "
         << fmt(result.success_rate) << " (expected " << fmt(expected)
         << "), conditional fidelity to U^-1 = " << fmt(result.conditional_fidelity)
         << " (theory " << theory_rational(d, k) << ")\n";
    emit(doc, format,
         "d,k,samples,seed,success_rate,expected_rate,conditional_fidelity,theory",
         {std::to_string(d) + "," + std::to_string(k) + "," +
          std::to_string(samples) + "," + std::to_string(seed) + "," +
          fmt(result.success_rate) + "," + fmt(expected) + "," +
          fmt(result.conditional_fidelity) + "," + fmt(theory_fidelity(d, k))},
         text.str());
    return 0;
}

int run_omega(int d, int k, long samples, std::uint64_t seed, Format format) {
    if (!check_dk(d, k)) return 2;
    CMatrix omega = performance_operator(d, k);
    auto mc = monte_carlo_omega(d, k, samples, seed);
    double max_dev = 0.0, max_sigma = 0.0;
    for (long i = 0; i < omega.rows(); ++i)
        for (long j = 0; j < omega.cols(); ++j) {
            double dev = std::abs(mc.mean(i, j) - omega(i, j));
            max_dev = std::max(max_dev, dev);
            max_sigma = std::max(max_sigma, dev / std::max(mc.stderr_(i, j), 1e-12));
        }
    bool pass = max_sigma <= 5.0;
    json doc{{"d", d},
             {"k", k},
             {"mc_samples", samples},
             {"seed", seed},
             {"max_abs_deviation", max_dev},
             {"max_deviation_sigma", max_sigma},
             {"pass_5_sigma", pass}};
    std::ostringstream text;
    text << "Omega cross-check d=" << d << " k=" << k << ": max |MC - exact| = "
         << fmt(max_dev) << " (" << fmt(max_sigma) << " standard errors); "
         << (pass ? "consistent" : "INCONSISTENT") << " at 5 sigma\n";
    emit(doc, format, "d,k,mc_samples,seed,max_abs_deviation,max_deviation_sigma,pass",
         {std::to_string(d) + "," + std::to_string(k) + "," +
          std::to_string(samples) + "," + std::to_string(seed) + "," +
          fmt(max_dev) + "," + fmt(max_sigma) + "," + (pass ? "1" : "0")},
         text.str());
    return pass ? 0 : 1;
}

int run_table(int dmax, Format format) {
    if (dmax < 2) {
        std::cerr << "usage error: need dmax >= 2\n";
        return 2;
    }
    json rows = json::array();
    std::vector<std::string> csv_rows;
    std::ostringstream text;
    text << "optimal average fidelity (k+1)/(d(d-k))\n";
    for (int d = 2; d <= dmax; ++d)
        for (int k = 1; k <= d - 1; ++k) {
            rows.push_back(json{{"d", d},
                                {"k", k},
                                {"theory", theory_fidelity(d, k)},
                                {"theory_rational", theory_rational(d, k)}});
            csv_rows.push_back(std::to_string(d) + "," + std::to_string(k) + "," +
                               theory_rational(d, k) + "," +
                               fmt(theory_fidelity(d, k)));
            text << "  d=" << d << " k=" << k << "  <F> = " << theory_rational(d, k)
                 << " = " << fmt(theory_fidelity(d, k)) << "\n";
        }
    json doc{{"dmax", dmax}, {"rows", rows}};
    emit(doc, format, "d,k,theory_rational,theory", csv_rows, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "conjucirc: optimal circuits for unitary complex conjugation.\n"
        "Algebraic identities are checked at tolerance 1e-9 by default; Monte\n"
        "Carlo quantities use a 3-sigma rule (5 sigma for the Omega entrywise\n"
        "check). CONJUCIRC_SIZE_CAP overrides the operator-side cap (default\n"
        "4096) for the certificate path."};
    app.require_subcommand(1);

    int d = 3, k = 1, n = 4, dmax = 4;
    long trials = 20, samples = 10000, mc_samples = 2000;
    std::uint64_t seed = 2024;
    double tol = 1e-9;
    std::string format_name = "json";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    CLI::App* fid = app.add_subcommand(
        "fidelity", "conjugation fidelity of the circuit on Haar samples");
    fid->add_option("--d", d, "dimension")->required();
    fid->add_option("--k", k, "number of calls")->required();
    fid->add_option("--trials", trials, "Haar samples");
    fid->add_option("--seed", seed, "RNG seed");
    add_format(fid);

    CLI::App* cert = app.add_subcommand(
        "certify", "primal/dual optimality certificate (exit 1 when invalid)");
    cert->add_option("--d", d, "dimension")->required();
    cert->add_option("--k", k, "number of calls")->required();
    cert->add_option("--tol", tol, "certificate tolerance")
        ->check(CLI::PositiveNumber);
    add_format(cert);

    CLI::App* young = app.add_subcommand(
        "young", "per-diagram table: dimensions, multiplicities, c(lambda)");
    young->add_option("--n", n, "number of boxes")->required();
    young->add_option("--d", d, "local dimension (height bound)")->required();
    add_format(young);

    CLI::App* invert = app.add_subcommand(
        "invert", "probabilistic unitary inversion demo");
    invert->add_option("--d", d, "dimension")->required();
    invert->add_option("--k", k, "number of calls")->required();
    invert->add_option("--samples", samples, "measurement trials");
    invert->add_option("--seed", seed, "RNG seed");
    add_format(invert);

    CLI::App* omega = app.add_subcommand(
        "omega", "performance operator vs Monte Carlo cross-check");
    omega->add_option("--d", d, "dimension")->required();
    omega->add_option("--k", k, "number of calls")->required();
    omega->add_option("--mc-samples,--samples", mc_samples, "Haar samples");
    omega->add_option("--seed", seed, "RNG seed");
    add_format(omega);

    CLI::App* table = app.add_subcommand(
        "table", "fidelity table over all (d, k) up to dmax");
    table->add_option("--dmax", dmax, "largest dimension");
    add_format(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Format format = parse_format(format_name);
    try {
        if (app.got_subcommand(fid)) return run_fidelity(d, k, trials, seed, format);
        if (app.got_subcommand(cert)) return run_certify(d, k, tol, format);
        if (app.got_subcommand(young)) return run_young(n, d, format);
        if (app.got_subcommand(invert))
            return run_invert(d, k, samples, seed, format);
        if (app.got_subcommand(omega))
            return run_omega(d, k, mc_samples, seed, format);
        if (app.got_subcommand(table)) return run_table(dmax, format);
    } catch (const std::length_error& e) {
        std::cerr << "size cap exceeded: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
