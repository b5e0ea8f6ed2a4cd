#include "cli.hpp"

#include "report.hpp"
#include "shcalc/grr.hpp"
#include "shcalc/localization.hpp"

#include <CLI11.hpp>

#include <future>
#include <ostream>

namespace shcalc::cli {

namespace {

using report::json;

CoefficientField parse_field(const std::string& s) {
    return s == "gf2" ? CoefficientField::GF2 : CoefficientField::Rationals;
}

json rmatrix_json(int m, int n, CoefficientField field) {
    const LambdaMatrix r = build_r_matrix(m, n, field);
    json unknown = json::array();
    for (auto [i, j] : unknown_entry_positions(m, n, field)) unknown.push_back({i, j});
    return {{"m", m},
            {"n", n},
            {"N", minimal_chern_number(m, n)},
            {"field", to_string(field)},
            {"regime", to_string(classify_regime(m, n).kind)},
            {"basis", "omega^m, ..., omega, 1"},
            {"r_matrix", report::matrix_json(r)},
            {"unknown_entries", unknown}};
}

json tau_json(int n, CoefficientField field) {
    const TauTable tau = tau_table(n, field);
    json coeffs = json::array();
    Rational sum = 0;
    for (const auto& c : tau.coeffs) {
        coeffs.push_back(c.get_str());
        sum += c;
    }
    return {{"n", n}, {"field", to_string(field)}, {"tau", coeffs}, {"sum", to_field(sum, field).get_str()}};
}

json localize_json(int m, int n, int a, int trials, std::uint64_t seed) {
    const Rational expected = subdiagonal_entry(m, n, a, CoefficientField::Rationals);
    json runs = json::array();
    bool all_equal = true;
    std::optional<Rational> first;
    for (int k = 0; k < trials; ++k) {
        const WeightVector w = sample_weights(m, seed + static_cast<std::uint64_t>(k));
        const Rational value = localize_Aa(m, n, a, w);
        if (!first) first = value;
        all_equal = all_equal && value == *first;
        json weights = json::array();
        for (const auto& x : w.alphas) weights.push_back(x.get_str());
        runs.push_back({{"seed", seed + static_cast<std::uint64_t>(k)}, {"weights", weights}, {"value", value.get_str()}});
    }
    const bool integral = first && first->get_den() == 1;
    return {{"m", m},
            {"n", n},
            {"a", a},
            {"expected", expected.get_str()},
            {"trials", runs},
            {"weight_independent", all_equal},
            {"integral", integral},
            {"matches_tau", all_equal && first && *first == expected}};
}

json grr_json() {
    const BlowupSurfaceRing ring = p1xp1_blown_up_twice();
    const DivisorClass z = ring.pullback({-1, -1});
    const GrrIntegrals in = grr_integrals(ring, z);
    const Rational chi = grr_chi(ring, z);
    const Rational chi_o = grr_chi(ring, ring.pullback({0, 0}));
    return {{"surface", "Bl(P1xP1, 2 pts)"},
            {"z", "pi^*(-1,-1)"},
            {"c2", in.c2},
            {"c1_squared", in.c1_squared},
            {"c1_z", in.c1_z},
            {"z_squared", in.z_squared},
            {"chi", chi.get_str()},
            {"deg_obs", obstruction_degree_O11()},
            {"chi_O", chi_o.get_str()}};
}

json table_json(int max_m, CoefficientField field) {
    std::vector<std::pair<int, int>> pairs;
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= 2 * m + 2; ++n) {
            const Regime reg = classify_regime(m, n);
            if (reg.kind != RegimeKind::Unsupported && reg.exact_mode) pairs.emplace_back(m, n);
        }
    std::vector<std::future<json>> rows;
    rows.reserve(pairs.size());
    for (auto [m, n] : pairs)
        rows.push_back(std::async(std::launch::async, [m = m, n = n, field] {
            const ShResult res = compute_sh(m, n, field);
            const RingPresentation* sh = res.sh();
            return json{{"m", m},
                        {"n", n},
                        {"N", res.minimal_chern},
                        {"regime", to_string(res.regime.kind)},
                        {"qh", res.qh().to_string()},
                        {"sh", res.sh_kind == ShKind::ZeroRing ? std::string("0") : sh->to_string()},
                        {"sh_rank", *res.sh_rank},
                        {"diagnostics_pass", res.all_diagnostics_pass()}};
        }));
    json out = json::array();
    for (auto& f : rows) out.push_back(f.get());
    return {{"field", to_string(field)}, {"rows", out}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum and symplectic cohomology of O(-n) -> P^m", "shcalc"};
    app.require_subcommand(1);

    int m = 0, n = 0, a = 0, trials = 3, max_m = 8;
    std::uint64_t seed = 0;
    std::string field = "q", format = "json";
    const auto field_check = CLI::IsMember({"q", "gf2"});

    auto* compute = app.add_subcommand("compute", "QH/SH presentations with diagnostics");
    compute->add_option("--m", m, "Dimension of the base P^m")->required()->check(CLI::PositiveNumber);
    compute->add_option("--n", n, "Negativity n of O(-n)")->required()->check(CLI::PositiveNumber);
    compute->add_option("--field", field, "Coefficient field")->check(field_check);
    compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    compute->add_option("--seed", seed, "Seed for the localization cross-check weights");

    auto* rmatrix = app.add_subcommand("rmatrix", "The r-matrix in the basis omega^m, ..., 1");
    rmatrix->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    rmatrix->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    rmatrix->add_option("--field", field)->check(field_check);

    auto* tau = app.add_subcommand("tau", "Coefficients tau_{a,n}");
    tau->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    tau->add_option("--field", field)->check(field_check);

    auto* localize = app.add_subcommand("localize", "Fixed-point evaluation of A_a");
    localize->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    localize->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    localize->add_option("--a", a)->required()->check(CLI::NonNegativeNumber);
    localize->add_option("--trials", trials)->check(CLI::PositiveNumber);
    localize->add_option("--seed", seed);

    auto* grr = app.add_subcommand("grr", "Riemann-Roch integrals on Bl(P1xP1, 2 pts) and deg(Obs)");

    auto* table = app.add_subcommand("table", "QH/SH for every exact-mode pair up to --max-m");
    table->add_option("--max-m", max_m)->required()->check(CLI::PositiveNumber);
    table->add_option("--field", field)->check(field_check);

    std::vector<std::string> argv_store{"shcalc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidArguments;
    }

    try {
        if (*compute) {
            const json result = report::result_json(compute_sh(m, n, parse_field(field), seed));
            out << (format == "text" ? report::result_text(result) : result.dump(2) + "\n");
        } else if (*rmatrix) {
            out << rmatrix_json(m, n, parse_field(field)).dump(2) << "\n";
        } else if (*tau) {
            out << tau_json(n, parse_field(field)).dump(2) << "\n";
        } else if (*localize) {
            out << localize_json(m, n, a, trials, seed).dump(2) << "\n";
        } else if (*grr) {
            out << grr_json().dump(2) << "\n";
        } else if (*table) {
            out << table_json(max_m, parse_field(field)).dump(2) << "\n";
        }
    } catch (const UnsupportedRegime& e) {
        err << "unsupported: " << e.what() << "\n";
        return kUnsupportedRegime;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidArguments;
    }
    return kSuccess;
}

}  // namespace shcalc::cli
