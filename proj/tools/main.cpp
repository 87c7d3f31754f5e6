// torus: command-line front end. Prints a JSON envelope (or CSV with --csv) on stdout;
// errors go to stderr as "CODE: message" with a nonzero exit status.

#include "torus/alexander.hpp"
#include "torus/covers.hpp"
#include "torus/distribution.hpp"
#include "torus/error.hpp"
#include "torus/iwasawa.hpp"
#include "torus/moments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace torus;

constexpr const char* kVersion = "0.1.0";

json big(const Integer& n) { return n.get_str(); }
json big(const Rational& r) { return r.get_str(); }

json big_list(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(big(v));
    }
    return out;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(item);
    }
    if (!text.empty() && text.back() == ',') {
        parts.emplace_back();
    }
    return parts;
}

Integer parse_integer(std::string s) {
    const std::size_t sign = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == sign || s.find_first_not_of("0123456789", sign) != std::string::npos) {
        throw Error(Errc::InvalidArgument, "malformed integer '" + s + "'");
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    for (const auto& item : split_commas(text)) {
        out.push_back(to_int64(parse_integer(item)));
    }
    return out;
}

IntPolynomial parse_poly(const std::string& text) {
    std::vector<Integer> c;
    for (const auto& item : split_commas(text)) {
        c.push_back(parse_integer(item));
    }
    return IntPolynomial(std::move(c));
}

struct Output {
    bool csv = false;
};

void emit(const std::string& command, json inputs, json results) {
    json env;
    env["schema"] = 1;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["results"] = std::move(results);
    env["version"] = kVersion;
    std::cout << env.dump(2) << '\n';
}

json params_json(const TorusParams& t) {
    return {{"p", t.p}, {"q", t.q}, {"d", t.d}, {"p_prime", t.p_prime}, {"q_prime", t.q_prime}, {"L", t.L}};
}

// ---- invariant ----

struct InvariantArgs {
    std::int64_t p = 0, q = 0;
    std::int64_t max_ell = 13;
};

void cmd_invariant(const InvariantArgs& a, const Output& out) {
    const TorusParams t = torus_params(a.p, a.q);
    const IntPolynomial delta = alexander_poly(t);
    const CycFactorization fac = cyclotomic_multiplicities(t);
    json factors = json::object();
    for (const auto& [r, m] : fac.entries) {
        factors[std::to_string(r)] = m;
    }
    json colorings = json::array();
    for (std::int64_t ell = 2; ell <= a.max_ell; ++ell) {
        if (!is_prime(Integer(static_cast<long>(ell)))) {
            continue;
        }
        colorings.push_back({{"ell", ell},
                             {"colorable", ell_colorable(t, Integer(static_cast<long>(ell)))},
                             {"zero_order_at_minus_one", coloring_zero_order(t, Integer(static_cast<long>(ell)))}});
    }
    if (out.csv) {
        std::cout << "ell,colorable,zero_order_at_minus_one\n";
        for (const auto& row : colorings) {
            std::cout << row["ell"] << ',' << (row["colorable"].get<bool>() ? "true" : "false") << ','
                      << row["zero_order_at_minus_one"] << '\n';
        }
        return;
    }
    json results{{"params", params_json(t)},
                 {"coeffs", big_list(delta.coeffs())},
                 {"degree", delta.degree()},
                 {"polynomial", delta.to_string('t')},
                 {"cyclotomic_multiplicities", factors},
                 {"determinant", big(determinant(t))},
                 {"colorings", colorings}};
    emit("invariant", {{"p", a.p}, {"q", a.q}, {"max_ell", a.max_ell}}, std::move(results));
}

// ---- moments ----

struct PairArgs {
    std::int64_t p = 0, q = 0;
};

void cmd_moments(const PairArgs& a, const Output& out) {
    const TorusParams t = torus_params(a.p, a.q);
    const MomentRecord rec = moment_record(t);
    if (out.csv) {
        std::cout << "m,S_m\n";
        for (std::size_t m = 0; m < rec.values.size(); ++m) {
            std::cout << m << ',' << rec.values[m].get_str() << '\n';
        }
        return;
    }
    const auto [mean, variance] = mean_variance(rec);
    json residues = json::array();
    for (const auto& [xi, r] : residue_table(t).entries) {
        residues.push_back({{"root", std::to_string(xi.numerator()) + "/" + std::to_string(xi.order())},
                            {"residue", complex_json(r)}});
    }
    json results{{"params", params_json(t)},
                 {"period", rec.period},
                 {"values", big_list(rec.values)},
                 {"mean", big(mean)},
                 {"variance", big(variance)},
                 {"residues", residues},
                 {"parseval_gap", parseval_check(t)}};
    emit("moments", {{"p", a.p}, {"q", a.q}}, std::move(results));
}

// ---- scan ----

struct ScanArgs {
    std::int64_t X = 0;
    std::string family = "coprime";
    std::string arc = "[0,1]";
    std::string per_pair;
    std::optional<std::int64_t> freq;
    unsigned jobs = 1;
};

void cmd_scan(const ScanArgs& a, const Output& out) {
    const Family family = parse_family(a.family);
    json inputs{{"X", a.X}, {"family", family_name(family)}};
    if (a.freq) {
        if (family != Family::KnotsCoprime) {
            throw Error(Errc::InvalidArgument, "--freq applies to the coprime family");
        }
        inputs["freq"] = *a.freq;
        const Rational f = frequency_Fr(a.X, *a.freq, a.jobs);
        const Rational limit = frequency_limit(*a.freq);
        const Rational local = frequency_local_density(*a.freq);
        json results{{"r", *a.freq},
                     {"F_r", big(f)},
                     {"F_r_value", f.get_d()},
                     {"limit", big(limit)},
                     {"limit_value", limit.get_d()},
                     {"local_density", big(local)},
                     {"local_density_value", local.get_d()}};
        if (out.csv) {
            std::cout << "r,F_r,limit,local_density\n"
                      << *a.freq << ',' << f.get_d() << ',' << limit.get_d() << ',' << local.get_d() << '\n';
            return;
        }
        emit("scan", std::move(inputs), std::move(results));
        return;
    }
    const Arc arc = parse_arc(a.arc);
    inputs["arc"] = arc.to_string();
    const bool want_rows = !a.per_pair.empty() || out.csv;
    const ScanReport rep = scan(a.X, family, arc, ScanOptions{a.jobs, want_rows});

    const auto write_rows = [&](std::ostream& os) {
        os << "p,q,d,roots_total,roots_in_arc\n";
        for (const auto& r : rep.rows) {
            os << r.p << ',' << r.q << ',' << r.d << ',' << r.roots_total.get_str() << ','
               << r.roots_in_arc.get_str() << '\n';
        }
    };
    if (!a.per_pair.empty()) {
        std::ofstream file(a.per_pair);
        if (!file) {
            throw Error(Errc::InvalidArgument, "cannot open '" + a.per_pair + "' for writing");
        }
        write_rows(file);
        inputs["per_pair"] = a.per_pair;
    }
    if (out.csv) {
        write_rows(std::cout);
        return;
    }
    json results{{"t_count", big(rep.t_count)},
                 {"omega_count", big(rep.omega_count)},
                 {"arc_count", big(rep.arc_count)},
                 {"predicted_ratio", big(rep.predicted_ratio)}};
    if (rep.observed_ratio) {
        results["observed_ratio"] = big(*rep.observed_ratio);
        results["observed_ratio_value"] = rep.observed_ratio->get_d();
    } else {
        results["observed_ratio"] = nullptr;
        results["observed_ratio_value"] = nullptr;
    }
    emit("scan", std::move(inputs), std::move(results));
}

// ---- tower ----

struct TowerArgs {
    std::int64_t p = 0, q = 0;
    std::string z;
    std::string ell = "2";
    std::optional<std::int64_t> n;
};

json invariants_json(const IwasawaInvariants& inv) {
    return {{"mu", inv.mu},
            {"lambda", inv.lambda},
            {"nu", inv.nu ? json(*inv.nu) : json(nullptr)},
            {"nu_kind", nu_kind_name(inv.nu_kind)}};
}

json valuations_json(const TowerReport& tower) {
    json out = json::array();
    for (const auto& v : tower.valuations) {
        out.push_back(v ? json(*v) : json(nullptr));
    }
    return out;
}

void tower_csv(const TowerReport& tower) {
    std::cout << "n,order,valuation" << (tower.closed_form.empty() ? "" : ",closed_form") << '\n';
    for (std::size_t i = 0; i < tower.orders.size(); ++i) {
        std::cout << tower.first_n + static_cast<std::int64_t>(i) << ',' << tower.orders[i].get_str() << ',';
        if (tower.valuations[i]) {
            std::cout << *tower.valuations[i];
        }
        if (!tower.closed_form.empty()) {
            std::cout << ',' << tower.closed_form[i].get_str();
        }
        std::cout << '\n';
    }
}

void cmd_tower(const TowerArgs& a, const Output& out) {
    const TorusParams t = torus_params(a.p, a.q);
    const Integer ell = parse_integer(a.ell);
    json inputs{{"p", a.p}, {"q", a.q}, {"ell", big(ell)}};
    if (t.is_knot()) {
        if (!a.z.empty()) {
            throw Error(Errc::InvalidArgument, "--z applies to links only");
        }
        const std::int64_t n_max = a.n.value_or(4);
        inputs["n"] = n_max;
        const TowerReport tower = tower_orders_knot(t, ell, n_max);
        const IwasawaInvariants inv = knot_invariants(t, ell, n_max);
        if (out.csv) {
            tower_csv(tower);
            return;
        }
        json results{{"params", params_json(t)},
                     {"first_n", tower.first_n},
                     {"relative", false},
                     {"orders", big_list(tower.orders)},
                     {"valuations", valuations_json(tower)},
                     {"closed_form", big_list(tower.closed_form)},
                     {"closed_form_agrees", tower.orders == tower.closed_form},
                     {"invariants", invariants_json(inv)}};
        emit("tower", std::move(inputs), std::move(results));
        return;
    }
    if (a.z.empty()) {
        throw Error(Errc::NonAdmissible, "links need an admissible vector; pass --z with " + std::to_string(t.d) +
                                             " entries");
    }
    const AdmissibleVector z = AdmissibleVector::make(parse_int_list(a.z));
    const std::int64_t n_max = a.n.value_or(5);
    inputs["z"] = z.z;
    inputs["n"] = n_max;
    const LinkIwasawaReport rep = link_invariants(t, z, ell, n_max);
    if (out.csv) {
        tower_csv(rep.tower);
        return;
    }
    json results{{"params", params_json(t)},
                 {"z", z.z},
                 {"alpha", z.alpha},
                 {"v", rep.tower.v},
                 {"first_n", rep.tower.first_n},
                 {"relative", true},
                 {"orders", big_list(rep.tower.orders)},
                 {"valuations", valuations_json(rep.tower)},
                 {"invariants", invariants_json(rep.invariants)},
                 {"lambda_closed_form", rep.lambda_closed_form},
                 {"closed_form_agrees", rep.closed_form_agrees},
                 {"lambda_factor_ledger", rep.lambda_factor_ledger},
                 {"fit_start", rep.fit_start ? json(*rep.fit_start) : json(nullptr)},
                 {"note", rep.note}};
    emit("tower", std::move(inputs), std::move(results));
}

// ---- mahler ----

struct MahlerArgs {
    std::vector<std::int64_t> pq;
    std::string poly;
    std::int64_t grid = 1 << 20;
    unsigned jobs = 1;
};

void cmd_mahler(const MahlerArgs& a, const Output& out) {
    IntPolynomial f;
    json inputs;
    if (!a.poly.empty()) {
        if (!a.pq.empty()) {
            throw Error(Errc::InvalidArgument, "give either p q or --poly, not both");
        }
        f = parse_poly(a.poly);
        inputs["poly"] = a.poly;
    } else if (a.pq.size() == 2) {
        f = alexander_poly(torus_params(a.pq[0], a.pq[1]));
        inputs["p"] = a.pq[0];
        inputs["q"] = a.pq[1];
    } else {
        throw Error(Errc::InvalidArgument, "mahler needs p q or --poly");
    }
    inputs["grid"] = a.grid;
    const double measure = mahler_measure_roots(f);
    const double log_measure = mahler_measure_quadrature(f, a.grid, a.jobs);
    const double gap = std::abs(log_measure - std::log(measure));
    if (out.csv) {
        std::cout << "M_roots,m_quadrature,gap\n" << measure << ',' << log_measure << ',' << gap << '\n';
        return;
    }
    json results{{"coeffs", big_list(f.coeffs())},
                 {"M_roots", measure},
                 {"log_M_roots", std::log(measure)},
                 {"m_quadrature", log_measure},
                 {"gap", gap}};
    emit("mahler", std::move(inputs), std::move(results));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torus knot and link invariants"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Output out;
    app.add_flag("--csv", out.csv, "CSV instead of JSON for tabular payloads");

    InvariantArgs inv;
    auto* invariant = app.add_subcommand("invariant", "Alexander polynomial, factorization, determinant, colorings");
    invariant->add_option("p", inv.p)->required();
    invariant->add_option("q", inv.q)->required();
    invariant->add_option("--max-ell", inv.max_ell, "largest prime in the coloring table")->capture_default_str();

    PairArgs mom;
    auto* moments = app.add_subcommand("moments", "power sums of the roots over one period");
    moments->add_option("p", mom.p)->required();
    moments->add_option("q", mom.q)->required();

    ScanArgs sc;
    auto* scan_cmd = app.add_subcommand("scan", "root counts on an arc over all pairs up to X");
    scan_cmd->add_option("X", sc.X)->required();
    scan_cmd->add_option("family", sc.family, "coprime | all")->capture_default_str();
    scan_cmd->add_option("arc", sc.arc, "closed arc [a,b], endpoints integer or num/den")->capture_default_str();
    scan_cmd->add_option("--per-pair", sc.per_pair, "write one CSV row per pair to this file");
    scan_cmd->add_option("--freq", sc.freq, "report F_r instead of the arc statistics");
    scan_cmd->add_option("--jobs", sc.jobs)->check(CLI::PositiveNumber)->capture_default_str();

    TowerArgs tw;
    auto* tower = app.add_subcommand("tower", "homology orders along the l^n-fold covers and Iwasawa invariants");
    tower->add_option("p", tw.p)->required();
    tower->add_option("q", tw.q)->required();
    tower->add_option("--z", tw.z, "admissible vector for links, comma separated");
    tower->add_option("--ell", tw.ell, "prime")->capture_default_str();
    tower->add_option("--n", tw.n, "largest tower level (default 4 for knots, 5 for links)");

    MahlerArgs mh;
    auto* mahler = app.add_subcommand("mahler", "Mahler measure by roots and by quadrature");
    mahler->add_option("pq", mh.pq, "p q")->expected(0, 2);
    mahler->add_option("--poly", mh.poly, "coefficients c0,c1,... in ascending powers");
    mahler->add_option("--grid", mh.grid)->capture_default_str();
    mahler->add_option("--jobs", mh.jobs)->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "USAGE: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*invariant) {
            cmd_invariant(inv, out);
        } else if (*moments) {
            cmd_moments(mom, out);
        } else if (*scan_cmd) {
            cmd_scan(sc, out);
        } else if (*tower) {
            cmd_tower(tw, out);
        } else if (*mahler) {
            cmd_mahler(mh, out);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "INTERNAL: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
