#include "beukers/cli.hpp"

#include "beukers/arith.hpp"
#include "beukers/bounds.hpp"
#include "beukers/constants.hpp"
#include "beukers/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace beukers::cli {

using Json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

std::string str(const BigInt& v) { return v.get_str(); }

Json rational_json(const Rational& r) { return Json{{"num", str(r.numerator())}, {"den", str(r.denominator())}}; }

Json ball_json(const BallReal& b, int digits) {
    return Json{{"mid", b.mid_string(digits)}, {"interval", b.interval_string(digits)}};
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
    out << '\n';
}

std::string kind_name(ZetaKind k) { return k == ZetaKind::Two ? "zeta(2)" : "zeta(3)"; }

Json integer_form_json(const IntegerForm& f) {
    return Json{{"n", f.n}, {"a", str(f.a)}, {"b", str(f.b)}, {"c", str(f.c)}, {"d_n", str(f.dn)}};
}

}  // namespace

int cmd_forms(ZetaKind kind, unsigned n_max, Format format, std::ostream& out) {
    const std::vector<std::string> header{"n", "a", "b", "c", "d_n"};
    Json rows = Json::array();
    if (format == Format::Csv) emit_csv_row(out, header);
    for (unsigned n = 0; n <= n_max; ++n) {
        const LinearForm form = beukers_form(kind, n);
        const IntegerForm f = integerize(form, n);
        switch (format) {
            case Format::Json: {
                Json row = integer_form_json(f);
                row["rat"] = rational_json(form.rat);
                rows.push_back(std::move(row));
                break;
            }
            case Format::Csv: emit_csv_row(out, {std::to_string(n), str(f.a), str(f.b), str(f.c), str(f.dn)}); break;
            case Format::Text:
                out << "n=" << n << "  a=" << f.a << "  b=" << f.b << "  c=" << f.c << "  d_n=" << f.dn << '\n';
                break;
        }
    }
    if (format == Format::Json) {
        emit_json(out, Json{{"command", "forms"}, {"zeta", power_of(kind)}, {"n_max", n_max}, {"rows", rows}});
    }
    return kExitPass;
}

int cmd_verify(ZetaKind kind, unsigned n_max, Precision prec, Format format, std::ostream& out, std::ostream& err) {
    if (n_max < 1) throw std::invalid_argument("verify: --n-max must be >= 1");
    ChainSummary summary;
    try {
        summary = verify_chain(kind, 1, n_max, prec);
    } catch (const IntegralityError& e) {
        err << "integrality check failed: " << e.what() << '\n';
        emit_json(out, Json{{"command", "verify"}, {"zeta", power_of(kind)}, {"error", e.what()}});
        return kExitFailure;
    }

    const int digits = prec.digits();
    const bool violated = std::any_of(summary.reports.begin(), summary.reports.end(),
                                      [](const BoundReport& r) { return r.status == BoundStatus::Violated; });
    const int code = violated ? kExitFailure : summary.any_inconclusive() ? kExitInconclusive : kExitPass;

    switch (format) {
        case Format::Json: {
            Json rows = Json::array();
            for (const auto& r : summary.reports) {
                Json row = integer_form_json(r.integers);
                row["abs_value"] = r.abs_value.mid_string(digits);
                row["abs_value_interval"] = r.abs_value.interval_string(digits);
                row["bound"] = r.bound.mid_string(digits);
                row["bound_interval"] = r.bound.interval_string(digits);
                row["positive"] = r.positive;
                row["status"] = to_string(r.status);
                row["holds"] = r.holds();
                row["digits_used"] = r.digits_used;
                rows.push_back(std::move(row));
            }
            const auto& s = summary.scan;
            Json scan{{"base", s.base}, {"scanned_to", s.scanned_to}};
            scan["first_holds"] = s.first_holds ? Json(*s.first_holds) : Json(nullptr);
            scan["last_failure"] = s.last_failure ? Json(*s.last_failure) : Json(nullptr);
            scan["crossover"] = s.crossover ? Json(*s.crossover) : Json(nullptr);
            emit_json(out, Json{{"command", "verify"},
                                {"zeta", power_of(kind)},
                                {"n_max", n_max},
                                {"precision_digits", digits},
                                {"bound_factor", bound_factor(kind, prec).exact.to_string()},
                                {"bound_lead", bound_lead(kind)},
                                {"rows", rows},
                                {"dk_below_base_pow_n", scan},
                                {"strictly_decreasing", summary.strictly_decreasing},
                                {"all_hold", summary.all_hold()},
                                {"exit_code", code}});
            break;
        }
        case Format::Csv:
            emit_csv_row(out, {"n", "a", "b", "c", "d_n", "abs_value", "bound", "holds"});
            for (const auto& r : summary.reports) {
                emit_csv_row(out, {std::to_string(r.n), str(r.integers.a), str(r.integers.b), str(r.integers.c),
                                   str(r.integers.dn), r.abs_value.mid_string(digits), r.bound.mid_string(digits),
                                   r.holds() ? "true" : "false"});
            }
            break;
        case Format::Text:
            out << "inequality chain for " << kind_name(kind) << " at " << digits << " digits\n";
            for (const auto& r : summary.reports) {
                out << "n=" << std::setw(3) << r.n << "  |value|=" << r.abs_value.mid_string(12)
                    << "  bound=" << r.bound.mid_string(12) << "  " << to_string(r.status)
                    << (r.positive ? "" : " (sign not separated)") << '\n';
            }
            out << (code == kExitPass ? "PASS" : code == kExitInconclusive ? "INCONCLUSIVE" : "FAIL") << '\n';
            break;
    }
    if (code == kExitInconclusive) err << "precision insufficient to separate some bounds; raise --prec\n";
    return code;
}

int cmd_dn(std::uint64_t limit, Precision prec, Format format, std::ostream& out) {
    if (limit < 1) throw std::invalid_argument("dn: --limit must be >= 1");
    const PrimeTable table(std::max<std::uint64_t>(limit, 2));
    DnStream stream(table);
    Json rows = Json::array();
    if (format == Format::Csv) emit_csv_row(out, {"n", "d_n", "pi_n", "ln_dn_over_n"});
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const BigInt& dn = stream.next().second;
        const std::uint64_t pi = table.prime_count(n);
        const BallReal ratio = BallReal(Rational(dn), prec).log() / Rational(static_cast<long>(n));
        const std::string r = ratio.mid_string(15);
        switch (format) {
            case Format::Json:
                rows.push_back(Json{{"n", n}, {"d_n", str(dn)}, {"pi_n", pi}, {"ln_dn_over_n", r},
                                    {"ln_dn_over_n_interval", ratio.interval_string(15)}});
                break;
            case Format::Csv: emit_csv_row(out, {std::to_string(n), str(dn), std::to_string(pi), r}); break;
            case Format::Text: out << n << ' ' << dn << ' ' << pi << ' ' << r << '\n'; break;
        }
    }
    if (format == Format::Json) emit_json(out, Json{{"command", "dn"}, {"limit", limit}, {"rows", rows}});
    return kExitPass;
}

namespace {

Json max_result_json(const MaxResult& m, Precision prec) {
    Json point = Json::array();
    Json point_decimal = Json::array();
    for (std::size_t i = 0; i < m.point.size(); ++i) {
        point.push_back(m.point[i].to_string());
        point_decimal.push_back(m.point_ball[i].mid_fixed(15));
    }
    Json grid_point = Json::array();
    for (const auto& c : m.grid.point) grid_point.push_back(BallReal(c, prec).mid_fixed(15));
    Json residuals = Json::array();
    for (std::size_t i = 0; i < m.residuals.size(); ++i) {
        residuals.push_back(Json{{"equation", m.residual_names[i]},
                                 {"exact", m.residuals[i].to_string()},
                                 {"ball_contains_zero", m.residuals[i].to_ball(prec).contains_zero()}});
    }
    Json j{{"point", point},
           {"point_decimal", point_decimal},
           {"value", m.value.to_string()},
           {"value_decimal", m.value_ball.mid_fixed(15)},
           {"value_from_formula_matches", m.value_from_formula == m.value},
           {"residuals", residuals},
           {"residuals_vanish", m.residuals_vanish()},
           {"grid", Json{{"rounds", m.grid.rounds},
                         {"points_per_axis", m.grid.points_per_axis},
                         {"argmax", grid_point},
                         {"value", BallReal(m.grid.value, prec).mid_fixed(15)}}},
           {"grid_below_analytic", m.grid_below_analytic()}};
    if (m.diagonal_grid) {
        j["diagonal_grid"] = Json{{"argmax", BallReal(m.diagonal_grid->point[0], prec).mid_fixed(15)},
                                  {"value", BallReal(m.diagonal_grid->value, prec).mid_fixed(15)}};
    }
    if (m.rival_value) {
        Json mp = Json::array();
        for (const auto& c : *m.rival_point) mp.push_back(c.to_string());
        const BallReal mv = m.rival_value->to_ball(prec);
        j["rival_point"] = mp;
        j["rival_point_value"] = m.rival_value->to_string();
        j["rival_point_value_decimal"] = mv.mid_fixed(15);
        j["rival_point_value_lower"] = *m.rival_value < m.value && mv.certainly_less(m.value_ball);
        j["closed_form_solution_matches"] = m.closed_form_solution_matches;
    }
    return j;
}

}  // namespace

int cmd_maxima(Precision prec, unsigned grid_points, unsigned refinements, Format format, std::ostream& out) {
    const MaxResult m2 = max_g2(grid_points, refinements, prec);
    const MaxResult m3 = max_g3(grid_points, refinements, prec);
    const bool ok = m2.residuals_vanish() && m3.residuals_vanish() && m2.grid_below_analytic() &&
                    m3.grid_below_analytic() && m2.value_from_formula == m2.value &&
                    m3.value_from_formula == m3.value && *m3.rival_value < m3.value;
    switch (format) {
        case Format::Json:
            emit_json(out, Json{{"command", "maxima"}, {"g2", max_result_json(m2, prec)},
                                {"g3", max_result_json(m3, prec)}, {"all_checks_pass", ok}});
            break;
        case Format::Csv:
            emit_csv_row(out, {"function", "analytic_value", "value_decimal", "grid_value", "argmax"});
            for (const auto* m : {&m2, &m3}) {
                std::string argmax;
                for (const auto& c : m->point_ball) argmax += (argmax.empty() ? "" : " ") + c.mid_fixed(10);
                emit_csv_row(out, {m == &m2 ? "g2" : "g3", m->value.to_string(), m->value_ball.mid_fixed(15),
                                   BallReal(m->grid.value, prec).mid_fixed(15), argmax});
            }
            break;
        case Format::Text: {
            auto point = [](const MaxResult& m) {
                std::string s = "(";
                for (std::size_t i = 0; i < m.point_ball.size(); ++i) s += (i ? ", " : "") + m.point_ball[i].mid_fixed(10);
                return s + ")";
            };
            out << "g2 max " << m2.value.to_string() << " = " << m2.value_ball.mid_fixed(15) << " at " << point(m2) << '\n';
            out << "g3 max " << m3.value.to_string() << " = " << m3.value_ball.mid_fixed(15) << " at " << point(m3) << '\n';
            out << "g3 at (2-sqrt2, sqrt2-1, 1/2) = " << m3.rival_value->to_ball(prec).mid_fixed(15) << '\n';
            out << (ok ? "PASS" : "FAIL") << '\n';
            break;
        }
    }
    return ok ? kExitPass : kExitFailure;
}

int cmd_oracle_check(unsigned n_max, unsigned long terms, Precision prec, Format format, std::ostream& out) {
    bool ok = true;
    Json forms = Json::array();
    for (unsigned n = 0; n <= n_max; ++n) {
        const BallReal i_val = beukers_I(n).realize(prec).abs();
        const BallReal j_val = beukers_J(n).realize(prec);
        const SeriesEnclosure si = series_abs_In(n, terms);
        const unsigned long jterms = std::max<unsigned long>(terms, 2UL * n * n + n + 1);
        const SeriesEnclosure sj = series_Jn(n, jterms);
        const bool i_ok = si.meets(i_val);
        const bool j_ok = sj.meets(j_val);
        ok = ok && i_ok && j_ok;
        forms.push_back(Json{{"n", n},
                             {"abs_I", i_val.mid_string(20)},
                             {"abs_I_series", si.to_ball(prec).interval_string(20)},
                             {"abs_I_width", BallReal(si.width(), prec).mid_string(6)},
                             {"abs_I_agrees", i_ok},
                             {"J", j_val.mid_string(20)},
                             {"J_series", sj.to_ball(prec).interval_string(20)},
                             {"J_width", BallReal(sj.width(), prec).mid_string(6)},
                             {"J_agrees", j_ok}});
    }

    unsigned ibp_checked = 0;
    bool ibp_ok = true;
    for (unsigned m = 0; m <= 12; ++m) {
        for (unsigned n = 0; n <= m; ++n) {
            const auto [lhs, rhs] = check_ibp(n, m);
            ibp_ok = ibp_ok && lhs == rhs;
            ++ibp_checked;
        }
    }
    ok = ok && ibp_ok;

    Json identities = Json::array();
    for (const Rational& v : {Rational(1, 2), Rational(99, 100), Rational(1, 10), Rational(3, 8)}) {
        const auto [lhs, rhs] = check_substitution(v, prec);
        ok = ok && lhs.overlaps(rhs);
        identities.push_back(Json{{"identity", "substitution"}, {"v", v.to_string()}, {"lhs", lhs.mid_string(20)},
                              {"rhs", rhs.mid_string(20)}, {"overlap", lhs.overlaps(rhs)}});
    }
    for (const auto& [s, t] : {std::pair{Rational(1, 2), Rational(1, 2)}, std::pair{Rational(1, 10), Rational(9, 10)},
                               std::pair{Rational(3, 4), Rational(1, 3)}}) {
        const auto [lhs, rhs] = check_partial_fraction(s, t, prec);
        ok = ok && lhs.overlaps(rhs);
        identities.push_back(Json{{"identity", "partial_fraction"}, {"s", s.to_string()}, {"t", t.to_string()},
                              {"lhs", lhs.mid_string(20)}, {"rhs", rhs.mid_string(20)}, {"overlap", lhs.overlaps(rhs)}});
    }

    switch (format) {
        case Format::Json:
            emit_json(out, Json{{"command", "oracle-check"},
                                {"n_max", n_max},
                                {"terms", terms},
                                {"forms", forms},
                                {"ibp", Json{{"pairs_checked", ibp_checked}, {"all_equal", ibp_ok}}},
                                {"identities", identities},
                                {"all_checks_pass", ok}});
            break;
        case Format::Csv:
            emit_csv_row(out, {"n", "abs_I", "abs_I_agrees", "J", "J_agrees"});
            for (const auto& f : forms) {
                emit_csv_row(out, {std::to_string(f["n"].get<unsigned>()), f["abs_I"].get<std::string>(),
                                   f["abs_I_agrees"].get<bool>() ? "true" : "false", f["J"].get<std::string>(),
                                   f["J_agrees"].get<bool>() ? "true" : "false"});
            }
            break;
        case Format::Text:
            for (const auto& f : forms) {
                out << "n=" << f["n"].get<unsigned>() << "  |I_n| " << (f["abs_I_agrees"].get<bool>() ? "ok" : "MISMATCH")
                    << "  J_n " << (f["J_agrees"].get<bool>() ? "ok" : "MISMATCH") << '\n';
            }
            out << "integration by parts: " << ibp_checked << " pairs " << (ibp_ok ? "ok" : "MISMATCH") << '\n';
            out << (ok ? "PASS" : "FAIL") << '\n';
            break;
    }
    return ok ? kExitPass : kExitFailure;
}

int cmd_contradict(ZetaKind kind, const BigInt& p, const BigInt& q, Precision prec, Format format, std::ostream& out) {
    const ContradictionReport r = contradiction_threshold(kind, p, q, prec);
    const int digits = prec.digits();
    switch (format) {
        case Format::Json:
            emit_json(out, Json{{"command", "contradict"},
                                {"zeta", power_of(kind)},
                                {"p", str(p)},
                                {"q", str(q)},
                                {"n_star", r.n_star},
                                {"product_at_n_star", ball_json(r.product_at_n_star, digits)},
                                {"product_below_one", r.product_at_n_star.certainly_less(BallReal(Rational(1), prec))},
                                {"coarse_bound", ball_json(r.coarse_bound, digits)},
                                {"witness", str(r.witness)},
                                {"a_n", str(r.integers.a)},
                                {"c_n", str(r.integers.c)},
                                {"d_n", str(r.integers.dn)}});
            break;
        case Format::Csv:
            emit_csv_row(out, {"zeta", "p", "q", "n_star", "product_at_n_star", "coarse_bound", "witness"});
            emit_csv_row(out, {std::to_string(power_of(kind)), str(p), str(q), std::to_string(r.n_star),
                               r.product_at_n_star.mid_string(digits), r.coarse_bound.mid_string(digits), str(r.witness)});
            break;
        case Format::Text:
            out << "if " << kind_name(kind) << " = " << p << "/" << q << ", then |q a_n + p c_n| would be a positive integer below "
                << r.product_at_n_star.mid_string(8) << " at n = " << r.n_star << '\n';
            out << "coarse threshold n > " << r.coarse_bound.mid_string(8) << '\n';
            out << "actual |q a_n + p c_n| at n = " << r.n_star << ": " << r.witness << '\n';
            break;
    }
    return kExitPass;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the Beukers linear forms for zeta(2) and zeta(3)", "beukers"};
    app.require_subcommand(1);

    int zeta = 2;
    unsigned n_max = 10;
    std::uint64_t limit = 100;
    int prec_digits = Precision::kDefaultDigits;
    std::string format_name = "json";
    std::string out_path;
    unsigned long terms = kDefaultOracleTerms;
    unsigned grid_points = kDefaultGridPoints;
    unsigned refinements = kDefaultRefinements;
    std::string p_text, q_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--prec", prec_digits, "Working precision in decimal digits")->check(CLI::Range(Precision::kMinDigits, 100000));
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", out_path, "Write output to FILE instead of stdout");
    };
    auto add_zeta = [&](CLI::App* sub) { sub->add_option("--zeta", zeta, "Which zeta value: 2 or 3")->check(CLI::IsMember({2, 3})); };

    auto* forms = app.add_subcommand("forms", "Table of integer coefficients a_n, b_n, c_n, d_n");
    add_zeta(forms);
    forms->add_option("--n-max", n_max, "Largest index")->check(CLI::NonNegativeNumber);
    add_common(forms);

    auto* verify = app.add_subcommand("verify", "Check 0 < |form_n| <= bound_n for n = 1..n-max");
    add_zeta(verify);
    verify->add_option("--n-max", n_max, "Largest index")->check(CLI::Range(1U, 100000U));
    add_common(verify);

    auto* dn = app.add_subcommand("dn", "Stream n, d_n, pi(n), ln(d_n)/n");
    dn->add_option("--limit", limit, "Largest n")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));
    add_common(dn);

    auto* maxima = app.add_subcommand("maxima", "Analytic and grid maxima of g(x,y) and g(x,y,z)");
    maxima->add_option("--grid", grid_points, "Grid points per axis")->check(CLI::Range(2U, 1000U));
    maxima->add_option("--refinements", refinements, "Zoom rounds after the coarse grid")->check(CLI::Range(0U, 20U));
    add_common(maxima);

    auto* oracle = app.add_subcommand("oracle-check", "Compare closed forms with independent series");
    oracle->add_option("--n-max", n_max, "Largest index")->check(CLI::Range(0U, 30U));
    oracle->add_option("--terms", terms, "Series terms")->check(CLI::Range(1UL, 10000000UL));
    add_common(oracle);

    auto* contradict = app.add_subcommand("contradict", "Threshold index for a hypothetical zeta(k) = p/q");
    add_zeta(contradict);
    contradict->add_option("--p", p_text, "Numerator")->required();
    contradict->add_option("--q", q_text, "Denominator")->required();
    add_common(contradict);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            err << "cannot open output file " << out_path << '\n';
            return kExitUsage;
        }
        sink = &file;
    }

    try {
        const Precision prec(prec_digits);
        const Format format = parse_format(format_name);
        const ZetaKind kind = zeta_kind_from_int(zeta);
        if (forms->parsed()) return cmd_forms(kind, n_max, format, *sink);
        if (verify->parsed()) return cmd_verify(kind, n_max, prec, format, *sink, err);
        if (dn->parsed()) return cmd_dn(limit, prec, format, *sink);
        if (maxima->parsed()) return cmd_maxima(prec, grid_points, refinements, format, *sink);
        if (oracle->parsed()) return cmd_oracle_check(n_max, terms, prec, format, *sink);
        if (contradict->parsed()) {
            BigInt p, q;
            if (p.set_str(p_text, 10) != 0 || q.set_str(q_text, 10) != 0) {
                err << "--p and --q must be integers\n";
                return kExitUsage;
            }
            return cmd_contradict(kind, p, q, prec, format, *sink);
        }
    } catch (const IntegralityError& e) {
        err << "integrality check failed: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace beukers::cli
