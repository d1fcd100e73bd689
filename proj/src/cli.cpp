#include "formwell/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "formwell/errors.hpp"
#include "formwell/json_io.hpp"
#include "formwell/lang.hpp"
#include "formwell/numeric.hpp"

namespace formwell::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const Metric& metric_by_name(const std::string& name) {
    if (name == "euclidean") return Metric::euclidean();
    if (name == "minkowski") return Metric::minkowski();
    throw UsageError("unknown metric '" + name + "' (valid: euclidean, minkowski)");
}

const Metric& metric_of(MetricKind kind) {
    return kind == MetricKind::Euclidean ? Metric::euclidean() : Metric::minkowski();
}

ProblemSpec load_problem(const std::string& path) {
    std::string text = read_file(path);
    try {
        return parse_problem(text);
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

void print_kv(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(22) << key << value << "\n";
}

std::string triple(const Poly& a, const Poly& b, const Poly& c) {
    return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void cmd_verify(const std::string& path, bool json, std::ostream& out) {
    ProblemSpec spec = load_problem(path);
    const Metric& m = metric_of(spec.metric);
    VerificationReport r = verify_vacuum(spec.potential, m);
    if (json) {
        out << report_to_json(r).dump(2) << "\n";
        return;
    }
    print_kv(out, "metric", metric_name(r.metric));
    print_kv(out, "dF = 0", "PASS");
    if (r.d_star_f.is_zero()) {
        print_kv(out, "d*F", "0");
    } else {
        print_kv(out, "d*F", "");
        for (const auto& [idx, p] : r.d_star_f.coeffs())
            print_kv(out, "  " + idx.to_string(), p.to_string());
    }
    print_kv(out, "vacuum solution", yesno(r.is_vacuum_solution));
    print_kv(out, "duality", duality_name(r.duality));
    const char* cond = r.metric == MetricKind::Euclidean ? "condition S_E" : "condition S_M";
    print_kv(out, cond, r.condition_sum.to_string());
    print_kv(out, "  constant", r.condition_constant ? r.condition_constant->to_string()
                                                     : "not constant");
    print_kv(out, "lorenz d*omega", r.lorenz_value.to_string());
    print_kv(out, "  constant", r.lorenz_constant ? r.lorenz_constant->to_string()
                                                  : "not constant");
    print_kv(out, "harmonic potential", yesno(r.harmonic_potential));
    print_kv(out, "wavelike potential", yesno(r.wavelike_potential));
    print_kv(out, "wavelike field", yesno(r.wavelike_field));
    print_kv(out, "E", triple(r.eb.e1, r.eb.e2, r.eb.e3));
    print_kv(out, "B", triple(r.eb.b1, r.eb.b2, r.eb.b3));
    print_kv(out, "<E,B>", r.eb_inner.to_string());
    print_kv(out, "energy", r.energy.to_string());
    if (r.table_discrepancies.empty()) {
        print_kv(out, "table discrepancies", "none");
    } else {
        for (const TableDiscrepancy& d : r.table_discrepancies)
            print_kv(out, "table discrepancy",
                     d.basis.to_string() + ": table " + d.table_value.to_string() + " vs oracle " +
                         d.oracle_value.to_string());
    }
}

void cmd_fields(const std::string& path, bool json, std::ostream& out) {
    ProblemSpec spec = load_problem(path);
    Form f = curvature(spec.potential);
    if (json) {
        out << fields_to_json(f).dump(2) << "\n";
        return;
    }
    FaradayComponents c = faraday_components(f);
    print_kv(out, "F[dz1/\\dz2]", c.f12.to_string());
    print_kv(out, "F[dzb1/\\dzb2]", c.f1b2b.to_string());
    print_kv(out, "F[dz1/\\dzb1]", c.f11b.to_string());
    print_kv(out, "F[dz1/\\dzb2]", c.f12b.to_string());
    print_kv(out, "F[dz2/\\dzb1]", c.f21b.to_string());
    print_kv(out, "F[dz2/\\dzb2]", c.f22b.to_string());
    EBFields eb = eb_fields(f);
    print_kv(out, "E", triple(eb.e1, eb.e2, eb.e3));
    print_kv(out, "B", triple(eb.b1, eb.b2, eb.b3));
    print_kv(out, "<E,B>", eb_inner(f).to_string());
    print_kv(out, "energy", energy(f).to_string());
}

void cmd_star(const std::string& metric, const std::string& form_text, bool json,
              std::ostream& out) {
    const Metric& m = metric_by_name(metric);
    Form f;
    try {
        f = parse_form(form_text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("<form>:") + e.what());
    }
    Form result = star(f, m);
    if (json) {
        nlohmann::ordered_json j;
        j["metric"] = metric_name(m.kind());
        j["input"] = f.to_string();
        j["output"] = result.to_string();
        out << j.dump(2) << "\n";
        return;
    }
    out << result.to_string() << "\n";
}

void cmd_tables(const std::string& metric, bool json, std::ostream& out) {
    const Metric& m = metric_by_name(metric);
    if (json) {
        out << tables_to_json(m).dump(2) << "\n";
        return;
    }
    for (const StarTableRow& row : star_table_report(m)) {
        out << "STAR(" << row.input.to_string() << ") = " << row.table_value.to_string();
        out << "  [" << (row.from_paper ? "paper" : "derived") << ", oracle "
            << (row.matches ? "agrees" : "differs: " + row.oracle_value.to_string()) << "]\n";
    }
}

void cmd_gauge(const std::string& path, const std::string& u_text, bool json, std::ostream& out) {
    ProblemSpec spec = load_problem(path);
    Poly u;
    if (!u_text.empty()) {
        try {
            u = parse_expr(u_text);
        } catch (const ParseError& e) {
            throw UsageError(std::string("<gauge>:") + e.what());
        }
    } else if (spec.gauge) {
        u = *spec.gauge;
    } else {
        throw UsageError("no gauge function: pass one as an argument or set 'gauge =' in the file");
    }
    const Metric& m = metric_of(spec.metric);
    Potential before = spec.potential;
    Potential after = gauge_transform(before, u);
    if (!(curvature(after) == curvature(before)))
        throw InternalError("gauge transform changed the curvature");

    Poly s_before = m.kind() == MetricKind::Euclidean ? condition_euclid(before).first
                                                      : condition_mink(before).sum;
    Poly s_after = m.kind() == MetricKind::Euclidean ? condition_euclid(after).first
                                                     : condition_mink(after).sum;
    Poly shift = s_after - s_before;
    Poly expected = GaussianRational(Rational::of(1, 2)) *
                    (m.kind() == MetricKind::Euclidean ? laplace4(u) : dalembert(u));
    if (!(shift == expected)) throw InternalError("gauge shift identity violated");

    if (json) {
        nlohmann::ordered_json j;
        j["metric"] = metric_name(m.kind());
        j["u"] = u.to_string();
        j["f1"] = after.f1.to_string();
        j["f2"] = after.f2.to_string();
        j["fb1"] = after.fb1.to_string();
        j["fb2"] = after.fb2.to_string();
        j["curvature_invariant"] = true;
        j["condition_shift"] = shift.to_string();
        j["half_operator_u"] = expected.to_string();
        out << j.dump(2) << "\n";
        return;
    }
    print_kv(out, "u", u.to_string());
    print_kv(out, "f1'", after.f1.to_string());
    print_kv(out, "f2'", after.f2.to_string());
    print_kv(out, "fb1'", after.fb1.to_string());
    print_kv(out, "fb2'", after.fb2.to_string());
    print_kv(out, "curvature invariant", "yes");
    const char* op = m.kind() == MetricKind::Euclidean ? "(1/2)*lap(u)" : "(1/2)*box(u)";
    print_kv(out, "condition shift", shift.to_string());
    print_kv(out, op, expected.to_string() + "  (match)");
}

void cmd_lorenz(const std::string& path, bool json, std::ostream& out) {
    ProblemSpec spec = load_problem(path);
    const Metric& m = metric_of(spec.metric);
    auto [value, constant] = lorenz(spec.potential, m);
    nlohmann::ordered_json j;
    j["metric"] = metric_name(m.kind());
    j["d_star_omega"] = value.to_string();
    j["constant"] = constant ? nlohmann::ordered_json(constant->to_string())
                             : nlohmann::ordered_json(nullptr);
    if (constant) {
        Potential norm = lorenz_normalize(spec.potential, m);
        j["normalized"] = {{"f1", norm.f1.to_string()},
                           {"f2", norm.f2.to_string()},
                           {"fb1", norm.fb1.to_string()},
                           {"fb2", norm.fb2.to_string()}};
        j["normalized_d_star_omega"] = lorenz(norm, m).first.to_string();
        j["curvature_invariant"] = curvature(norm) == curvature(spec.potential);
    }
    if (json) {
        out << j.dump(2) << "\n";
        return;
    }
    print_kv(out, "d*omega", value.to_string());
    print_kv(out, "constant", constant ? constant->to_string() : "not constant");
    if (constant) {
        Potential norm = lorenz_normalize(spec.potential, m);
        print_kv(out, "normalized f1", norm.f1.to_string());
        print_kv(out, "normalized f2", norm.f2.to_string());
        print_kv(out, "normalized fb1", norm.fb1.to_string());
        print_kv(out, "normalized fb2", norm.fb2.to_string());
        print_kv(out, "new d*omega", lorenz(norm, m).first.to_string());
        print_kv(out, "curvature invariant",
                 yesno(curvature(norm) == curvature(spec.potential)));
    }
}

std::string complex_str(std::complex<double> v) {
    std::ostringstream ss;
    ss << std::setprecision(12) << v.real();
    if (v.imag() >= 0)
        ss << "+" << std::setprecision(12) << v.imag() << "i";
    else
        ss << std::setprecision(12) << v.imag() << "i";
    return ss.str();
}

RealPoint parse_point(const std::string& text) {
    RealPoint p;
    double* slots[4] = {&p.x0, &p.x1, &p.x2, &p.x3};
    std::istringstream ss(text);
    for (int k = 0; k < 4; ++k) {
        std::string part;
        if (!std::getline(ss, part, ',')) throw UsageError("--at needs x0,x1,x2,x3");
        try {
            std::size_t used = 0;
            *slots[k] = std::stod(part, &used);
            while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used])))
                ++used;
            if (used != part.size()) throw UsageError("bad coordinate '" + part + "'");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad coordinate '" + part + "'");
        }
    }
    std::string rest;
    if (std::getline(ss, rest, ',')) throw UsageError("--at needs exactly four coordinates");
    return p;
}

void cmd_eval(const std::string& path, const std::string& at_text, bool json, std::ostream& out) {
    ProblemSpec spec = load_problem(path);
    RealPoint at = parse_point(at_text);
    ComplexPoint z = at.to_complex();
    Form f = curvature(spec.potential);
    EBFields eb = eb_fields(f);

    const double h = 1e-5, tol = 1e-6;
    struct Named {
        const char* name;
        const Poly* p;
    };
    const Named fs[4] = {{"f1", &spec.potential.f1},
                         {"f2", &spec.potential.f2},
                         {"fb1", &spec.potential.fb1},
                         {"fb2", &spec.potential.fb2}};

    if (json) {
        nlohmann::ordered_json j;
        j["at"] = {at.x0, at.x1, at.x2, at.x3};
        j["E"] = {complex_str(eval(eb.e1, z)), complex_str(eval(eb.e2, z)),
                  complex_str(eval(eb.e3, z))};
        j["B"] = {complex_str(eval(eb.b1, z)), complex_str(eval(eb.b2, z)),
                  complex_str(eval(eb.b3, z))};
        nlohmann::ordered_json checks;
        for (const Named& n : fs) checks[n.name] = check_wirtinger(*n.p, at, h, tol);
        j["check_wirtinger"] = checks;
        out << j.dump(2) << "\n";
        return;
    }
    print_kv(out, "at", "(" + std::to_string(at.x0) + ", " + std::to_string(at.x1) + ", " +
                            std::to_string(at.x2) + ", " + std::to_string(at.x3) + ")");
    print_kv(out, "E", "(" + complex_str(eval(eb.e1, z)) + ", " + complex_str(eval(eb.e2, z)) +
                           ", " + complex_str(eval(eb.e3, z)) + ")");
    print_kv(out, "B", "(" + complex_str(eval(eb.b1, z)) + ", " + complex_str(eval(eb.b2, z)) +
                           ", " + complex_str(eval(eb.b3, z)) + ")");
    for (const Named& n : fs)
        print_kv(out, std::string("check_wirtinger ") + n.name,
                 check_wirtinger(*n.p, at, h, tol) ? "PASS" : "FAIL");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"formwell - exact symbolic Maxwell verification on C^2"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit JSON with stable keys");

    std::string verify_file, fields_file, gauge_file, lorenz_file, eval_file;
    std::string star_metric, star_form, tables_metric, gauge_u, eval_at;

    CLI::App* verify = app.add_subcommand("verify", "verify a problem file");
    verify->add_option("file", verify_file, "problem file")->required();

    CLI::App* fields = app.add_subcommand("fields", "Faraday components and E/B extraction");
    fields->add_option("file", fields_file, "problem file")->required();

    CLI::App* star_cmd = app.add_subcommand("star", "apply the Hodge star to a form");
    star_cmd->add_option("metric", star_metric, "euclidean|minkowski")->required();
    star_cmd->add_option("form", star_form, "form expression")->required();

    CLI::App* tables = app.add_subcommand("tables", "all 16 star-table entries");
    tables->add_option("metric", tables_metric, "euclidean|minkowski")->required();

    CLI::App* gauge = app.add_subcommand("gauge", "apply a gauge transform");
    gauge->add_option("file", gauge_file, "problem file")->required();
    gauge->add_option("u", gauge_u, "gauge function expression");

    CLI::App* lorenz_cmd = app.add_subcommand("lorenz", "Lorenz value d*omega and normalization");
    lorenz_cmd->add_option("file", lorenz_file, "problem file")->required();

    CLI::App* eval_cmd = app.add_subcommand("eval", "numeric E/B and derivative checks");
    eval_cmd->add_option("file", eval_file, "problem file")->required();
    eval_cmd->add_option("--at", eval_at, "point x0,x1,x2,x3")->required();

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargv;
        cargv.push_back("formwell");
        for (const std::string& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) cmd_verify(verify_file, json, out);
        if (fields->parsed()) cmd_fields(fields_file, json, out);
        if (star_cmd->parsed()) cmd_star(star_metric, star_form, json, out);
        if (tables->parsed()) cmd_tables(tables_metric, json, out);
        if (gauge->parsed()) cmd_gauge(gauge_file, gauge_u, json, out);
        if (lorenz_cmd->parsed()) cmd_lorenz(lorenz_file, json, out);
        if (eval_cmd->parsed()) cmd_eval(eval_file, eval_at, json, out);
    } catch (const InternalError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace formwell::cli
