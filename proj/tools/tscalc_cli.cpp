// tscalc command-line front end: tabulate exponential/trig families on time
// scales, run scheme comparisons, oscillator and Lie-group flows, the modified
// q-calculus, and the identity-verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tscalc/tscalc.hpp"
#include "tscalc/verify.hpp"

namespace {

using namespace tscalc;
using nlohmann::json;

struct Output {
    std::string format = "csv"; // csv | json
    std::string path;           // empty => stdout

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw Error("cannot open output file '" + path + "'");
        }
        return *file;
    }
    std::unique_ptr<std::ofstream> file;
};

void emit_table(Output& out, const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows) {
    std::ostream& os = out.stream();
    char buf[32];
    if (out.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
            arr.push_back(obj);
        }
        os << arr.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << "\n";
    }
}

ExpScheme parse_scheme(const std::string& s) {
    if (s == "delta") return ExpScheme::delta();
    if (s == "nabla") return ExpScheme::nabla();
    if (s == "cayley") return ExpScheme::cayley();
    if (s == "exact") return ExpScheme::exact();
    if (s.rfind("pade:", 0) == 0) {
        auto f = tscalc::detail::split(s, ':');
        if (f.size() != 3) throw Error("scheme pade:j:k expected");
        return ExpScheme::pade(std::stoi(f[1]), std::stoi(f[2]));
    }
    throw Error("unknown scheme '" + s + "'");
}

SchemeKind parse_scheme_kind(const std::string& s) {
    if (s == "forward-euler") return SchemeKind::ForwardEuler;
    if (s == "backward-euler") return SchemeKind::BackwardEuler;
    if (s == "trapezoidal1") return SchemeKind::Trapezoidal1;
    if (s == "trapezoidal2") return SchemeKind::Trapezoidal2;
    if (s == "implicit-midpoint") return SchemeKind::ImplicitMidpoint;
    throw Error("unknown integration scheme '" + s + "'");
}

int run_verify(const std::vector<std::string>& names, Output& out) {
    std::vector<std::string> selected = names;
    if (selected.empty() || (selected.size() == 1 && selected[0] == "all"))
        for (const auto& [name, fn] : verify::suites()) selected.push_back(name);
    bool all_pass = true;
    std::ostream& os = out.stream();
    for (const auto& name : selected) {
        if (name == "all") continue;
        auto it = verify::suites().find(name);
        if (it == verify::suites().end())
            throw Error("unknown verify suite '" + name + "'");
        verify::SuiteReport rep = it->second();
        for (const auto& c : rep.checks) {
            os << (c.pass() ? "PASS" : "FAIL") << "  " << rep.suite << ": "
               << c.name << "  residual=" << c.residual << "  tol=" << c.tolerance
               << "\n";
            all_pass = all_pass && c.pass();
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential, trigonometric and dynamic equations on time scales"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out.path, "write output to file instead of stdout");
    double global_tol = 0.0;
    app.add_option("--tol", global_tol, "override series tolerance where applicable");

    // exp
    std::string exp_scheme = "cayley", exp_alpha = "1", exp_scale;
    double exp_t0 = 0.0;
    auto* exp_cmd = app.add_subcommand("exp", "tabulate an exponential family");
    exp_cmd->add_option("--scheme", exp_scheme, "delta|nabla|cayley|pade:j:k|exact");
    exp_cmd->add_option("--alpha", exp_alpha, "coefficient, complex literal re[+imi]");
    exp_cmd->add_option("--scale", exp_scale, "scale spec (shorthand or JSON file)")
        ->required();
    exp_cmd->add_option("--t0", exp_t0, "anchor point");

    // trig
    std::string trig_family = "cayley", trig_omega = "1", trig_scale;
    double trig_t0 = 0.0;
    bool trig_hyperbolic = false;
    auto* trig_cmd = app.add_subcommand("trig", "tabulate a trig/hyperbolic family");
    trig_cmd->add_option("--family", trig_family, "cayley|hilger|bp|exact");
    trig_cmd->add_option("--omega", trig_omega, "frequency/coefficient");
    trig_cmd->add_option("--scale", trig_scale, "scale spec")->required();
    trig_cmd->add_option("--t0", trig_t0, "anchor point");
    trig_cmd->add_flag("--hyperbolic", trig_hyperbolic, "hyperbolic pair");

    // compare
    std::vector<std::string> cmp_schemes;
    std::string cmp_alpha = "1", cmp_scale;
    double cmp_x0 = 1.0, cmp_t0 = 0.0;
    auto* cmp_cmd =
        app.add_subcommand("compare", "compare scheme trajectories for x' = alpha x");
    cmp_cmd->add_option("--schemes", cmp_schemes, "integration schemes")
        ->required()
        ->delimiter(',');
    cmp_cmd->add_option("--alpha", cmp_alpha, "coefficient");
    cmp_cmd->add_option("--scale", cmp_scale, "scale spec")->required();
    cmp_cmd->add_option("--x0", cmp_x0, "initial value");
    cmp_cmd->add_option("--t0", cmp_t0, "start point");

    // oscillator
    double osc_omega0 = 1.0, osc_mu = 0.1;
    int osc_steps = 100;
    std::string osc_scheme = "implicit-midpoint";
    auto* osc_cmd = app.add_subcommand("oscillator", "harmonic oscillator trajectory");
    osc_cmd->add_option("--omega0", osc_omega0, "frequency");
    osc_cmd->add_option("--scheme", osc_scheme, "integration scheme");
    osc_cmd->add_option("--steps", osc_steps, "number of steps");
    osc_cmd->add_option("--mu", osc_mu, "uniform step size");

    // qexp
    double q_value = 0.5, qx_lo = 0.0, qx_hi = 1.0;
    int qx_n = 20;
    auto* q_cmd = app.add_subcommand("qexp", "tabulate E_q, Cos_q, Sin_q");
    q_cmd->add_option("--q", q_value, "q in (0,1)");
    q_cmd->add_option("--xlo", qx_lo, "grid start");
    q_cmd->add_option("--xhi", qx_hi, "grid end");
    q_cmd->add_option("--n", qx_n, "grid size");

    // lieflow
    std::string lie_group = "so3", lie_scale = "uniform:0:0.1:50";
    double lie_coeff = 1.0;
    auto* lie_cmd = app.add_subcommand("lieflow", "Cayley flow on a quadratic group");
    lie_cmd->add_option("--group", lie_group, "so2|so3|su2|sp2")
        ->check(CLI::IsMember({"so2", "so3", "su2", "sp2"}));
    lie_cmd->add_option("--coeff", lie_coeff, "coefficient scaling the generator");
    lie_cmd->add_option("--scale", lie_scale, "scale spec");

    // verify
    std::vector<std::string> verify_names;
    auto* verify_cmd = app.add_subcommand("verify", "run identity-verification suites");
    verify_cmd->add_option("suites", verify_names, "suite names, or 'all'");
    std::string verify_family; // accepted for scriptability, selects trig family suites
    verify_cmd->add_option("--family", verify_family, "restrict to a family");

    // let the global --format/--out/--tol appear after the subcommand name
    for (CLI::App* sub : {exp_cmd, trig_cmd, cmp_cmd, osc_cmd, q_cmd, lie_cmd,
                          verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*exp_cmd) {
            TimeScale ts = parse_scale_spec(exp_scale);
            CoefficientFunction alpha(parse_complex(exp_alpha));
            ExpScheme scheme = parse_scheme(exp_scheme);
            std::vector<std::vector<double>> rows;
            for (double t : ts.nodes(exp_t0, ts.max())) {
                Complex v = eval_exp(scheme, alpha, ts, t, exp_t0);
                rows.push_back({t, v.real(), v.imag()});
            }
            emit_table(out, {"t", "re", "im"}, rows);
        } else if (*trig_cmd) {
            TimeScale ts = parse_scale_spec(trig_scale);
            CoefficientFunction omega(parse_complex(trig_omega));
            std::vector<std::vector<double>> rows;
            for (double t : ts.nodes(trig_t0, ts.max())) {
                Complex c, s;
                if (trig_family == "cayley") {
                    std::tie(c, s) = trig_hyperbolic
                                         ? cayley_hyperbolic(ts, omega, t, trig_t0)
                                         : cayley_trig(ts, omega, t, trig_t0);
                } else if (trig_family == "hilger") {
                    std::tie(c, s) = hilger_trig(ts, omega, t, trig_t0);
                } else if (trig_family == "bp") {
                    std::tie(c, s) = trig_hyperbolic
                                         ? bp_hyperbolic(ts, omega, t, trig_t0)
                                         : bp_trig(ts, omega, t, trig_t0);
                } else if (trig_family == "exact") {
                    auto [ce, se] =
                        exact_trig(omega.constant_hint.value().real(), t, trig_t0);
                    c = ce;
                    s = se;
                } else {
                    throw Error("unknown family '" + trig_family + "'");
                }
                rows.push_back({t, c.real(), c.imag(), s.real(), s.imag()});
            }
            emit_table(out, {"t", "cos_re", "cos_im", "sin_re", "sin_im"}, rows);
        } else if (*cmp_cmd) {
            TimeScale ts = parse_scale_spec(cmp_scale);
            Complex alpha = parse_complex(cmp_alpha);
            VectorField field{[alpha](const State& x, double) -> State {
                                  return alpha * x;
                              },
                              1, true, std::nullopt};
            State x0(1);
            x0 << Complex(cmp_x0, 0.0);
            std::vector<std::string> cols{"t"};
            std::vector<Trajectory> trajs;
            for (const auto& name : cmp_schemes) {
                trajs.push_back(integrate(parse_scheme_kind(name), field, ts, x0,
                                          cmp_t0, ts.max()));
                cols.push_back(name + "_re");
                cols.push_back(name + "_im");
            }
            std::vector<std::vector<double>> rows;
            for (std::size_t i = 0; i < trajs.front().times.size(); ++i) {
                std::vector<double> row{trajs.front().times[i]};
                for (const auto& tr : trajs) {
                    row.push_back(tr.states[i][0].real());
                    row.push_back(tr.states[i][0].imag());
                }
                rows.push_back(row);
            }
            emit_table(out, cols, rows);
        } else if (*osc_cmd) {
            SchemeKind kind = parse_scheme_kind(osc_scheme);
            double w2 = osc_omega0 * osc_omega0;
            VectorField field{[w2](const State& x, double) {
                                  State o(2);
                                  o << x[1], -w2 * x[0];
                                  return o;
                              },
                              2, true, std::nullopt};
            State x(2);
            x << 1.0, 0.0;
            std::vector<std::vector<double>> rows;
            for (int i = 0; i <= osc_steps; ++i) {
                double energy = std::norm(x[1]) + w2 * std::norm(x[0]);
                rows.push_back({i * osc_mu, x[0].real(), x[1].real(), energy});
                if (i < osc_steps)
                    x = step(kind, field, x, i * osc_mu, osc_mu);
            }
            emit_table(out, {"t", "q", "p", "energy"}, rows);
        } else if (*q_cmd) {
            QParams params(q_value);
            if (global_tol > 0.0) params.series_tol = global_tol;
            std::vector<std::vector<double>> rows;
            for (int i = 0; i <= qx_n; ++i) {
                double x = qx_lo + (qx_hi - qx_lo) * i / qx_n;
                Complex e = q_exp_product(Complex(x, 0.0), params);
                auto [cq, sq] = q_trig(x, params);
                rows.push_back({x, e.real(), cq, sq});
            }
            emit_table(out, {"x", "Eq", "Cos_q", "Sin_q"}, rows);
        } else if (*lie_cmd) {
            TimeScale ts = parse_scale_spec(lie_scale);
            QuadraticGroupSpec g = lie_group == "so2"
                                       ? QuadraticGroupSpec::orthogonal(2)
                                   : lie_group == "so3"
                                       ? QuadraticGroupSpec::orthogonal(3)
                                   : lie_group == "su2"
                                       ? QuadraticGroupSpec::unitary(2)
                                       : QuadraticGroupSpec::symplectic(2);
            auto gen = [&](double) {
                Matrix a;
                if (lie_group == "so2") {
                    a = Matrix::Zero(2, 2);
                    a(0, 1) = -lie_coeff;
                    a(1, 0) = lie_coeff;
                } else if (lie_group == "so3") {
                    a = Matrix::Zero(3, 3);
                    a(0, 1) = -lie_coeff;
                    a(1, 0) = lie_coeff;
                    a(1, 2) = -0.5 * lie_coeff;
                    a(2, 1) = 0.5 * lie_coeff;
                } else if (lie_group == "su2") {
                    a = Matrix(2, 2);
                    Complex i(0, 1);
                    a << i * lie_coeff, Complex(0.5, 0), Complex(-0.5, 0),
                        -i * lie_coeff;
                } else {
                    a = Matrix(2, 2);
                    a << 0.3 * lie_coeff, lie_coeff, -lie_coeff, -0.3 * lie_coeff;
                }
                return a;
            };
            LieFlowProblem prob{g, gen, Matrix::Identity(g.n, g.n), ts};
            json arr = json::array();
            for (const auto& s : flow(prob, ts.min(), ts.max())) {
                json row;
                row["t"] = s.t;
                row["defect"] = s.defect;
                json phi = json::array();
                for (int r = 0; r < g.n; ++r)
                    for (int c = 0; c < g.n; ++c) {
                        if (g.complex_field)
                            phi.push_back({s.Phi(r, c).real(), s.Phi(r, c).imag()});
                        else
                            phi.push_back(s.Phi(r, c).real());
                    }
                row["Phi"] = phi;
                arr.push_back(row);
            }
            out.stream() << arr.dump(2) << "\n";
        } else if (*verify_cmd) {
            return run_verify(verify_names, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
