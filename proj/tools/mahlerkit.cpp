#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mahlerkit/json_io.hpp"
#include "mahlerkit/linrep.hpp"
#include "mahlerkit/mahler_eq.hpp"
#include "mahlerkit/multdecomp.hpp"
#include "mahlerkit/negligible.hpp"
#include "mahlerkit/ore.hpp"
#include "mahlerkit/report.hpp"

using namespace mahlerkit;
using io::json;

namespace {

// Exit codes: 0 = success / verdict computed, 1 = verified-failure verdict,
// 2 = usage or input error.
constexpr int kOk = 0;
constexpr int kFailedVerdict = 1;
constexpr int kUsage = 2;

void emit(const json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::invalid_argument("cannot open output file '" + output_path + "'");
        out << j.dump(2) << "\n";
    }
}

json parse_inline(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(what + ": " + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::vector<Rational> sequence_values_from_1(const std::string& path, long order) {
    return io::load_sequence_file(path).values_from_1(order);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mahlerkit: exact computation with Mahler equations, regular sequences, "
                 "and multiplicative decompositions"};
    app.require_subcommand(1);

    std::string input, output, poly_arg, p_arg, q_arg, num_arg, den_arg, format = "json";
    long k = 2, order = 64, n_arg = 64, q_prime = 3, max_dim = 10;
    long d_m = 3, d_x = 4, d_r = 2, r_max = 8, s_max = -1, l_arg = 2, residue = 0, subst_n = 1;
    long range = 60;
    std::optional<long> p_override;

    auto add_io = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input) cmd->add_option("--input", input, "sequence file (JSON or b-file)")->required();
        cmd->add_option("--output", output, "write the JSON result to a file");
    };

    auto* cmd_decompose = app.add_subcommand("decompose", "decompose a multiplicative sequence");
    cmd_decompose->add_option("--k", k, "Mahler base")->required();
    cmd_decompose->add_option("--order", order, "number of values f(1..N) to use")->required();
    long p_flag = 0;
    cmd_decompose->add_option("--p", p_flag, "prime override for non-prime-power bases");
    cmd_decompose->add_option("--rmax", r_max, "exponent bound for the n^r chi(n) search");
    add_io(cmd_decompose);

    auto* cmd_synth = app.add_subcommand("synthesize", "evaluate a decomposition to f(1..n)");
    cmd_synth->add_option("--n", n_arg, "range")->required();
    add_io(cmd_synth);

    auto* cmd_verify = app.add_subcommand("verify-eq", "verify a Mahler equation against a series");
    std::string eq_path;
    cmd_verify->add_option("--eq", eq_path, "equation JSON file")->required();
    cmd_verify->add_option("--order", order, "series truncation order")->required();
    add_io(cmd_verify);

    auto* cmd_negl = app.add_subcommand("negligible", "negligibility certificate for a polynomial");
    cmd_negl->add_option("--k", k, "Mahler base")->required();
    cmd_negl->add_option("--poly", poly_arg, "polynomial as inline JSON array")->required();
    cmd_negl->add_option("--output", output, "write the JSON result to a file");

    auto* cmd_preceq = app.add_subcommand("preceq", "bounded check of the P <= Q preorder");
    cmd_preceq->add_option("--k", k, "Mahler base")->required();
    cmd_preceq->add_option("--p", p_arg, "P as inline JSON array")->required();
    cmd_preceq->add_option("--q", q_arg, "Q as inline JSON array")->required();
    cmd_preceq->add_option("--smax", s_max, "witness exponent bound (default from deg P)");
    cmd_preceq->add_option("--output", output, "write the JSON result to a file");

    auto* cmd_reduce = app.add_subcommand("reduce-rational", "reduced order-1 equation for P/Q at base k^n");
    cmd_reduce->add_option("--num", num_arg, "P as inline JSON array")->required();
    cmd_reduce->add_option("--den", den_arg, "Q as inline JSON array")->required();
    cmd_reduce->add_option("--k", k, "Mahler base")->required();
    cmd_reduce->add_option("--n", subst_n, "power of the base")->required();
    cmd_reduce->add_option("--output", output, "write the JSON result to a file");

    auto* cmd_cartier = app.add_subcommand("cartier", "Cartier section of a sequence's series");
    cmd_cartier->add_option("--l", l_arg, "modulus")->required();
    cmd_cartier->add_option("--r", residue, "residue class")->required();
    cmd_cartier->add_option("--order", order, "series truncation order")->required();
    add_io(cmd_cartier);

    auto* cmd_linrep = app.add_subcommand("guess-linrep", "guess a base-k linear representation");
    cmd_linrep->add_option("--k", k, "base")->required();
    cmd_linrep->add_option("--max-dim", max_dim, "dimension bound");
    cmd_linrep->add_option("--order", order, "number of values f(0..N) to use")->required();
    add_io(cmd_linrep);

    auto* cmd_lrs = app.add_subcommand("guess-lrs", "minimal linear recurrence from values");
    cmd_lrs->add_option("--order", order, "number of values to use (default: whole file)");
    add_io(cmd_lrs);

    auto* cmd_minop = app.add_subcommand("min-operator", "minimal inhomogeneous Mahler operator by guessing");
    cmd_minop->add_option("--k", k, "Mahler base")->required();
    cmd_minop->add_option("--dm", d_m, "operator degree bound in M_k");
    cmd_minop->add_option("--dx", d_x, "coefficient degree bound");
    cmd_minop->add_option("--dr", d_r, "rational right-hand side degree bound");
    cmd_minop->add_option("--order", order, "series truncation order")->required();
    add_io(cmd_minop);

    auto* cmd_gq = app.add_subcommand("gq", "G_q series and its q^2-support report");
    cmd_gq->add_option("--q", q_prime, "odd prime")->required();
    cmd_gq->add_option("--order", order, "series truncation order")->required();
    add_io(cmd_gq);

    auto* cmd_avg = app.add_subcommand("avg-check", "unit-root averaging identity check");
    cmd_avg->add_option("--q", q_prime, "odd prime")->required();
    cmd_avg->add_option("--order", order, "series truncation order")->required();
    add_io(cmd_avg);

    auto* cmd_chi = app.add_subcommand("classify-chi", "classify a multiplicative eventually periodic function");
    cmd_chi->add_option("--range", range, "multiplicativity check range");
    add_io(cmd_chi);

    auto* cmd_report = app.add_subcommand("report", "run the verification suite");
    cmd_report->add_option("--order", order, "main truncation order (default 5000)");
    cmd_report->add_option("--format", format, "json or text");
    cmd_report->add_option("--output", output, "write the JSON result to a file");

    order = 0;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*cmd_decompose) {
            if (p_flag > 0) p_override = p_flag;
            std::vector<Rational> values = sequence_values_from_1(input, order);
            try {
                MultiplicativeDecomposition dec = decompose(values, k, p_override, r_max);
                emit(io::to_json(dec), output);
                return kOk;
            } catch (const DecomposeError& e) {
                emit(json{{"error", e.what()}}, output);
                return kFailedVerdict;
            }
        }
        if (*cmd_synth) {
            MultiplicativeDecomposition dec = io::decomposition_from_json(load_json_file(input));
            std::vector<Rational> values = synthesize(dec, n_arg);
            json vals = json::array();
            for (const auto& v : values) vals.push_back(io::to_json(v));
            emit(json{{"offset", 1}, {"values", vals}}, output);
            return kOk;
        }
        if (*cmd_verify) {
            MahlerEquation<Rational> eq = io::equation_from_json(load_json_file(eq_path));
            TruncSeries<Rational> f = spec_to_series(io::load_sequence_file(input), order);
            auto res = verify_equation(eq, f);
            json out{{"verified", res.ok}, {"verified_order", res.verified_order}};
            if (!res.ok) {
                out["fail_exponent"] = res.fail_exponent;
                out["fail_value"] = io::to_json(res.fail_value);
            }
            emit(out, output);
            return res.ok ? kOk : kFailedVerdict;
        }
        if (*cmd_negl) {
            UniPoly<Rational> p = io::poly_from_json(parse_inline(poly_arg, "--poly"));
            emit(io::to_json(factor_negligible(p, k)), output);
            return kOk;
        }
        if (*cmd_preceq) {
            UniPoly<Rational> p = io::poly_from_json(parse_inline(p_arg, "--p"));
            UniPoly<Rational> q = io::poly_from_json(parse_inline(q_arg, "--q"));
            PreceqResult res = preceq(p, q, k, s_max);
            json out;
            switch (res.status) {
            case PreceqStatus::HoldsWithWitness:
                out = json{{"status", "HoldsWithWitness"},
                           {"s", res.s},
                           {"witness", io::to_json(res.witness)}};
                break;
            case PreceqStatus::FailsWithinBound:
                out = json{{"status", "FailsWithinBound"}, {"s_max", res.s}};
                break;
            case PreceqStatus::Unknown:
                out = json{{"status", "Unknown"}};
                break;
            }
            emit(out, output);
            return res.status == PreceqStatus::HoldsWithWitness ? kOk : kFailedVerdict;
        }
        if (*cmd_reduce) {
            UniPoly<Rational> p = io::poly_from_json(parse_inline(num_arg, "--num"));
            UniPoly<Rational> q = io::poly_from_json(parse_inline(den_arg, "--den"));
            emit(io::to_json(reduce_rational_equation(p, q, k, subst_n)), output);
            return kOk;
        }
        if (*cmd_cartier) {
            TruncSeries<Rational> f = spec_to_series(io::load_sequence_file(input), order);
            emit(io::to_json(cartier(f, l_arg, residue)), output);
            return kOk;
        }
        if (*cmd_linrep) {
            std::vector<Rational> values = io::load_sequence_file(input).values(order);
            auto res = kernel_guess(values, k, max_dim);
            if (auto* g = std::get_if<KernelGuess>(&res)) {
                json out = io::to_json(g->rep);
                out["verified_n"] = g->verified_n;
                emit(out, output);
                return kOk;
            }
            emit(json{{"error", "NoRepWithinBounds"},
                      {"reason", std::get<NoRepWithinBounds>(res).reason}},
                 output);
            return kFailedVerdict;
        }
        if (*cmd_lrs) {
            SequenceSpec spec = io::load_sequence_file(input);
            if (order <= 0 && !std::holds_alternative<ExplicitValues>(spec.source))
                throw std::invalid_argument("guess-lrs: --order is required for non-explicit sequence specs");
            std::vector<Rational> values =
                order > 0 ? spec.values(order) : std::get<ExplicitValues>(spec.source).values;
            auto res = berlekamp_massey(values);
            json out = io::to_json(res.spec);
            out["unique"] = res.unique;
            emit(out, output);
            return kOk;
        }
        if (*cmd_minop) {
            SequenceSpec spec = io::load_sequence_file(input);
            auto res = minimal_inhomogeneous_operator(spec, k, d_m, d_x, d_r, order);
            if (!res) {
                emit(json{{"error", "NoOperatorWithinBounds"}}, output);
                return kFailedVerdict;
            }
            json out = io::to_json(res->op);
            out["rhs"] = json{{"num", io::to_json(res->rhs.num())},
                              {"den", io::to_json(res->rhs.den())}};
            out["verified_order"] = res->verified_order;
            emit(out, output);
            return kOk;
        }
        if (*cmd_gq) {
            auto rep = gq_series(io::load_sequence_file(input), q_prime, order);
            json out{{"supported_on_q_squared", rep.supported_on_q_squared},
                     {"coefficients_rational", rep.coefficients_rational},
                     {"first_violation", rep.first_violation},
                     {"series", io::to_json(rep.series)}};
            emit(out, output);
            return rep.supported_on_q_squared ? kOk : kFailedVerdict;
        }
        if (*cmd_avg) {
            auto res = unit_root_avg_check(io::load_sequence_file(input), q_prime, order);
            emit(json{{"holds", res.holds}, {"fails_at", res.fails_at}}, output);
            return res.holds ? kOk : kFailedVerdict;
        }
        if (*cmd_chi) {
            EventuallyPeriodic chi = io::chi_from_json(load_json_file(input));
            auto res = classify_mult_ev_periodic(chi, range);
            json out;
            switch (res.verdict) {
            case ChiClass::Periodic: out = json{{"verdict", "Periodic"}}; break;
            case ChiClass::EventuallyZero: out = json{{"verdict", "EventuallyZero"}}; break;
            case ChiClass::NotMultiplicative:
                out = json{{"verdict", "NotMultiplicative"},
                           {"witness", json::array({res.witness_m, res.witness_n})}};
                break;
            }
            emit(out, output);
            return kOk;
        }
        if (*cmd_report) {
            RunConfig cfg;
            if (order > 0 && order < 16)
                throw std::invalid_argument("report: --order must be at least 16");
            if (order > 0) cfg.n = order;
            auto results = run_all_criteria(cfg);
            bool all_pass = true;
            if (format == "text") {
                for (const auto& r : results) {
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id
                              << ": " << r.name << " -- " << r.detail << "\n";
                    all_pass = all_pass && r.pass;
                }
            } else {
                json arr = json::array();
                for (const auto& r : results) {
                    arr.push_back(json{{"id", r.id},
                                       {"name", r.name},
                                       {"pass", r.pass},
                                       {"detail", r.detail}});
                    all_pass = all_pass && r.pass;
                }
                emit(json{{"all_pass", all_pass}, {"criteria", arr}}, output);
            }
            // Timings are nondeterministic, so they go to stderr only.
            for (const auto& r : results)
                std::cerr << "criterion " << r.id << ": " << r.millis << " ms\n";
            return all_pass ? kOk : kFailedVerdict;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
