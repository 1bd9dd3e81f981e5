#pragma once

// Command-line front door. Subcommands: decompose, adjoint, geneig, check,
// sweep, wavepacket. Reports go to stdout (or --out / --csv), diagnostics to
// stderr. Exit codes: 0 all pass, 1 inequality violation, 2 hypothesis
// violation, 3 input error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kreinalg/decomposition.hpp"
#include "kreinalg/json_io.hpp"
#include "kreinalg/operators.hpp"
#include "kreinalg/pencil.hpp"
#include "kreinalg/sweep.hpp"
#include "kreinalg/uncertainty.hpp"
#include "kreinalg/wavepacket.hpp"

namespace krein {
namespace cli {

namespace detail {

inline void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError("cannot write output file: " + out_path);
    f << text;
}

inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline int run(std::vector<std::string> args) {
    CLI::App app{"finite-dimensional Krein-space linear algebra and uncertainty relations",
                 "kreinalg"};
    app.require_subcommand(1);

    auto* dec = app.add_subcommand(
        "decompose", "canonical decomposition and fundamental symmetry of a Gram matrix");
    std::string dec_gram, dec_pos, dec_neg, dec_out;
    dec->add_option("--gram", dec_gram, "hermitian Gram matrix (JSON)")->required();
    dec->add_option("--basis-pos", dec_pos, "columns spanning the positive subspace (JSON)");
    dec->add_option("--basis-neg", dec_neg, "columns spanning the negative subspace (JSON)");
    dec->add_option("--out", dec_out, "write the JSON report here instead of stdout");

    auto* adj = app.add_subcommand("adjoint", "Krein adjoint J A^H J of an operator");
    std::string adj_op, adj_sym, adj_out;
    adj->add_option("--op", adj_op, "operator matrix (JSON)")->required();
    adj->add_option("--symmetry", adj_sym, "fundamental symmetry J (JSON)")->required();
    adj->add_option("--out", adj_out, "write the JSON matrix here instead of stdout");

    auto* gen = app.add_subcommand("geneig", "generalized eigenproblem A x = lambda B x");
    std::string gen_a, gen_b, gen_out;
    double gen_tol = 1e-10;
    gen->add_option("--A", gen_a, "hermitian A (JSON)")->required();
    gen->add_option("--B", gen_b, "hermitian B (JSON)")->required();
    gen->add_option("--tol", gen_tol, "degeneracy/hermiticity tolerance (default 1e-10)");
    gen->add_option("--out", gen_out, "write the JSON report here instead of stdout");

    auto* chk = app.add_subcommand("check", "evaluate one uncertainty relation on explicit data");
    std::string chk_rel, chk_a, chk_b, chk_j, chk_state, chk_form = "B2", chk_out;
    double chk_a_im = 0.0, chk_beta = 0.0;
    chk->add_option("--relation", chk_rel, "relation id (e.g. schrodinger-krein, aj-thm72)")
        ->required();
    chk->add_option("--A", chk_a, "operator A (JSON)")->required();
    chk->add_option("--B", chk_b, "operator B (JSON)")->required();
    chk->add_option("--J", chk_j, "fundamental symmetry J (JSON); identity when omitted");
    chk->add_option("--state", chk_state, "unit state column vector (JSON)")->required();
    chk->add_option("--a-im", chk_a_im, "imaginary part of the commutator constant a");
    chk->add_option("--beta", chk_beta, "deformation parameter for the gup relations");
    chk->add_option("--form", chk_form, "gup commutator form: B2 or BstarB (default B2)")
        ->check(CLI::IsMember({"B2", "BstarB"}));
    chk->add_option("--out", chk_out, "write the JSON report here instead of stdout");

    auto* swp = app.add_subcommand("sweep", "randomized property sweep over one relation");
    std::string swp_rel, swp_out;
    std::size_t swp_dim = 4, swp_trials = 100;
    std::uint64_t swp_seed = 0;
    double swp_tol = kPassTol, swp_a_im = 2.0, swp_beta = 0.0;
    swp->add_option("--relation", swp_rel, "relation id")->required();
    swp->add_option("--dim", swp_dim, "space dimension, in [2,32] (default 4)");
    swp->add_option("--trials", swp_trials, "number of random trials (default 100)");
    swp->add_option("--seed", swp_seed, "base seed; trial k uses seed XOR k (default 0)");
    swp->add_option("--tol", swp_tol, "margin tolerance (default 1e-8)");
    swp->add_option("--a-im", swp_a_im, "commutator constant a = i*a_im for aj relations");
    swp->add_option("--beta", swp_beta, "deformation parameter (recorded in the header)");
    swp->add_option("--out", swp_out, "write the CSV here instead of stdout");

    auto* wav = app.add_subcommand("wavepacket", "Gaussian packet widths and sampled |f(x)|^2");
    double wav_alpha = 1.0, wav_k0 = 0.0;
    std::size_t wav_n = 64;
    double wav_xmin = 0.0, wav_xmax = 0.0;
    bool wav_have_xmin = false, wav_have_xmax = false;
    std::string wav_csv;
    wav->add_option("--alpha", wav_alpha, "Gaussian sharpness alpha > 0")->required();
    wav->add_option("--k0", wav_k0, "carrier wave number (default 0)");
    wav->add_option("--grid", wav_n, "number of grid points (default 64, minimum 8)");
    wav->add_option("--xmin", wav_xmin, "left grid edge (default -8 sqrt(2 alpha))")
        ->each([&](const std::string&) { wav_have_xmin = true; });
    wav->add_option("--xmax", wav_xmax, "right grid edge (default +8 sqrt(2 alpha))")
        ->each([&](const std::string&) { wav_have_xmax = true; });
    wav->add_option("--csv", wav_csv, "write the CSV here instead of stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends: print to stdout, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (app.got_subcommand(dec)) {
            const GramForm q(load_matrix(dec_gram));
            if (dec_pos.empty() != dec_neg.empty())
                throw InputError("--basis-pos and --basis-neg must be given together");
            const CanonicalDecomposition d =
                dec_pos.empty() ? decompose_spectral(q)
                                : decompose_from_basis(q, load_matrix(dec_pos),
                                                       load_matrix(dec_neg));
            nlohmann::json rep;
            rep["p_plus"] = matrix_to_json(d.p_plus);
            rep["p_minus"] = matrix_to_json(d.p_minus);
            rep["j"] = matrix_to_json(d.j);
            rep["signature"] = {d.n_plus(), d.n_minus()};
            detail::emit(dec_out, rep.dump(2) + "\n");
            return 0;
        }

        if (app.got_subcommand(adj)) {
            const Matrix a = load_matrix(adj_op);
            const Matrix j = load_matrix(adj_sym);
            validate_symmetry(j);
            detail::emit(adj_out, matrix_to_json(krein_adjoint(a, j)).dump(2) + "\n");
            return 0;
        }

        if (app.got_subcommand(gen)) {
            const Matrix a = load_matrix(gen_a);
            const Matrix b = load_matrix(gen_b);
            const GenEigReport report = solve_pencil(a, b, gen_tol);
            nlohmann::json rep;
            rep["degenerate"] = report.degenerate;
            rep["note"] = report.note;
            rep["pairs"] = nlohmann::json::array();
            for (const auto& p : report.pairs) {
                nlohmann::json pj;
                pj["lambda"] = {p.lambda.real(), p.lambda.imag()};
                pj["class"] = to_string(p.sign_class);
                pj["vector"] = matrix_to_json(p.vector);
                rep["pairs"].push_back(std::move(pj));
            }
            detail::emit(gen_out, rep.dump(2) + "\n");
            return 0;
        }

        if (app.got_subcommand(chk)) {
            const RelationId id = relation_from_string(chk_rel);
            const Matrix a = load_matrix(chk_a);
            const Matrix b = load_matrix(chk_b);
            const Matrix j = chk_j.empty() ? Matrix::identity(a.rows()) : load_matrix(chk_j);
            const StateVector state{load_matrix(chk_state)};

            std::optional<CommutatorSpec> spec;
            if (id == RelationId::AJ_Thm72 || id == RelationId::AJ_Thm73 ||
                id == RelationId::AJ_Thm74)
                spec.emplace(cplx{0.0, chk_a_im}, 0.0, CommutatorForm::aJ);
            else if (id == RelationId::GUP_Krein || id == RelationId::GUP_Hilbert)
                spec.emplace(cplx{0.0, chk_a_im}, chk_beta,
                             chk_form == "B2" ? CommutatorForm::aI_plus_beta_B2
                                              : CommutatorForm::aI_plus_beta_BstarB);

            const UncertaintyReport rep = verify_relation(id, a, b, j, state, spec);
            nlohmann::json out;
            out["relation"] = to_string(rep.relation_id);
            out["lhs"] = rep.lhs;
            out["rhs"] = rep.rhs;
            out["margin"] = rep.margin;
            out["shift_a"] = rep.shift_a;
            out["shift_b"] = rep.shift_b;
            out["hypothesis_residual"] = rep.hypothesis_residual;
            out["jphi_phi"] = rep.jphi_phi;
            out["neutral_state"] = rep.neutral_state;
            out["status"] = to_string(rep.status);
            detail::emit(chk_out, out.dump(2) + "\n");
            switch (rep.status) {
                case RelationStatus::Pass: return 0;
                case RelationStatus::Fail: return 1;
                case RelationStatus::FailHypothesis: return 2;
            }
            return 3;
        }

        if (app.got_subcommand(swp)) {
            SweepConfig config;
            config.relation = relation_from_string(swp_rel);
            config.dim = swp_dim;
            config.trials = swp_trials;
            config.seed = swp_seed;
            config.tol = swp_tol;
            config.a_im = swp_a_im;
            config.beta = swp_beta;
            const SweepOutcome outcome = run_sweep(config);
            std::ostringstream csv;
            write_sweep_csv(csv, config, outcome.rows);
            detail::emit(swp_out, csv.str());
            return outcome.exit_code;
        }

        if (app.got_subcommand(wav)) {
            const WavePacketParams params{wav_alpha, wav_k0};
            const double reach = 8.0 * std::sqrt(2.0 * wav_alpha);
            const Grid grid{wav_have_xmin ? wav_xmin : -reach,
                            wav_have_xmax ? wav_xmax : reach, wav_n};
            const std::vector<PacketSample> samples = sampled_packet(grid, params);
            const GaussianWidths widths = gaussian_widths(params);
            std::ostringstream csv;
            csv << "# alpha=" << detail::fmt17(wav_alpha) << " k0=" << detail::fmt17(wav_k0)
                << " n=" << grid.n << " x_min=" << detail::fmt17(grid.x_min)
                << " x_max=" << detail::fmt17(grid.x_max) << "\n";
            csv << "x,f2_numeric,f2_closed\n";
            for (const auto& s : samples)
                csv << detail::fmt17(s.x) << "," << detail::fmt17(s.f2_numeric) << ","
                    << detail::fmt17(s.f2_closed) << "\n";
            csv << "dx,dk,product\n";
            csv << detail::fmt17(widths.dx) << "," << detail::fmt17(widths.dk) << ","
                << detail::fmt17(widths.product) << "\n";
            detail::emit(wav_csv, csv.str());
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace cli
}  // namespace krein
