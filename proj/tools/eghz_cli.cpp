// Copyright 2026 The eghz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit status: 0 success, 1 invalid input or state,
// 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "eghz/eghz.hpp"

namespace {

using namespace eghz;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateArgs {
    std::string params;
    std::string state;

    void attach(CLI::App *cmd) {
        cmd->add_option("--params", params, "x,y1,y2,y3 (decimals or fractions like 1/8)");
        cmd->add_option("--state", state, "JSON state file: params, matrix or amplitudes");
    }

    /// Parameters from --params verbatim, or from --state. Twirled states
    /// are rounded to 12 significant digits, the precision `twirl` prints,
    /// so both routes agree byte for byte.
    ExtSymParams resolve() const {
        if (params.empty() == state.empty()) throw UsageError("give exactly one of --params or --state");
        if (!params.empty()) return parse_params(params);
        const auto input = load_state_file(state);
        if (const auto *p = std::get_if<ExtSymParams>(&input)) return *p;
        ExtSymParams p;
        if (const auto *m = std::get_if<ComplexMatrix>(&input)) {
            p = twirl_density_extended(*m);
        } else {
            p = twirl_pure_extended(std::get<PureState3>(input));
        }
        return {round12(p.x), round12(p.y1), round12(p.y2), round12(p.y3)};
    }
};

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ValidationError(out_path + ": cannot open for writing");
    out << text;
}

ExtSymParams require_valid(const ExtSymParams &p) {
    auto v = validate_extended(p);
    if (!v) throw PhysicalityError("parameters are not physical: " + v.summary());
    return p;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Classify extended GHZ-symmetric three-qubit states"};
    app.require_subcommand(1, 1);
    std::string out_path;
    app.add_option("-o,--out", out_path, "write output to this file instead of stdout");

    double v0 = kDefaultV0;
    std::uint64_t seed = 42;

    StateArgs classify_args;
    auto *classify = app.add_subcommand("classify", "rough SLOCC class interval as JSON");
    classify_args.attach(classify);
    classify->add_option("--v0", v0, "GHZ\\W witness parameter")->capture_default_str();

    std::string twirl_state, twirl_amplitudes, family = "extended";
    auto *twirl = app.add_subcommand("twirl", "project a state onto a symmetric family");
    twirl->add_option("--state", twirl_state, "JSON state file");
    twirl->add_option("--amplitudes", twirl_amplitudes, "16 comma-separated numbers: re,im of psi_000..psi_111");
    twirl->add_option("--family", family)->check(CLI::IsMember({"extended", "ghz"}))->capture_default_str();

    std::string slice_name;
    int resolution = 101;
    auto *boundary = app.add_subcommand("boundary", "separable boundary along a slice as CSV");
    boundary->add_option("--slice", slice_name)->required()->check(CLI::IsMember({"equal", "anti", "axis"}));
    boundary->add_option("--resolution", resolution)->capture_default_str()->check(CLI::Range(2, 1000000));

    StateArgs ppt_args;
    auto *ppt = app.add_subcommand("ppt", "PPT report as JSON");
    ppt_args.attach(ppt);

    StateArgs witness_args;
    std::string kind;
    auto *witness = app.add_subcommand("witness", "witness expectation value");
    witness_args.attach(witness);
    witness->add_option("--kind", kind)->required()->check(CLI::IsMember({"bisep", "w", "ghz"}));
    witness->add_option("--v0", v0)->capture_default_str();

    std::size_t n_samples = 10000;
    unsigned workers = 0;
    auto *sample = app.add_subcommand("sample", "Monte-Carlo verdict frequencies over the polytope");
    sample->add_option("--n", n_samples)->capture_default_str()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed)->capture_default_str();
    sample->add_option("--workers", workers, "0 = hardware concurrency")->capture_default_str();
    sample->add_option("--v0", v0)->capture_default_str();

    std::size_t n_pairs = 1000;
    auto *conjecture = app.add_subcommand("conjecture", "compare states sharing x and y1+y2+y3");
    conjecture->add_option("--pairs", n_pairs)->capture_default_str()->check(CLI::PositiveNumber);
    conjecture->add_option("--seed", seed)->capture_default_str();
    conjecture->add_option("--v0", v0)->capture_default_str();

    std::string figure_id;
    std::size_t n_images = 2000;
    auto *figure = app.add_subcommand("figure", "figure data tables");
    figure->add_option("--id", figure_id)->required()->check(CLI::IsMember({"fig3a", "fig3b", "fig3c", "fig4"}));
    figure->add_option("--resolution", resolution)->capture_default_str()->check(CLI::Range(2, 1000000));
    figure->add_option("--seed", seed)->capture_default_str();
    figure->add_option("--images", n_images, "LP columns per row")->capture_default_str()->check(CLI::Range(10, 10000000));
    figure->add_option("--v0", v0)->capture_default_str();

    int ghz_resolution = 2001;
    auto *ghz_boundary = app.add_subcommand("ghz-boundary", "separable boundary of GHZ-symmetric states as CSV");
    ghz_boundary->add_option("--resolution", ghz_resolution)->capture_default_str()->check(CLI::Range(2, 1000000));

    std::string alphas;
    double beta = 0.0;
    auto *four = app.add_subcommand("four-qubit", "four-qubit GHZ-like state and its spectrum");
    four->add_option("--alphas", alphas, "alpha1,alpha2,alpha3")->required();
    four->add_option("--beta", beta)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        ClassifyOptions options{v0};
        if (classify->parsed()) {
            const auto p = require_valid(classify_args.resolve());
            emit(to_json(classify_extended(p, options)).dump(2) + "\n", out_path);
        } else if (twirl->parsed()) {
            if (twirl_state.empty() == twirl_amplitudes.empty()) {
                throw UsageError("give exactly one of --state or --amplitudes");
            }
            StateInput input;
            if (!twirl_amplitudes.empty()) {
                const auto v = parse_number_list(twirl_amplitudes);
                if (v.size() != 16) throw ValidationError("--amplitudes: expected 16 numbers, got " + std::to_string(v.size()));
                PureState3 s;
                for (std::size_t i = 0; i < 8; ++i) s.amplitudes[i] = Complex(v[2 * i], v[2 * i + 1]);
                input = s;
            } else {
                input = load_state_file(twirl_state);
            }
            json doc;
            if (family == "ghz") {
                GhzSymParams q;
                if (const auto *s = std::get_if<PureState3>(&input)) {
                    q = twirl_pure_ghz(*s);
                } else if (const auto *m = std::get_if<ComplexMatrix>(&input)) {
                    q = project_to_ghz(twirl_density_extended(*m));
                } else {
                    q = project_to_ghz(std::get<ExtSymParams>(input));
                }
                doc = to_json(q);
            } else {
                ExtSymParams p;
                if (const auto *s = std::get_if<PureState3>(&input)) {
                    p = twirl_pure_extended(*s);
                } else if (const auto *m = std::get_if<ComplexMatrix>(&input)) {
                    p = twirl_density_extended(*m);
                } else {
                    p = require_valid(std::get<ExtSymParams>(input));
                }
                doc = to_json(p);
            }
            emit(doc.dump(2) + "\n", out_path);
        } else if (boundary->parsed()) {
            emit(slice_table_csv(slice_boundary(*slice_from_string(slice_name), resolution)), out_path);
        } else if (ppt->parsed()) {
            emit(to_json(ppt_report(require_valid(ppt_args.resolve()))).dump(2) + "\n", out_path);
        } else if (witness->parsed()) {
            const auto p = require_valid(witness_args.resolve());
            const Witness w = kind == "bisep" ? Witness::bisep() : kind == "w" ? Witness::w() : Witness::ghz(v0);
            emit(format_number(witness_trace(w, p)) + "\n", out_path);
        } else if (sample->parsed()) {
            emit(to_json(estimate_volumes(n_samples, seed, workers, options)).dump(2) + "\n", out_path);
        } else if (conjecture->parsed()) {
            emit(to_json(conjecture_scan(n_pairs, seed, options)).dump(2) + "\n", out_path);
        } else if (figure->parsed()) {
            emit(emit_figure(*figure_from_string(figure_id), resolution, {seed, n_images, v0}), out_path);
        } else if (ghz_boundary->parsed()) {
            emit(polyline_csv(ghz_symmetric_separable_boundary(ghz_resolution), "y", "x"), out_path);
        } else if (four->parsed()) {
            const auto a = parse_number_list(alphas);
            if (a.size() != 3) throw ValidationError("--alphas: expected three values alpha1,alpha2,alpha3");
            const FourQubitParams f{a[0], a[1], a[2], beta};
            const auto m = make_four_qubit(f);
            json eig = json::array();
            for (double e : eig_hermitian(m)) eig.push_back(round12(e));
            json doc = {{"alpha1", round12(f.alpha1)}, {"alpha2", round12(f.alpha2)}, {"alpha3", round12(f.alpha3)},
                        {"beta", round12(f.beta)},     {"trace", round12(m.trace().real())}, {"eigenvalues", eig}};
            emit(doc.dump(2) + "\n", out_path);
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
