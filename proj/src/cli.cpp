// SPDX-License-Identifier: Apache-2.0
//
// ballcover: explicit coverings of finite-dimensional unit balls
// Copyright (C) 2026 The ballcover authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "ballcover/cli.hpp"

#include "ballcover/bounds.hpp"
#include "ballcover/coverings.hpp"
#include "ballcover/frames.hpp"
#include "ballcover/io.hpp"
#include "ballcover/selftest.hpp"
#include "ballcover/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace ballcover::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_p(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return kInfinity;
    std::size_t used = 0;
    double p = 0.0;
    try {
        p = std::stod(s, &used);
    } catch (const std::logic_error&) {
        throw UsageError("--p: expected a number or inf, got '" + s + "'");
    }
    if (used != s.size()) throw UsageError("--p: expected a number or inf, got '" + s + "'");
    return p;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::logic_error&) {
        }
        throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
    }
    return kDefaultSeed;
}

struct Options {
    bool json = false;

    // hadamard / etf
    std::size_t order = 0;

    // shared geometry
    std::size_t d = 0;
    std::string p = "2";
    double mu = 0.0;
    std::optional<std::uint64_t> seed;
    std::string in;
    std::string out;

    // dict greedy
    std::size_t saturation = kDefaultSaturationTrials;
    std::size_t certify = 20000;

    // cover build
    std::string construction;
    unsigned iterate = 1;
    double basis_constant = 1.0;
    std::string dict_file;

    // cover verify
    std::size_t samples = 10000;
    std::size_t adversarial = 0;
    std::size_t steps = 200;
    bool timing = false;

    // witness
    std::string centers;

    // bounds
    std::string delta_grid;
    std::string csv;
    double eps = 1.0;
    BoundConstants constants;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    std::uint64_t seed() const { return o_.seed ? *o_.seed : default_seed(); }

    void emit(const Json& j, const std::string& human) {
        if (o_.json) {
            out_ << dump_json(j);
        } else {
            out_ << human;
        }
    }

    void save(const Json& j) {
        if (!o_.out.empty()) write_text_file(o_.out, dump_json(j));
    }

    int hadamard() {
        if (!hadamard_order_admissible(o_.order)) {
            throw std::invalid_argument("no Hadamard matrix of order " + std::to_string(o_.order) +
                                        " exists (orders are 1, 2 or multiples of 4)");
        }
        if (!hadamard_order_available(o_.order)) {
            throw std::invalid_argument("order " + std::to_string(o_.order) +
                                        " is admissible but only powers of two up to " +
                                        std::to_string(kMaxHadamardOrder) + " are constructed");
        }
        const HadamardMatrix h = hadamard_of_order(o_.order);
        const Json j = hadamard_to_json(h);
        save(j);
        std::string human = "hadamard order " + std::to_string(h.order()) + ": verified\n";
        if (h.order() <= 32) {
            for (std::size_t r = 0; r < h.order(); ++r) {
                for (std::size_t c = 0; c < h.order(); ++c) human += h(r, c) > 0 ? '+' : '-';
                human += '\n';
            }
        }
        emit(j, human);
        return kExitOk;
    }

    int etf() {
        const TightFrame f = etf_from_hadamard(hadamard_of_order(o_.order));
        const Dictionary dict = dictionary_from_frame(f);
        const double mu = dict.size() >= 2 ? coherence(dict) : 0.0;
        Vector x(f.dim, 0.0);
        x[0] = 1.0;
        const FrameResiduals res = verify_frame_identities(f, x);
        Json j;
        j["dim"] = f.dim;
        j["size"] = f.vectors.size();
        j["coherence"] = mu;
        j["worst_identity_residual"] = res.worst();
        j["vectors"] = points_to_json(f.vectors);
        save(j);
        emit(j, "etf: " + std::to_string(f.vectors.size()) + " vectors in R^" + std::to_string(f.dim) +
                    ", coherence " + Json(mu).dump() + ", identity residual " + Json(res.worst()).dump() + "\n");
        return kExitOk;
    }

    // Greedy dictionary plus maximality certification; nullopt when a
    // counterexample cannot be admitted.
    std::optional<Dictionary> certified_dictionary(const LpSpace& space, double mu) {
        const std::uint64_t s = seed();
        Dictionary dict = [&] {
            if (!o_.dict_file.empty()) {
                DictionaryFile f = dictionary_from_json(read_json_file(o_.dict_file));
                if (!(f.dictionary.space() == space)) throw std::invalid_argument("--dict: space does not match --d/--p");
                return std::move(f.dictionary);
            }
            return greedy_maximal_dictionary(space, mu, split_seed(s, 0), o_.saturation);
        }();
        if (o_.certify == 0) return dict;
        MaximalityResult mx = certify_maximality(dict, mu, o_.certify, split_seed(s, 1));
        if (!mx.passed) {
            err_ << "maximality certification failed: a sampled unit vector violates the coherence bound one-sidedly\n";
            return std::nullopt;
        }
        if (mx.augmentations > 0) {
            err_ << "maximality certification admitted " << mx.augmentations << " more vectors\n";
        }
        return std::move(mx.dictionary);
    }

    int dict_greedy() {
        const LpSpace space(o_.d, parse_p(o_.p));
        auto dict = certified_dictionary(space, o_.mu);
        if (!dict) return kExitVerifyFailed;
        const Json j = dictionary_to_json(*dict, o_.mu, seed());
        save(j);
        emit(j, "dictionary: " + std::to_string(dict->size()) + " vectors in l_" + space.p_label() + "^" +
                    std::to_string(space.dim()) + " with coherence <= " + Json(o_.mu).dump() + "\n");
        return kExitOk;
    }

    int dict_coherence() {
        const DictionaryFile f = dictionary_from_json(read_json_file(o_.in));
        const double mu = coherence(f.dictionary);
        const std::size_t rank = numeric_rank(coherence_matrix(f.dictionary));
        Json j;
        j["size"] = f.dictionary.size();
        j["coherence"] = mu;
        j["coherence_matrix_rank"] = rank;
        emit(j, "size " + std::to_string(f.dictionary.size()) + ", coherence " + Json(mu).dump() +
                    ", coherence-matrix rank " + std::to_string(rank) + "\n");
        return kExitOk;
    }

    int cover_build() {
        const LpSpace space(o_.d, parse_p(o_.p));
        const std::string& c = o_.construction;
        const auto need_euclidean = [&] {
            if (!space.is_euclidean()) throw UsageError("--construction " + c + " requires --p 2");
        };
        std::optional<BallCovering> cov;
        if (c == "simplex") {
            need_euclidean();
            cov = simplex_cover_unit(o_.d).covering;
        } else if (c == "simplex-shrunk") {
            need_euclidean();
            cov = simplex_cover_shrunk(o_.d).covering;
        } else if (c == "etf") {
            need_euclidean();
            cov = etf_cover(o_.d).covering;
        } else if (c == "axis") {
            need_euclidean();
            cov = axis_cover(o_.d).covering;
        } else if (c == "basis") {
            cov = basis_cover(space, o_.basis_constant, smoothness_majorant_for(space));
        } else if (c == "simplex-search") {
            SimplexSearchResult r = banach_simplex_search(space, smoothness_majorant_for(space), o_.samples, seed());
            if (!r.covering) {
                err_ << "no step size in the search grid passed certification\n";
                return kExitVerifyFailed;
            }
            cov = std::move(*r.covering);
        } else if (c == "dict-l2" || c == "dict-banach") {
            if (c == "dict-l2") need_euclidean();
            auto dict = certified_dictionary(space, o_.mu);
            if (!dict) return kExitVerifyFailed;
            cov = c == "dict-l2" ? dictionary_cover_l2(*dict, o_.mu)
                                 : dictionary_cover_banach(*dict, o_.mu, smoothness_majorant_for(space));
        } else {
            throw UsageError("unknown construction '" + c + "'");
        }
        if (o_.iterate > 1) cov = iterate_cover(*cov, o_.iterate);
        const Json j = covering_to_json(*cov, seed());
        save(j);
        emit(j, "covering: " + std::to_string(cov->size()) + " " + (cov->closed ? "closed" : "open") +
                    " balls of radius " + Json(cov->radius).dump() + " in l_" + space.p_label() + "^" +
                    std::to_string(space.dim()) + "\n");
        return kExitOk;
    }

    int cover_verify() {
        const BallCovering cov = covering_from_json(read_json_file(o_.in));
        const std::uint64_t s = seed();
        const CoverageReport rep = certify_sampling(cov, o_.samples, o_.samples, split_seed(s, 0));
        Json j;
        j["sampling"] = report_to_json(rep, o_.timing);
        bool ok = rep.passed;
        std::string human = std::string("sampling: ") + (rep.passed ? "pass" : "FAIL") + ", " +
                            std::to_string(rep.samples_tested) + " points, worst margin " +
                            Json(rep.worst_margin).dump() + "\n";
        if (o_.adversarial > 0) {
            const AdversarialResult adv = adversarial_search(cov, o_.adversarial, o_.steps, split_seed(s, 1));
            const bool adv_ok = margin_passes(cov, adv.margin);
            ok = ok && adv_ok;
            j["adversarial"] = adversarial_to_json(adv);
            j["adversarial"]["passed"] = adv_ok;
            human += std::string("adversarial: ") + (adv_ok ? "pass" : "FAIL") + ", margin " +
                     Json(adv.margin).dump() + "\n";
        }
        j["passed"] = ok;
        j["seed"] = s;
        save(j);
        emit(j, human);
        return ok ? kExitOk : kExitVerifyFailed;
    }

    int witness() {
        const LpSpace space(o_.d, parse_p(o_.p));
        const PointSet centers = o_.centers.empty() ? sample_ball(space, o_.d, seed())
                                                    : centers_from_json(read_json_file(o_.centers));
        const WitnessResult w = uncovered_witness(space, centers);
        Json j;
        j["z"] = w.z;
        j["min_center_distance"] = w.min_center_distance;
        j["functional_gap"] = w.functional_gap;
        if (w.hull_distance) j["hull_distance"] = *w.hull_distance;
        j["seed"] = seed();
        save(j);
        emit(j, "uncovered point at distance " + Json(w.min_center_distance).dump() + " from the nearest center\n");
        return kExitOk;
    }

    int bounds_table() {
        const LpSpace space(o_.d, parse_p(o_.p));
        const auto rows = covering_bound_table(space, parse_delta_grid(o_.delta_grid), o_.constants);
        const std::string csv = bound_table_csv(rows);
        if (o_.constants.uncalibrated()) err_ << "note: constants C1 = C2 = C = 1 are uncalibrated\n";
        if (!o_.csv.empty()) {
            write_text_file(o_.csv, csv);
            if (!o_.json) out_ << "wrote " << rows.size() << " rows to " << o_.csv << "\n";
        } else if (!o_.json) {
            out_ << csv;
        }
        if (o_.json) {
            Json arr = Json::array();
            for (const BoundRow& r : rows) {
                arr.push_back({{"delta", r.delta},
                               {"mu", r.mu},
                               {"log_lower", r.log_lower},
                               {"log_volumetric_upper", r.log_volumetric_upper},
                               {"log_regime_upper", r.log_regime_upper},
                               {"log_iterated", r.log_iterated},
                               {"regime_flag", r.regime_flag}});
            }
            out_ << dump_json({{"uncalibrated", o_.constants.uncalibrated()}, {"rows", arr}});
        }
        return kExitOk;
    }

    int bounds_volumetric() {
        const VolumetricBounds b = volumetric_bounds(o_.d, o_.eps);
        Json j{{"log_lower", b.log_lower}, {"log_upper", b.log_upper}};
        if (auto v = b.lower()) j["lower"] = *v;
        if (auto v = b.upper()) j["upper"] = *v;
        emit(j, "log N lower " + Json(b.log_lower).dump() + ", upper " + Json(b.log_upper).dump() + "\n");
        return kExitOk;
    }

    int bounds_dictionary() {
        const LogBound l2 = ndmu_upper(o_.d, o_.mu, o_.constants);
        const double banach = ndmux_upper(o_.d, o_.mu, o_.constants);
        if (l2.outside_stated_range) err_ << "warning: mu < (2d)^(-1/2), outside the range where the bound is stated\n";
        Json j{{"log_ndmu_upper", l2.value},
               {"log_ndmux_upper", banach},
               {"outside_stated_range", l2.outside_stated_range},
               {"uncalibrated", o_.constants.uncalibrated()}};
        emit(j, "log N(d,mu) <= " + Json(l2.value).dump() + ", log N(d,mu,X) <= " + Json(banach).dump() +
                    (o_.constants.uncalibrated() ? " (uncalibrated constants)\n" : "\n"));
        return kExitOk;
    }

    int selftest() {
        const SelftestReport r = run_selftest(seed());
        if (o_.json) {
            out_ << dump_json({{"seed", seed()}, {"passed", r.passed}, {"report", r.text}});
        } else {
            out_ << r.text;
        }
        return r.passed ? kExitOk : kExitVerifyFailed;
    }

private:
    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Explicit coverings of finite-dimensional unit balls", "ballcover"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Machine-readable JSON on stdout");

    const auto seed_opt = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "RNG seed (default from BALLCOVER_SEED or built in)");
    };
    const auto space_opts = [&](CLI::App* sub) {
        sub->add_option("--d", o.d, "Dimension")->required()->check(CLI::PositiveNumber);
        sub->add_option("--p", o.p, "Exponent p > 1 or inf")->capture_default_str();
    };

    auto* had = app.add_subcommand("hadamard", "Construct and verify a Hadamard matrix");
    had->add_option("--order", o.order, "Matrix order")->required();
    had->add_option("--out", o.out, "Write JSON here");

    auto* etf = app.add_subcommand("etf", "Equiangular tight frame from a Hadamard matrix");
    etf->add_option("--order", o.order, "Hadamard order m (frame in R^(m-1))")->required();
    etf->add_option("--out", o.out, "Write JSON here");

    auto* dict = app.add_subcommand("dict", "Coherent dictionaries");
    dict->require_subcommand(1);
    auto* greedy = dict->add_subcommand("greedy", "Greedy maximal dictionary with maximality certification");
    space_opts(greedy);
    greedy->add_option("--mu", o.mu, "Coherence threshold")->required();
    seed_opt(greedy);
    greedy->add_option("--saturation", o.saturation, "Consecutive rejections that stop the greedy pass")
        ->capture_default_str();
    greedy->add_option("--certify", o.certify, "Consecutive clean samples for maximality (0 skips)")
        ->capture_default_str();
    greedy->add_option("--out", o.out, "Write JSON here");
    auto* coh = dict->add_subcommand("coherence", "Coherence of a dictionary file");
    coh->add_option("--in", o.in, "Dictionary JSON")->required();

    auto* cover = app.add_subcommand("cover", "Build or verify coverings");
    cover->require_subcommand(1);
    auto* build = cover->add_subcommand("build", "Build a covering");
    build->add_option("--construction", o.construction, "Construction")
        ->required()
        ->check(CLI::IsMember({"simplex", "simplex-shrunk", "etf", "dict-l2", "dict-banach", "axis", "basis",
                               "simplex-search"}));
    space_opts(build);
    build->add_option("--mu", o.mu, "Coherence threshold (dictionary constructions)");
    build->add_option("--iterate", o.iterate, "Compose the covering with itself M times")->check(CLI::PositiveNumber);
    build->add_option("--K", o.basis_constant, "Basis constant (basis construction)")->capture_default_str();
    build->add_option("--dict", o.dict_file, "Use this dictionary instead of building one");
    build->add_option("--certify", o.certify, "Consecutive clean samples for maximality (0 skips)")
        ->capture_default_str();
    build->add_option("--samples", o.samples, "Certification samples for simplex-search")->capture_default_str();
    seed_opt(build);
    build->add_option("--out", o.out, "Write JSON here")->required();
    auto* verify = cover->add_subcommand("verify", "Sampled and adversarial certification");
    verify->add_option("--in", o.in, "Covering JSON")->required();
    verify->add_option("--samples", o.samples, "Ball samples and, separately, sphere samples")->capture_default_str();
    verify->add_option("--adversarial", o.adversarial, "Adversarial restarts (0 skips)")->capture_default_str();
    verify->add_option("--steps", o.steps, "Steps per adversarial restart")->capture_default_str();
    verify->add_flag("--timing", o.timing, "Include elapsed time in the report");
    verify->add_option("--out", o.out, "Write the report JSON here");
    seed_opt(verify);

    auto* wit = app.add_subcommand("witness", "Uncovered point for d unit balls");
    space_opts(wit);
    wit->add_option("--centers", o.centers, "Centers JSON (random ball points when omitted)");
    wit->add_option("--out", o.out, "Write JSON here");
    seed_opt(wit);

    auto* bounds = app.add_subcommand("bounds", "Covering-number bounds");
    bounds->require_subcommand(1);
    const auto const_opts = [&](CLI::App* sub) {
        sub->add_option("--C1", o.constants.C1, "Constant of the l_2 dictionary bound")->capture_default_str();
        sub->add_option("--C2", o.constants.C2, "Constant of the Banach dictionary bound")->capture_default_str();
        sub->add_option("--C", o.constants.C_generic, "Constant of the iteration bounds")->capture_default_str();
    };
    auto* table = bounds->add_subcommand("table", "Bound table over a delta grid");
    space_opts(table);
    table->add_option("--delta-grid", o.delta_grid, "a:b:n")->required();
    table->add_option("--csv", o.csv, "Write CSV here (stdout when omitted)");
    const_opts(table);
    auto* vol = bounds->add_subcommand("volumetric", "Volumetric bounds on N_eps");
    vol->add_option("--d", o.d, "Dimension")->required()->check(CLI::PositiveNumber);
    vol->add_option("--eps", o.eps, "Radius in (0, 1]")->required();
    auto* dsz = bounds->add_subcommand("dictionary", "Dictionary-size bounds");
    dsz->add_option("--d", o.d, "Dimension")->required()->check(CLI::PositiveNumber);
    dsz->add_option("--mu", o.mu, "Coherence in (0, 1/2]")->required();
    const_opts(dsz);

    auto* self = app.add_subcommand("selftest", "Deterministic margin suite");
    seed_opt(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    Runner run(o, out, err);
    try {
        if (*had) return run.hadamard();
        if (*etf) return run.etf();
        if (*greedy) return run.dict_greedy();
        if (*coh) return run.dict_coherence();
        if (*build) return run.cover_build();
        if (*verify) return run.cover_verify();
        if (*wit) return run.witness();
        if (*table) return run.bounds_table();
        if (*vol) return run.bounds_volumetric();
        if (*dsz) return run.bounds_dictionary();
        if (*self) return run.selftest();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace ballcover::cli
