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


#include "ballcover/selftest.hpp"

#include "ballcover/bounds.hpp"
#include "ballcover/coverings.hpp"
#include "ballcover/frames.hpp"
#include "ballcover/hadamard.hpp"
#include "ballcover/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

namespace ballcover {
namespace {

constexpr std::size_t kSamples = 2000;

class Suite {
public:
    explicit Suite(std::uint64_t seed) : seed_(seed) {
        out_ << "ballcover selftest seed=" << seed << "\n";
    }

    std::uint64_t stream() { return split_seed(seed_, next_++); }

    void record(const std::string& name, bool ok, const std::string& detail) {
        all_ok_ = all_ok_ && ok;
        out_ << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) out_ << "  " << detail;
        out_ << "\n";
    }

    // Runs a check, turning exceptions into failures.
    void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
        try {
            const auto [ok, detail] = body();
            record(name, ok, detail);
        } catch (const std::exception& e) {
            record(name, false, std::string("error: ") + e.what());
        }
    }

    void cover(const std::string& name, const BallCovering& cov) {
        check(name, [&] {
            const CoverageReport rep = certify_sampling(cov, kSamples, kSamples, stream());
            const AdversarialResult adv = adversarial_search(cov, 10, 100, stream());
            const bool ok = rep.passed && margin_passes(cov, adv.margin);
            return std::pair{ok, "centers=" + std::to_string(cov.size()) + " worst_margin=" + num(rep.worst_margin) +
                                     " adversarial_margin=" + num(adv.margin)};
        });
    }

    SelftestReport finish() {
        out_ << (all_ok_ ? "result: PASS" : "result: FAIL") << "\n";
        return {out_.str(), all_ok_};
    }

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6e", v);
        return buf;
    }

private:
    std::uint64_t seed_;
    std::uint64_t next_ = 0;
    bool all_ok_ = true;
    std::ostringstream out_;
};

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
    Suite s(seed);

    s.check("hadamard sylvester k=0..8", [] {
        for (unsigned k = 0; k <= 8; ++k) {
            const HadamardMatrix h = sylvester(k);
            std::vector<int> e(h.entries().begin(), h.entries().end());
            if (!verify_hadamard(h.order(), e)) return std::pair{false, "k=" + std::to_string(k)};
        }
        return std::pair{true, std::string()};
    });

    s.check("etf gram orders 2..64", [] {
        double worst = 0.0;
        for (std::size_t m = 2; m <= 64; m *= 2) {
            const TightFrame f = etf_from_hadamard(hadamard_of_order(m));
            const std::vector<double> g = gram_matrix(f);
            const std::size_t n = f.vectors.size();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const double want = i == j ? 1.0 : -1.0 / static_cast<double>(m - 1);
                    worst = std::max(worst, std::fabs(g[i * n + j] - want));
                }
            }
        }
        return std::pair{worst <= 1e-12, "max_error=" + Suite::num(worst)};
    });

    for (std::size_t d : {1, 2, 4, 8}) {
        s.check("simplex dichotomy d=" + std::to_string(d), [&] {
            const PointSet pts = sample_ball(LpSpace::euclidean(d), kSamples, s.stream());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (!simplex_dichotomy(pts[i]).holds) return std::pair{false, std::string("violated")};
            }
            return std::pair{true, std::string()};
        });
    }
    for (std::size_t d : {2, 4, 8}) s.cover("simplex shrunk d=" + std::to_string(d), simplex_cover_shrunk(d).covering);
    for (std::size_t d : {1, 3, 7, 15}) s.cover("etf cover d=" + std::to_string(d), etf_cover(d).covering);
    for (std::size_t d : {1, 4, 16}) s.cover("axis cover d=" + std::to_string(d), axis_cover(d).covering);

    const LpSpace l4(4, 4.0);
    s.cover("basis cover l4 d=4", basis_cover(l4, 1.0, smoothness_majorant_for(l4)));
    s.cover("iterated axis d=2 m=2", iterate_cover(axis_cover(2).covering, 2));

    s.check("dictionary l2 d=4 mu=0.5", [&] {
        const LpSpace e4 = LpSpace::euclidean(4);
        const Dictionary dict = greedy_maximal_dictionary(e4, 0.5, s.stream());
        const MaximalityResult mx = certify_maximality(dict, 0.5, 5000, s.stream());
        if (!mx.passed) return std::pair{false, std::string("maximality not certified")};
        const BallCovering cov = dictionary_cover_l2(mx.dictionary, 0.5);
        const CoverageReport rep = certify_sampling(cov, kSamples, kSamples, s.stream());
        return std::pair{rep.passed, "size=" + std::to_string(mx.dictionary.size()) +
                                         " worst_margin=" + Suite::num(rep.worst_margin)};
    });

    s.check("lemma selector N=2..20", [&] {
        std::mt19937_64 rng(s.stream());
        std::normal_distribution<double> g;
        for (std::size_t n = 2; n <= 20; ++n) {
            for (int t = 0; t < 200; ++t) {
                std::vector<double> y(n);
                double mean = 0.0;
                for (double& v : y) mean += (v = g(rng));
                mean /= static_cast<double>(n);
                for (double& v : y) v -= mean;
                const std::size_t k = zero_sum_select(y);
                if (y[k] < std::sqrt(simd::dot(y, y)) / (2.0 * static_cast<double>(n - 1))) {
                    return std::pair{false, "N=" + std::to_string(n)};
                }
            }
        }
        return std::pair{true, std::string()};
    });

    for (double p : {2.0, 3.0, 1.5}) {
        s.check("witness d=4 p=" + LpSpace(4, p).p_label(), [&] {
            const LpSpace sp(4, p);
            double worst = kInfinity;
            for (int t = 0; t < 20; ++t) {
                const PointSet c = sample_ball(sp, 4, s.stream());
                worst = std::min(worst, uncovered_witness(sp, c).min_center_distance);
            }
            return std::pair{worst >= 1.0 - 1e-9, "min_distance=" + Suite::num(worst)};
        });
    }

    for (std::size_t d = 1; d <= 6; ++d) {
        s.check("linf vertices d=" + std::to_string(d), [&] {
            const LinfVertexReport r = linf_vertex_check(d, kSamples, 20, s.stream());
            return std::pair{r.covering_ok && r.lower_bound_ok, "worst_margin=" + Suite::num(r.worst_margin)};
        });
    }

    s.check("volumetric bounds ordered", [] {
        for (std::size_t d = 1; d <= 20; ++d) {
            for (int i = 1; i <= 20; ++i) {
                const VolumetricBounds b = volumetric_bounds(d, i / 20.0);
                if (b.log_lower > b.log_upper) return std::pair{false, "d=" + std::to_string(d)};
            }
        }
        return std::pair{true, std::string()};
    });

    return s.finish();
}

}  // namespace ballcover
