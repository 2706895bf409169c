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


#include "ballcover/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ballcover {
namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing \"") + key + "\"");
    return j.at(key);
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) malformed(std::string(what) + " is not a number");
    return j.get<double>();
}

}  // namespace

Json space_to_json(const LpSpace& space) {
    Json j;
    j["d"] = space.dim();
    if (space.is_infinite()) {
        j["p"] = "inf";
    } else {
        j["p"] = space.p();
    }
    return j;
}

LpSpace space_from_json(const Json& j) {
    const Json& d = field(j, "d");
    if (!d.is_number_unsigned()) malformed("\"d\" is not a positive integer");
    const Json& p = field(j, "p");
    double pv = 0.0;
    if (p.is_string()) {
        if (p.get<std::string>() != "inf") malformed("\"p\" string must be \"inf\"");
        pv = kInfinity;
    } else {
        pv = number(p, "\"p\"");
    }
    return LpSpace(d.get<std::size_t>(), pv);
}

Json points_to_json(const PointSet& points) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
        Json row = Json::array();
        for (double v : points[i]) row.push_back(v);
        arr.push_back(std::move(row));
    }
    return arr;
}

PointSet points_from_json(const Json& j, std::size_t expected_dim) {
    if (!j.is_array()) malformed("point list is not an array");
    std::size_t dim = expected_dim;
    if (dim == 0 && !j.empty()) {
        if (!j.front().is_array()) malformed("point is not an array");
        dim = j.front().size();
    }
    if (dim == 0) malformed("points have no coordinates");
    std::vector<double> buf;
    buf.reserve(j.size() * dim);
    for (const Json& row : j) {
        if (!row.is_array() || row.size() != dim) malformed("point has the wrong dimension");
        for (const Json& v : row) buf.push_back(number(v, "coordinate"));
    }
    return PointSet(dim, std::move(buf));
}

Json covering_to_json(const BallCovering& cov, std::optional<std::uint64_t> seed) {
    Json j;
    j["space"] = space_to_json(cov.space);
    j["centers"] = points_to_json(cov.centers);
    j["radius"] = cov.radius;
    j["closed"] = cov.closed;
    j["provenance"] = cov.provenance;
    if (seed) j["seed"] = *seed;
    return j;
}

BallCovering covering_from_json(const Json& j) {
    const LpSpace space = space_from_json(field(j, "space"));
    PointSet centers = points_from_json(field(j, "centers"), space.dim());
    const double radius = number(field(j, "radius"), "\"radius\"");
    if (!(radius > 0.0)) malformed("\"radius\" must be positive");
    const Json& closed = field(j, "closed");
    if (!closed.is_boolean()) malformed("\"closed\" is not a boolean");
    std::string provenance;
    if (j.contains("provenance")) {
        if (!j.at("provenance").is_string()) malformed("\"provenance\" is not a string");
        provenance = j.at("provenance").get<std::string>();
    }
    return BallCovering{space, std::move(centers), radius, closed.get<bool>(), std::move(provenance)};
}

Json dictionary_to_json(const Dictionary& dict, std::optional<double> mu, std::optional<std::uint64_t> seed) {
    Json j;
    j["space"] = space_to_json(dict.space());
    if (mu) j["mu"] = *mu;
    if (seed) j["seed"] = *seed;
    j["size"] = dict.size();
    j["vectors"] = points_to_json(dict.vectors());
    return j;
}

DictionaryFile dictionary_from_json(const Json& j) {
    const LpSpace space = space_from_json(field(j, "space"));
    PointSet vectors = points_from_json(field(j, "vectors"), space.dim());
    if (j.contains("size")) {
        if (!j.at("size").is_number_unsigned() || j.at("size").get<std::size_t>() != vectors.size()) {
            malformed("\"size\" does not match the number of vectors");
        }
    }
    DictionaryFile out{Dictionary(space, std::move(vectors)), std::nullopt, std::nullopt};
    if (j.contains("mu")) out.mu = number(j.at("mu"), "\"mu\"");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned()) malformed("\"seed\" is not an unsigned integer");
        out.seed = j.at("seed").get<std::uint64_t>();
    }
    return out;
}

Json report_to_json(const CoverageReport& rep, bool include_timing) {
    Json j;
    j["passed"] = rep.passed;
    j["samples_tested"] = rep.samples_tested;
    j["worst_margin"] = rep.worst_margin;
    j["seed"] = rep.seed;
    if (rep.failure_witness) {
        j["failure_witness"] = *rep.failure_witness;
    } else {
        j["failure_witness"] = nullptr;
    }
    if (include_timing) j["elapsed_seconds"] = std::chrono::duration<double>(rep.elapsed).count();
    return j;
}

Json adversarial_to_json(const AdversarialResult& res) {
    Json j;
    j["min_distance"] = res.min_distance;
    j["margin"] = res.margin;
    j["point"] = res.point;
    return j;
}

Json hadamard_to_json(const HadamardMatrix& h) {
    Json j;
    j["order"] = h.order();
    Json rows = Json::array();
    for (std::size_t r = 0; r < h.order(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < h.order(); ++c) row.push_back(h(r, c));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

PointSet centers_from_json(const Json& j) {
    if (j.is_object()) return points_from_json(field(j, "centers"));
    return points_from_json(j);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("cannot parse " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace ballcover
