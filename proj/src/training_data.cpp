// Copyright 2026 The vncdr Authors
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

#include "vncdr/training_data.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "vncdr/errors.hpp"

namespace vncdr {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

double to_double(const std::string &s) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        throw FormatError("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw FormatError("not a number: '" + s + "'");
    }
    return v;
}

}  // namespace

void TrainingData::add_row(std::vector<double> xi, double yi, std::string label) {
    if (xi.size() != levels.size()) {
        throw ParameterError("training row has " + std::to_string(xi.size()) + " noisy values for " +
                             std::to_string(levels.size()) + " levels");
    }
    x.push_back(std::move(xi));
    y.push_back(yi);
    labels.push_back(label.empty() ? "c" + std::to_string(y.size() - 1) : std::move(label));
}

std::vector<double> TrainingData::level_column(size_t j) const {
    std::vector<double> col;
    col.reserve(x.size());
    for (const auto &row : x) {
        col.push_back(row.at(j));
    }
    return col;
}

void write_training_csv(std::ostream &os, const TrainingData &data) {
    os << "circuit_id,y";
    for (uint32_t c : data.levels.levels()) {
        os << ",x_c" << c;
    }
    os << '\n';
    for (size_t i = 0; i < data.rows(); ++i) {
        os << data.labels[i] << ',' << fmt17(data.y[i]);
        for (double v : data.x[i]) {
            os << ',' << fmt17(v);
        }
        os << '\n';
    }
}

TrainingData read_training_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw FormatError("empty training CSV");
    }
    const auto header = split(line);
    if (header.size() < 3 || header[0] != "circuit_id" || header[1] != "y") {
        throw FormatError("training CSV header must start with circuit_id,y");
    }
    std::vector<uint32_t> levels;
    for (size_t k = 2; k < header.size(); ++k) {
        if (header[k].rfind("x_c", 0) != 0) {
            throw FormatError("bad level column '" + header[k] + "'");
        }
        levels.push_back(static_cast<uint32_t>(to_double(header[k].substr(3))));
    }
    TrainingData data{NoiseLevelSet(levels), {}, {}, {}};
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != header.size()) {
            throw FormatError("training CSV row has the wrong number of cells");
        }
        std::vector<double> xi;
        for (size_t k = 2; k < cells.size(); ++k) {
            xi.push_back(to_double(cells[k]));
        }
        data.add_row(std::move(xi), to_double(cells[1]), cells[0]);
    }
    return data;
}

}  // namespace vncdr
