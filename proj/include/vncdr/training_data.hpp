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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vncdr/noise.hpp"

namespace vncdr {

/// Regression input: row i holds the noisy expectations x_i (one per noise
/// level, in level order) of training circuit i and its exact value y_i.
struct TrainingData {
    NoiseLevelSet levels;
    std::vector<std::vector<double>> x;
    std::vector<double> y;
    std::vector<std::string> labels;

    size_t rows() const {
        return y.size();
    }
    /// Appends a row; x must have one entry per level.
    void add_row(std::vector<double> xi, double yi, std::string label = {});
    /// Column j of x (noisy values at level j).
    std::vector<double> level_column(size_t j) const;
};

/// CSV with header `circuit_id,y,x_c1,x_c3,...`; values at 17 digits.
void write_training_csv(std::ostream &os, const TrainingData &data);
TrainingData read_training_csv(std::istream &is);

}  // namespace vncdr
