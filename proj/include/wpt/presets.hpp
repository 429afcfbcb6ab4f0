// SPDX-License-Identifier: Apache-2.0
//
// wptsim - wireless power transfer signal design and rectenna simulation
// Copyright (C) 2026 The wptsim authors
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

#pragma once

#include "wpt/config.hpp"
#include "wpt/harness.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wpt
{

/// A named bundle of experiment configs that together produce one figure's
/// data. All use P = 1 W and the default rectenna coefficients.
struct Preset
{
    std::string name;
    std::string description;
    std::vector<json> configs; // each accepted by spec_from_json

    std::vector<ExperimentSpec> specs(std::uint64_t seed) const;
};

const std::vector<Preset> &presets();
const Preset &find_preset(const std::string &name); // throws std::invalid_argument

/// Runs one spec as the shape it declares: a sweep, a mobility run or a
/// plain Monte Carlo run, flattened to report rows.
std::vector<ReportRow> run_spec(const ExperimentSpec &spec, Execution exec = Execution::parallel);

} // namespace wpt
