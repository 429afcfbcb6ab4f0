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

#include "wpt/harness.hpp"
#include "wpt/serialization.hpp"

#include <filesystem>
#include <string>

namespace wpt
{

/// Invalid experiment configuration. key() is the dotted path of the
/// offending entry, e.g. "strategy.beta".
class ConfigError : public FormatError
{
  public:
    using FormatError::FormatError;
};

/// Builds an ExperimentSpec from a JSON document. Unknown keys are rejected.
/// The key set is documented in README.md.
ExperimentSpec spec_from_json(const json &doc);
ExperimentSpec load_spec(const std::filesystem::path &path);
json spec_to_json(const ExperimentSpec &spec);

} // namespace wpt
