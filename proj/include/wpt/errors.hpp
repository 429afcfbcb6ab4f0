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

#include <stdexcept>
#include <string>

namespace wpt
{

// Input outside the mathematical domain of an operation (non-positive
// diode parameters, empty signals, correlation outside [0, 1), ...).
class DomainError : public std::domain_error
{
public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

// Fourth moment below the square of the second moment.
class MomentError : public DomainError
{
public:
    explicit MomentError(const std::string &what) : DomainError(what) {}
};

// Channel for which a channel-adaptive design is undefined (all-zero gains).
class DegenerateChannelError : public std::runtime_error
{
public:
    explicit DegenerateChannelError(const std::string &what) : std::runtime_error(what) {}
};

// Shapes of weights, channels or pilots do not agree.
class DimensionError : public std::invalid_argument
{
public:
    explicit DimensionError(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace wpt
