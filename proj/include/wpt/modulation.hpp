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

#include "wpt/random.hpp"

#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wpt
{

using cplx = std::complex<double>;

enum class SchemeTag
{
    cw,
    bpsk,
    qpsk,
    psk,
    qam16,
    cscg,
    real_gaussian,
    flash
};

struct ModulationScheme
{
    SchemeTag tag = SchemeTag::cw;
    unsigned order = 2; // PSK only
    double l = 1.0;     // flash only

    static ModulationScheme cw() { return {SchemeTag::cw}; }
    static ModulationScheme psk(unsigned k) { return {SchemeTag::psk, k}; }
    static ModulationScheme flash(double l) { return {SchemeTag::flash, 2, l}; }

    void validate() const;
    std::string label() const;
};

/// Accepts cw, bpsk, qpsk, psk<k> (e.g. psk8), qam16/16qam, cscg/cg,
/// real-gaussian/rg, flash (l supplied separately).
ModulationScheme scheme_from_string(std::string_view name, double l = 1.0);

struct SymbolStream
{
    std::vector<cplx> symbols;
};

/// i.i.d. unit-power symbols. Flash(l) has magnitude l with probability
/// 1/l^2 and 0 otherwise, with a uniform phase.
SymbolStream sample_symbols(const ModulationScheme &scheme, std::size_t count, RandomStream &rng);

/// One symbol; the building block of sample_symbols.
cplx draw_symbol(const ModulationScheme &scheme, RandomStream &rng);

/// E|m|^4 of the unit-power scheme.
double theoretical_m4(const ModulationScheme &scheme);

struct SymbolMoments
{
    double m2 = 0.0;
    double m4 = 0.0;
};

SymbolMoments empirical_moments(const SymbolStream &stream);

/// `re,im` header followed by one symbol per row.
void write_symbols_csv(std::ostream &os, const SymbolStream &stream);

} // namespace wpt
