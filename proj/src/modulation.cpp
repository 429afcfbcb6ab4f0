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

#include "wpt/modulation.hpp"

#include "wpt/errors.hpp"
#include "wpt/stats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace wpt
{

void ModulationScheme::validate() const
{
    if (tag == SchemeTag::psk && order < 2)
        throw std::invalid_argument("PSK order must be >= 2");
    if (tag == SchemeTag::flash && !(l >= 1.0 && std::isfinite(l)))
        throw std::invalid_argument("flash parameter l must be >= 1");
}

std::string ModulationScheme::label() const
{
    char buf[48];
    switch (tag)
    {
    case SchemeTag::cw:
        return "CW";
    case SchemeTag::bpsk:
        return "BPSK";
    case SchemeTag::qpsk:
        return "QPSK";
    case SchemeTag::psk:
        std::snprintf(buf, sizeof buf, "PSK%u", order);
        return buf;
    case SchemeTag::qam16:
        return "16QAM";
    case SchemeTag::cscg:
        return "CSCG";
    case SchemeTag::real_gaussian:
        return "RealGaussian";
    case SchemeTag::flash:
        std::snprintf(buf, sizeof buf, "Flash(l=%g)", l);
        return buf;
    }
    return "?";
}

ModulationScheme scheme_from_string(std::string_view name, double l)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '-' || c == '_'; }), s.end());

    ModulationScheme out;
    if (s == "cw")
        out.tag = SchemeTag::cw;
    else if (s == "bpsk")
        out.tag = SchemeTag::bpsk;
    else if (s == "qpsk")
        out.tag = SchemeTag::qpsk;
    else if (s.rfind("psk", 0) == 0 && s.size() > 3 &&
             std::all_of(s.begin() + 3, s.end(), [](unsigned char c) { return std::isdigit(c); }))
    {
        out.tag = SchemeTag::psk;
        out.order = static_cast<unsigned>(std::stoul(s.substr(3)));
    }
    else if (s == "qam16" || s == "16qam")
        out.tag = SchemeTag::qam16;
    else if (s == "cscg" || s == "cg" || s == "complexgaussian")
        out.tag = SchemeTag::cscg;
    else if (s == "realgaussian" || s == "rg")
        out.tag = SchemeTag::real_gaussian;
    else if (s == "flash")
    {
        out.tag = SchemeTag::flash;
        out.l = l;
    }
    else
        throw std::invalid_argument("unknown modulation scheme '" + std::string(name) + "'");
    out.validate();
    return out;
}

cplx draw_symbol(const ModulationScheme &scheme, RandomStream &rng)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    switch (scheme.tag)
    {
    case SchemeTag::cw:
        return {1.0, 0.0};
    case SchemeTag::bpsk:
        return {rng.uniform() < 0.5 ? 1.0 : -1.0, 0.0};
    case SchemeTag::qpsk:
    case SchemeTag::psk: {
        const unsigned k = scheme.tag == SchemeTag::qpsk ? 4u : scheme.order;
        const auto idx = static_cast<unsigned>(rng.uniform() * k);
        return std::polar(1.0, two_pi * static_cast<double>(idx) / static_cast<double>(k));
    }
    case SchemeTag::qam16: {
        static constexpr double levels[4] = {-3.0, -1.0, 1.0, 3.0};
        const double norm = 1.0 / std::sqrt(10.0);
        const auto i = static_cast<unsigned>(rng.uniform() * 4.0);
        const auto q = static_cast<unsigned>(rng.uniform() * 4.0);
        return {levels[i] * norm, levels[q] * norm};
    }
    case SchemeTag::cscg:
        return rng.complex_normal(1.0);
    case SchemeTag::real_gaussian:
        return {rng.normal(), 0.0};
    case SchemeTag::flash: {
        const double u = rng.uniform();
        if (u >= 1.0 / (scheme.l * scheme.l))
            return {0.0, 0.0};
        return std::polar(scheme.l, rng.phase());
    }
    }
    return {0.0, 0.0};
}

SymbolStream sample_symbols(const ModulationScheme &scheme, std::size_t count, RandomStream &rng)
{
    scheme.validate();
    if (count < 1)
        throw std::invalid_argument("sample_symbols: count must be >= 1");
    SymbolStream out;
    out.symbols.resize(count);
    for (auto &s : out.symbols)
        s = draw_symbol(scheme, rng);
    return out;
}

double theoretical_m4(const ModulationScheme &scheme)
{
    scheme.validate();
    switch (scheme.tag)
    {
    case SchemeTag::cw:
    case SchemeTag::bpsk:
    case SchemeTag::qpsk:
    case SchemeTag::psk:
        return 1.0;
    case SchemeTag::qam16:
        return 1.32;
    case SchemeTag::cscg:
        return 2.0;
    case SchemeTag::real_gaussian:
        return 3.0;
    case SchemeTag::flash:
        return scheme.l * scheme.l;
    }
    return 0.0;
}

SymbolMoments empirical_moments(const SymbolStream &stream)
{
    if (stream.symbols.empty())
        throw DomainError("empirical_moments: empty stream");
    CompensatedSum s2;
    CompensatedSum s4;
    for (const auto &m : stream.symbols)
    {
        const double a2 = std::norm(m);
        s2.add(a2);
        s4.add(a2 * a2);
    }
    const double n = static_cast<double>(stream.symbols.size());
    return {s2.value() / n, s4.value() / n};
}

void write_symbols_csv(std::ostream &os, const SymbolStream &stream)
{
    os << "re,im\n";
    char buf[64];
    for (const auto &m : stream.symbols)
    {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", m.real(), m.imag());
        os << buf;
    }
}

} // namespace wpt
