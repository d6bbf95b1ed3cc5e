// SPDX-License-Identifier: Apache-2.0
//
// nf-isac: near-field ISAC channel models and rate analysis
// Copyright (C) 2026 The nf-isac Authors
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

#include "nfisac/numerics.hpp"

#include <cassert>

namespace nfisac
{

double squared_norm(std::span<const std::complex<double>> v) noexcept
{
    CompensatedSum acc;
    for (const auto &x : v)
        acc.add(std::norm(x));
    return acc.value();
}

std::complex<double> inner_product(std::span<const std::complex<double>> a,
                                   std::span<const std::complex<double>> b) noexcept
{
    assert(a.size() == b.size());
    CompensatedSum re, im;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        const std::complex<double> t = std::conj(a[i]) * b[i];
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

std::complex<double> bilinear_product(std::span<const std::complex<double>> a,
                                      std::span<const std::complex<double>> b) noexcept
{
    assert(a.size() == b.size());
    CompensatedSum re, im;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        const std::complex<double> t = a[i] * b[i];
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

} // namespace nfisac
