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

#include "nfisac/diagnostics.hpp"

#include <iostream>
#include <mutex>

namespace nfisac
{

namespace
{
std::mutex sink_mutex;

WarningSink &current_sink()
{
    static WarningSink sink = [](std::string_view msg)
    { std::cerr << "nf-isac warning: " << msg << '\n'; };
    return sink;
}
} // namespace

WarningSink set_warning_sink(WarningSink sink)
{
    std::lock_guard lock(sink_mutex);
    WarningSink previous = std::move(current_sink());
    current_sink() = std::move(sink);
    return previous;
}

void warn(std::string_view message)
{
    std::lock_guard lock(sink_mutex);
    if (current_sink())
        current_sink()(message);
}

} // namespace nfisac
