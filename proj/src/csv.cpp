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

#include "nfisac/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace nfisac
{

std::string format_double(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return {buf, res.ptr};
}

void Table::add_row(const std::vector<double> &values)
{
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values)
        cells.push_back(format_double(v));
    add_row(std::move(cells));
}

void Table::add_row(std::vector<std::string> cells)
{
    if (cells.size() != columns.size())
        throw std::logic_error("Table::add_row: row width does not match the header of '" + name + "'");
    rows.push_back(std::move(cells));
}

namespace
{

void write_cell(std::ostream &os, const std::string &cell)
{
    if (cell.find_first_of(",\"\n") == std::string::npos)
    {
        os << cell;
        return;
    }
    os << '"';
    for (char c : cell)
    {
        if (c == '"')
            os << '"';
        os << c;
    }
    os << '"';
}

void write_line(std::ostream &os, const std::vector<std::string> &cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
        if (i)
            os << ',';
        write_cell(os, cells[i]);
    }
    os << '\n';
}

} // namespace

void write_csv(std::ostream &os, const Table &t)
{
    write_line(os, t.columns);
    for (const auto &row : t.rows)
        write_line(os, row);
}

std::string to_csv(const Table &t)
{
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
}

std::filesystem::path write_csv(const std::filesystem::path &dir, const Table &t)
{
    std::filesystem::create_directories(dir);
    const std::filesystem::path file = dir / (t.name + ".csv");
    std::ofstream os(file, std::ios::binary);
    if (!os)
        throw std::system_error(errno, std::generic_category(), "cannot open " + file.string());
    write_csv(os, t);
    if (!os)
        throw std::system_error(errno, std::generic_category(), "cannot write " + file.string());
    return file;
}

} // namespace nfisac
