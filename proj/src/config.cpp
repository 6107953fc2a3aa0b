// SPDX-License-Identifier: Apache-2.0
//
// irssec  IRS-assisted downlink secrecy-outage simulator and analytics
// Copyright (C) 2026 irssec contributors
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

#include "irssec/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace irssec
{

namespace
{

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

struct Entry
{
    std::string value;
    int line = 0;
};

// Key/value table with line provenance; keys are consumed as they are
// recognized so that anything left over is reportable as unknown.
struct KeyTable
{
    std::string source;
    std::map<std::string, Entry> entries;

    [[noreturn]] void fail(int line, const std::string &msg) const
    {
        throw config_error(source + ":" + std::to_string(line) + ": " + msg);
    }

    std::optional<Entry> take(const std::string &key)
    {
        const auto it = entries.find(key);
        if (it == entries.end())
            return std::nullopt;
        Entry e = it->second;
        entries.erase(it);
        return e;
    }
};

KeyTable tokenize(const std::string &text, const std::string &source)
{
    KeyTable table;
    table.source = source;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            table.fail(line_no, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            table.fail(line_no, "empty key");
        if (table.entries.count(key))
            table.fail(line_no, "duplicate key '" + key + "'");
        table.entries[key] = {value, line_no};
    }
    return table;
}

double to_double(const KeyTable &t, const std::string &key, const Entry &e)
{
    const char *begin = e.value.c_str();
    char *end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        t.fail(e.line, "key '" + key + "': malformed number '" + e.value + "'");
    return v;
}

long long to_ll(const KeyTable &t, const std::string &key, const Entry &e)
{
    const char *begin = e.value.c_str();
    char *end = nullptr;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0')
        t.fail(e.line, "key '" + key + "': malformed integer '" + e.value + "'");
    return v;
}

void set_double(KeyTable &t, const std::string &key, double &out)
{
    if (const auto e = t.take(key))
        out = to_double(t, key, *e);
}

void set_int(KeyTable &t, const std::string &key, int &out)
{
    if (const auto e = t.take(key)) {
        const long long v = to_ll(t, key, *e);
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            t.fail(e->line, "key '" + key + "': value out of range");
        out = static_cast<int>(v);
    }
}

void set_i64(KeyTable &t, const std::string &key, std::int64_t &out)
{
    if (const auto e = t.take(key))
        out = to_ll(t, key, *e);
}

void set_u64(KeyTable &t, const std::string &key, std::uint64_t &out)
{
    if (const auto e = t.take(key)) {
        const char *begin = e->value.c_str();
        char *end = nullptr;
        const unsigned long long v = std::strtoull(begin, &end, 10);
        if (end == begin || *end != '\0' || e->value.find('-') != std::string::npos)
            t.fail(e->line, "key '" + key + "': malformed unsigned integer '" + e->value + "'");
        out = v;
    }
}

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        parts.push_back(trim(item));
    return parts;
}

void set_int_list(KeyTable &t, const std::string &key, std::vector<int> &out)
{
    if (const auto e = t.take(key)) {
        std::vector<int> values;
        for (const auto &part : split_list(e->value)) {
            const Entry item{part, e->line};
            values.push_back(static_cast<int>(to_ll(t, key, item)));
        }
        if (values.empty())
            t.fail(e->line, "key '" + key + "': empty list");
        out = std::move(values);
    }
}

void set_double_list(KeyTable &t, const std::string &key, std::vector<double> &out)
{
    if (const auto e = t.take(key)) {
        std::vector<double> values;
        for (const auto &part : split_list(e->value)) {
            const Entry item{part, e->line};
            values.push_back(to_double(t, key, item));
        }
        if (values.empty())
            t.fail(e->line, "key '" + key + "': empty list");
        out = std::move(values);
    }
}

// Linear key with a logarithmic alternative; giving both is ambiguous and
// rejected. `from_db` maps the dB(-m) value to linear.
void set_paired_units(KeyTable &t, const std::string &linear_key, const std::string &db_key,
                      double (*from_db)(double), double &out)
{
    const auto lin = t.take(linear_key);
    const auto db = t.take(db_key);
    if (lin && db)
        t.fail(db->line, "keys '" + linear_key + "' and '" + db_key + "' conflict; give one");
    if (lin)
        out = to_double(t, linear_key, *lin);
    if (db)
        out = from_db(to_double(t, db_key, *db));
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename T>
std::string join(const std::vector<T> &values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ",";
        if constexpr (std::is_same_v<T, double>)
            s += fmt(values[i]);
        else
            s += std::to_string(values[i]);
    }
    return s;
}

void validate_spec(const ExperimentSpec &spec)
{
    try {
        spec.params.validate();
    } catch (const std::invalid_argument &ex) {
        throw config_error(std::string("invalid system parameters: ") + ex.what());
    }
    const int N = spec.params.N();
    for (const int s : spec.scenarios)
        if (s < 1 || s > 3)
            throw config_error("run.scenarios: scenario index " + std::to_string(s) +
                               " outside {1,2,3}");
    if (spec.scenarios.empty())
        throw config_error("run.scenarios: at least one scenario required");
    for (const int k : spec.k_grid)
        if (k < 1 || k > N)
            throw config_error("sweep.k_grid: K = " + std::to_string(k) +
                               " outside [1, N = " + std::to_string(N) + "]");
    for (const int n : spec.n_grid) {
        if (n < 1)
            throw config_error("sweep.n_grid: N must be positive");
        const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
        if (root * root != n)
            throw config_error("sweep.n_grid: N = " + std::to_string(n) +
                               " is not a perfect square (grid keeps N_H = N_V)");
    }
    for (const double r : spec.rho_grid)
        if (!(r >= 0.0 && r <= 1.0))
            throw config_error("sweep.rho_grid: rho outside [0, 1]");
    if (spec.ess_K && (*spec.ess_K < 1 || *spec.ess_K > N))
        throw config_error("ess.K: value outside [1, N = " + std::to_string(N) + "]");
    if (spec.mc.trials < 0)
        throw config_error("mc.trials: must be nonnegative (0 skips Monte-Carlo columns)");
    if (spec.mc.workers < 0)
        throw config_error("mc.workers: must be nonnegative (0 = auto)");
}

} // namespace

const char *to_string(OutputFormat format)
{
    return format == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat output_format_from_string(const std::string &name)
{
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    throw config_error("out.format: expected 'csv' or 'json', got '" + name + "'");
}

ExperimentSpec parse_config(const std::string &text, const std::string &source_name)
{
    KeyTable t = tokenize(text, source_name);
    ExperimentSpec spec;
    SystemParams &p = spec.params;

    set_int(t, "system.M", p.M);
    set_int(t, "system.N_H", p.N_H);
    set_int(t, "system.N_V", p.N_V);
    set_int(t, "system.L", p.L);
    set_paired_units(t, "system.P", "system.P_dBm", dbm_to_watt, p.P);
    set_paired_units(t, "system.sigma2_B", "system.sigma2_B_dBm", dbm_to_watt, p.sigma2_B);
    set_paired_units(t, "system.sigma2_E", "system.sigma2_E_dBm", dbm_to_watt, p.sigma2_E);
    set_double(t, "system.rho", p.rho);
    set_double(t, "system.Rs", p.Rs);
    set_double(t, "system.phi1", p.phi1);
    set_double(t, "system.theta1", p.theta1);
    set_double(t, "system.phi2", p.phi2);
    set_double(t, "system.theta2", p.theta2);
    set_double(t, "system.spacing_bs", p.spacing_bs);
    set_double(t, "system.spacing_h", p.spacing_h);
    set_double(t, "system.spacing_v", p.spacing_v);
    set_paired_units(t, "system.C1", "system.C1_dB", db_to_linear, p.C1);
    set_double(t, "system.alpha1", p.alpha1);
    set_double(t, "system.d1", p.d1);
    set_paired_units(t, "system.C2", "system.C2_dB", db_to_linear, p.C2);
    set_double(t, "system.alpha2", p.alpha2);
    set_double(t, "system.d2", p.d2);

    set_i64(t, "mc.trials", spec.mc.trials);
    set_u64(t, "mc.seed", spec.mc.seed);
    set_int(t, "mc.workers", spec.mc.workers);

    set_int_list(t, "run.scenarios", spec.scenarios);
    set_int_list(t, "sweep.k_grid", spec.k_grid);
    set_int_list(t, "sweep.n_grid", spec.n_grid);
    set_double_list(t, "sweep.rho_grid", spec.rho_grid);

    if (const auto e = t.take("ess.K")) {
        const long long v = to_ll(t, "ess.K", *e);
        spec.ess_K = static_cast<int>(v);
    }
    if (const auto e = t.take("out.path"))
        spec.out_path = e->value;
    if (const auto e = t.take("out.format"))
        spec.format = output_format_from_string(e->value);

    if (!t.entries.empty()) {
        const auto &first = *t.entries.begin();
        t.fail(first.second.line, "unknown key '" + first.first + "'");
    }

    validate_spec(spec);
    return spec;
}

ExperimentSpec load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::string emit_config(const ExperimentSpec &spec)
{
    const SystemParams &p = spec.params;
    std::ostringstream out;
    out << "# canonical experiment configuration (linear units, full precision)\n";
    out << "system.M = " << p.M << "\n";
    out << "system.N_H = " << p.N_H << "\n";
    out << "system.N_V = " << p.N_V << "\n";
    out << "system.L = " << p.L << "\n";
    out << "system.P = " << fmt(p.P) << "\n";
    out << "system.sigma2_B = " << fmt(p.sigma2_B) << "\n";
    out << "system.sigma2_E = " << fmt(p.sigma2_E) << "\n";
    out << "system.rho = " << fmt(p.rho) << "\n";
    out << "system.Rs = " << fmt(p.Rs) << "\n";
    out << "system.phi1 = " << fmt(p.phi1) << "\n";
    out << "system.theta1 = " << fmt(p.theta1) << "\n";
    out << "system.phi2 = " << fmt(p.phi2) << "\n";
    out << "system.theta2 = " << fmt(p.theta2) << "\n";
    out << "system.spacing_bs = " << fmt(p.spacing_bs) << "\n";
    out << "system.spacing_h = " << fmt(p.spacing_h) << "\n";
    out << "system.spacing_v = " << fmt(p.spacing_v) << "\n";
    out << "system.C1 = " << fmt(p.C1) << "\n";
    out << "system.alpha1 = " << fmt(p.alpha1) << "\n";
    out << "system.d1 = " << fmt(p.d1) << "\n";
    out << "system.C2 = " << fmt(p.C2) << "\n";
    out << "system.alpha2 = " << fmt(p.alpha2) << "\n";
    out << "system.d2 = " << fmt(p.d2) << "\n";
    out << "mc.trials = " << spec.mc.trials << "\n";
    out << "mc.seed = " << spec.mc.seed << "\n";
    out << "mc.workers = " << spec.mc.workers << "\n";
    out << "run.scenarios = " << join(spec.scenarios) << "\n";
    out << "sweep.k_grid = " << join(spec.k_grid) << "\n";
    out << "sweep.n_grid = " << join(spec.n_grid) << "\n";
    out << "sweep.rho_grid = " << join(spec.rho_grid) << "\n";
    if (spec.ess_K)
        out << "ess.K = " << *spec.ess_K << "\n";
    if (!spec.out_path.empty())
        out << "out.path = " << spec.out_path << "\n";
    out << "out.format = " << to_string(spec.format) << "\n";
    return out.str();
}

} // namespace irssec
