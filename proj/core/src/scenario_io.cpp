// SPDX-License-Identifier: Apache-2.0
//
// dirloss - directional path loss engine for mmWave radio links
// Copyright (C) 2026 the dirloss authors
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

#include "dirloss/scenario_io.hpp"

#include "dirloss/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace dirloss
{

namespace
{

struct KeyValue
{
    std::string value;
    int line = 0;
};

using Section = std::map<std::string, KeyValue>;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what)
{
    std::ostringstream msg;
    msg << source << ":" << line << ": " << what;
    throw ValidationError(msg.str());
}

class SectionReader
{
  public:
    SectionReader(const std::string& source, std::string name, const Section& section)
        : source_(source), name_(std::move(name)), section_(section)
    {
    }

    double number(const std::string& key)
    {
        const KeyValue& kv = require(key);
        double value = 0.0;
        const char* begin = kv.value.data();
        const char* end = begin + kv.value.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end)
            fail(source_, kv.line, "key `" + key + "` needs a numeric value, got `" + kv.value + "`");
        return value;
    }

    double number_or(const std::string& key, double fallback)
    {
        return section_.count(key) ? number(key) : fallback;
    }

    int integer(const std::string& key)
    {
        const KeyValue& kv = require(key);
        int value = 0;
        const char* begin = kv.value.data();
        const char* end = begin + kv.value.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end)
            fail(source_, kv.line, "key `" + key + "` needs an integer value, got `" + kv.value + "`");
        return value;
    }

    int integer_or(const std::string& key, int fallback)
    {
        return section_.count(key) ? integer(key) : fallback;
    }

    std::string text(const std::string& key) { return require(key).value; }

    bool has(const std::string& key) const { return section_.count(key) != 0; }

    // Every key must have been consumed by the time parsing finishes.
    void reject_unconsumed() const
    {
        for (const auto& [key, kv] : section_)
            if (!consumed_.count(key))
                fail(source_, kv.line, "unknown key `" + key + "` in section [" + name_ + "]");
    }

    int line_of(const std::string& key) const
    {
        const auto it = section_.find(key);
        return it == section_.end() ? 0 : it->second.line;
    }

    const std::string& source() const { return source_; }
    const std::string& name() const { return name_; }

  private:
    const KeyValue& require(const std::string& key)
    {
        const auto it = section_.find(key);
        if (it == section_.end())
            throw ValidationError(source_ + ": missing required key `" + key + "` in section [" +
                                  name_ + "]");
        consumed_.insert({key, true}).first->second = true;
        return it->second;
    }

    std::string source_;
    std::string name_;
    const Section& section_;
    std::map<std::string, bool> consumed_;
};

PatternSpec parse_pattern_section(SectionReader& reader)
{
    const std::string type = reader.text("type");
    PatternSpec spec;
    if (type == "omni")
        spec = omni_spec();
    else if (type == "gaussian")
        spec = gaussian_spec(reader.number("hpbw_deg"));
    else if (type == "sinc")
        spec = sinc_spec(reader.number("hpbw_deg"));
    else if (type == "element3gpp")
        spec = element3gpp_spec(reader.number("phi3db_deg"), reader.number("a_m_db"));
    else if (type == "gnodeb")
        spec = gnodeb_spec(reader.integer_or("columns", 8), reader.number_or("spacing_wl", 0.5));
    else if (type == "ue")
        spec = ue_spec();
    else
        fail(reader.source(), reader.line_of("type"),
             "unknown pattern type `" + type +
                 "` (expected omni|gaussian|sinc|element3gpp|gnodeb|ue)");
    reader.reject_unconsumed();
    return spec;
}

} // namespace

Scenario parse_scenario_text(std::string_view text, const std::string& source_name)
{
    std::map<std::string, Section> sections;
    std::string current;

    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw))
    {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::string_view line = trim(raw);
        if (line.empty())
            continue;

        if (line.front() == '[')
        {
            if (line.back() != ']')
                fail(source_name, line_no, "unterminated section header");
            const std::string name{trim(line.substr(1, line.size() - 2))};
            if (name != "scenario" && name != "tx" && name != "rx")
                fail(source_name, line_no, "unknown section [" + name + "]");
            if (sections.count(name))
                fail(source_name, line_no, "duplicate section [" + name + "]");
            sections[name];
            current = name;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(source_name, line_no, "expected `key = value`");
        if (current.empty())
            fail(source_name, line_no, "key outside of any section");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (key.empty() || value.empty())
            fail(source_name, line_no, "expected `key = value`");
        auto [it, inserted] = sections[current].insert({key, {value, line_no}});
        if (!inserted)
            fail(source_name, line_no, "duplicate key `" + key + "`");
    }

    for (const char* required : {"scenario", "tx", "rx"})
        if (!sections.count(required))
            throw ValidationError(source_name + ": missing section [" + std::string(required) + "]");

    SectionReader scen(source_name, "scenario", sections["scenario"]);
    Scenario s;
    s.fc_ghz = scen.number("fc_ghz");
    const std::string condition = scen.text("condition");
    if (condition == "los")
        s.condition = Condition::Los;
    else if (condition == "nlos")
        s.condition = Condition::Nlos;
    else
        fail(source_name, scen.line_of("condition"),
             "condition must be `los` or `nlos`, got `" + condition + "`");
    s.d_min_m = scen.number("d_min_m");
    s.d_max_m = scen.number("d_max_m");
    s.d_step_m = scen.number("d_step_m");
    s.sigma_tau_s = scen.number("sigma_tau_ns") * 1e-9;
    s.gamma = scen.number("gamma");
    s.kappa_db = scen.number_or("kappa_db", 22.0);
    s.alpha_t_deg = scen.number_or("alpha_t_deg", 180.0);
    s.alpha_r_deg = scen.number_or("alpha_r_deg", 0.0);
    s.n_phi = scen.integer_or("n_phi", 3600);
    s.h_bs_m = scen.number_or("h_bs_m", 25.0);
    s.h_ut_m = scen.number_or("h_ut_m", 1.5);
    scen.reject_unconsumed();

    SectionReader tx(source_name, "tx", sections["tx"]);
    s.tx_spec = parse_pattern_section(tx);
    SectionReader rx(source_name, "rx", sections["rx"]);
    s.rx_spec = parse_pattern_section(rx);

    try
    {
        s.validate();
    }
    catch (const ValidationError& err)
    {
        throw ValidationError(source_name + ": " + err.what());
    }
    return s;
}

Scenario parse_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open scenario file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), path.string());
}

namespace
{

// Shortest representation that parses back to the same double.
std::string format_number(double value)
{
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

void write_pattern_section(std::ostream& out, const char* name, const PatternSpec& spec)
{
    out << "[" << name << "]\n";
    out << "type = " << pattern_kind_name(spec.kind) << "\n";
    switch (spec.kind)
    {
    case PatternKind::Gaussian:
    case PatternKind::Sinc:
        out << "hpbw_deg = " << format_number(spec.hpbw_deg) << "\n";
        break;
    case PatternKind::Element3gpp:
        out << "phi3db_deg = " << format_number(spec.phi3db_deg) << "\n";
        out << "a_m_db = " << format_number(spec.a_m_db) << "\n";
        break;
    case PatternKind::GnodebArray:
        out << "columns = " << spec.columns << "\n";
        out << "spacing_wl = " << format_number(spec.spacing_wl) << "\n";
        break;
    case PatternKind::Omni:
    case PatternKind::UeElement:
        break;
    }
}

} // namespace

std::string write_scenario(const Scenario& s)
{
    std::ostringstream out;
    out << "[scenario]\n";
    out << "fc_ghz = " << format_number(s.fc_ghz) << "\n";
    out << "condition = " << (s.condition == Condition::Los ? "los" : "nlos") << "\n";
    out << "d_min_m = " << format_number(s.d_min_m) << "\n";
    out << "d_max_m = " << format_number(s.d_max_m) << "\n";
    out << "d_step_m = " << format_number(s.d_step_m) << "\n";
    out << "sigma_tau_ns = " << format_number(s.sigma_tau_s * 1e9) << "\n";
    out << "gamma = " << format_number(s.gamma) << "\n";
    out << "kappa_db = " << format_number(s.kappa_db) << "\n";
    out << "alpha_t_deg = " << format_number(s.alpha_t_deg) << "\n";
    out << "alpha_r_deg = " << format_number(s.alpha_r_deg) << "\n";
    out << "n_phi = " << s.n_phi << "\n";
    out << "h_bs_m = " << format_number(s.h_bs_m) << "\n";
    out << "h_ut_m = " << format_number(s.h_ut_m) << "\n";
    write_pattern_section(out, "tx", s.tx_spec);
    write_pattern_section(out, "rx", s.rx_spec);
    return out.str();
}

} // namespace dirloss
