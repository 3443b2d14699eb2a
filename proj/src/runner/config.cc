// Copyright 2026 The posthoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posthoc/runner/config.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "posthoc/clockham/builder.h"
#include "posthoc/csscode/css_code.h"

namespace posthoc {

namespace {

using nlohmann::json;

// 1-based line of byte offset `pos`.
int line_of(std::string_view text, size_t pos) {
    int line = 1;
    for (size_t i = 0; i < pos && i < text.size(); i++) {
        line += text[i] == '\n';
    }
    return line;
}

class Diagnostics {
  public:
    Diagnostics(std::string_view text, std::string_view source) : text_(text), source_(source) {}

    // Line of the first occurrence of the quoted key, or 0 if it does not appear.
    int key_line(std::string_view key) const {
        const std::string quoted = "\"" + std::string(key) + "\"";
        const size_t at = text_.find(quoted);
        return at == std::string_view::npos ? 0 : line_of(text_, at);
    }

    [[noreturn]] void fail(std::string_view field, const std::string &problem) const {
        const std::string leaf(field.substr(field.rfind('.') == std::string_view::npos ? 0 : field.rfind('.') + 1));
        const int line = key_line(leaf);
        std::string msg(source_);
        if (line > 0) {
            msg += ":" + std::to_string(line);
        }
        msg += ": " + std::string(field) + ": " + problem;
        throw ConfigError(msg);
    }

    template <typename T>
    T get(const json &obj, const char *key, std::string_view path) const {
        try {
            return obj.at(key).get<T>();
        } catch (const json::exception &e) {
            fail(path, obj.contains(key) ? "wrong type" : "missing");
        }
    }

  private:
    std::string_view text_;
    std::string_view source_;
};

void reject_unknown(const Diagnostics &d, const json &obj, std::initializer_list<std::string_view> known,
                    std::string_view prefix) {
    for (const auto &[key, value] : obj.items()) {
        bool ok = false;
        for (auto k : known) {
            ok |= key == k;
        }
        if (!ok) {
            d.fail(std::string(prefix) + key, "unknown field");
        }
    }
}

}  // namespace

SweepMode parse_sweep_mode(std::string_view text) {
    if (text == "exact") {
        return SweepMode::exact;
    }
    if (text == "mc") {
        return SweepMode::mc;
    }
    if (text == "protocol") {
        return SweepMode::protocol;
    }
    throw ConfigError("unknown mode '" + std::string(text) + "' (exact, mc or protocol)");
}

std::string_view sweep_mode_name(SweepMode m) {
    switch (m) {
        case SweepMode::exact:
            return "exact";
        case SweepMode::mc:
            return "mc";
        case SweepMode::protocol:
            return "protocol";
    }
    return "?";
}

Circuit InstanceConfig::circuit() const {
    try {
        return Circuit(input_bit, gates);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("instance: ") + e.what());
    }
}

XZHamiltonian InstanceConfig::build_hamiltonian() const {
    const Circuit c = circuit();
    if (hamiltonian == HamiltonianSource::builder) {
        return build_component_hamiltonian(c, claimed_accept);
    }
    const auto ref = Circuit::example(input_bit).gates();
    bool same = gates.size() == ref.size();
    for (size_t i = 0; same && i < gates.size(); i++) {
        same = gates[i].kind == ref[i].kind && std::abs(gates[i].phi - ref[i].phi) < 1e-12;
    }
    if (!same || !claimed_accept) {
        throw ConfigError("instance.hamiltonian: 'example' only covers X, D(pi/8) with claimed_accept true");
    }
    return example_hamiltonian_xz(input_bit);
}

void validate(const SweepConfig &cfg) {
    if (cfg.grid.empty()) {
        throw ConfigError("grid: empty");
    }
    for (size_t i = 0; i < cfg.grid.size(); i++) {
        if (!(cfg.grid[i] >= 0.0 && cfg.grid[i] <= 1.0)) {
            throw ConfigError("grid: value outside [0,1]");
        }
        if (i > 0 && !(cfg.grid[i] > cfg.grid[i - 1])) {
            throw ConfigError("grid: values must be strictly increasing");
        }
    }
    if (cfg.mode != SweepMode::exact && cfg.reps < 1) {
        throw ConfigError("reps: must be >= 1 for sampling modes");
    }
    if (cfg.channel == ChannelFamily::none) {
        throw ConfigError("channel: a sweep needs bitflip or depolarizing");
    }
    if (cfg.threads < 1) {
        throw ConfigError("threads: must be >= 1");
    }
    CssCode::parse(cfg.code);
    cfg.instance.circuit();
}

SweepConfig parse_sweep_config(std::string_view text, std::string_view source) {
    const Diagnostics d(text, source);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string(source) + ":" + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) +
                          ": malformed JSON: " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError(std::string(source) + ":1: top level must be an object");
    }
    reject_unknown(d, doc, {"spec_version", "instance", "code", "channel", "grid", "reps", "mode", "seed", "threads"},
                   "");
    if (d.get<int>(doc, "spec_version", "spec_version") != kConfigSchemaVersion) {
        d.fail("spec_version", "unsupported version (expected 1)");
    }

    SweepConfig cfg;
    if (doc.contains("instance")) {
        const json &inst = doc["instance"];
        if (!inst.is_object()) {
            d.fail("instance", "must be an object");
        }
        reject_unknown(d, inst, {"gates", "input_bit", "claimed_accept", "hamiltonian"}, "instance.");
        if (inst.contains("gates")) {
            cfg.instance.gates.clear();
            for (const auto &g : d.get<std::vector<std::string>>(inst, "gates", "instance.gates")) {
                try {
                    cfg.instance.gates.push_back(Gate::parse(g));
                } catch (const std::invalid_argument &e) {
                    d.fail("instance.gates", e.what());
                }
            }
        }
        if (inst.contains("input_bit")) {
            cfg.instance.input_bit = d.get<int>(inst, "input_bit", "instance.input_bit");
            if (cfg.instance.input_bit != 0 && cfg.instance.input_bit != 1) {
                d.fail("instance.input_bit", "must be 0 or 1");
            }
        }
        if (inst.contains("claimed_accept")) {
            cfg.instance.claimed_accept = d.get<bool>(inst, "claimed_accept", "instance.claimed_accept");
        }
        if (inst.contains("hamiltonian")) {
            const auto h = d.get<std::string>(inst, "hamiltonian", "instance.hamiltonian");
            if (h == "example") {
                cfg.instance.hamiltonian = HamiltonianSource::example;
            } else if (h == "builder") {
                cfg.instance.hamiltonian = HamiltonianSource::builder;
            } else {
                d.fail("instance.hamiltonian", "expected 'example' or 'builder'");
            }
        }
    }

    cfg.code = d.get<std::string>(doc, "code", "code");
    try {
        CssCode::parse(cfg.code);
    } catch (const ConfigError &e) {
        d.fail("code", e.what());
    }
    try {
        cfg.channel = parse_channel_family(d.get<std::string>(doc, "channel", "channel"));
    } catch (const ConfigError &e) {
        d.fail("channel", e.what());
    }

    if (!doc.contains("grid")) {
        cfg.grid = cfg.code == "steane" ? steane_grid() : coarse_grid();
    } else if (doc["grid"].is_array()) {
        cfg.grid = d.get<std::vector<double>>(doc, "grid", "grid");
    } else if (doc["grid"].is_object()) {
        const json &g = doc["grid"];
        reject_unknown(d, g, {"start", "stop", "count"}, "grid.");
        const int count = d.get<int>(g, "count", "grid.count");
        if (count < 1) {
            d.fail("grid.count", "must be >= 1");
        }
        cfg.grid = equispaced_grid(d.get<double>(g, "start", "grid.start"), d.get<double>(g, "stop", "grid.stop"), count);
    } else {
        d.fail("grid", "must be a list of p values or {start, stop, count}");
    }

    if (doc.contains("mode")) {
        try {
            cfg.mode = parse_sweep_mode(d.get<std::string>(doc, "mode", "mode"));
        } catch (const ConfigError &e) {
            d.fail("mode", e.what());
        }
    }
    if (doc.contains("reps")) {
        cfg.reps = d.get<int64_t>(doc, "reps", "reps");
    }
    if (doc.contains("seed")) {
        cfg.seed = d.get<uint64_t>(doc, "seed", "seed");
    }
    if (doc.contains("threads")) {
        cfg.threads = d.get<int>(doc, "threads", "threads");
    }
    try {
        validate(cfg);
    } catch (const ConfigError &e) {
        const std::string what = e.what();
        d.fail(what.substr(0, what.find(':')), what.substr(what.find(':') + 2));
    }
    return cfg;
}

SweepConfig load_sweep_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path + ": cannot open");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config(buf.str(), path);
}

std::string to_json(const SweepConfig &cfg) {
    nlohmann::ordered_json j;
    j["spec_version"] = kConfigSchemaVersion;
    std::vector<std::string> gates;
    for (const auto &g : cfg.instance.gates) {
        gates.push_back(g.str());
    }
    j["instance"] = {{"gates", gates},
                     {"input_bit", cfg.instance.input_bit},
                     {"claimed_accept", cfg.instance.claimed_accept},
                     {"hamiltonian", cfg.instance.hamiltonian == HamiltonianSource::example ? "example" : "builder"}};
    j["code"] = cfg.code;
    j["channel"] = channel_family_name(cfg.channel);
    j["grid"] = cfg.grid;
    j["reps"] = cfg.reps;
    j["mode"] = sweep_mode_name(cfg.mode);
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    return j.dump(2) + "\n";
}

std::vector<double> equispaced_grid(double lo, double hi, int count) {
    if (count < 1) {
        throw std::invalid_argument("grid needs at least one point");
    }
    if (count == 1) {
        return {lo};
    }
    std::vector<double> g(count);
    for (int i = 0; i < count; i++) {
        g[i] = i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1);
    }
    return g;
}

std::vector<double> coarse_grid() {
    return equispaced_grid(0.0, 1.0, 12);
}

std::vector<double> steane_grid() {
    return equispaced_grid(0.05, 0.15, 12);
}

SweepConfig default_sweep(std::string_view code) {
    SweepConfig cfg;
    cfg.code = std::string(code);
    if (CssCode::parse(code).family() == CodeFamily::steane) {
        cfg.channel = ChannelFamily::depolarizing;
        cfg.grid = steane_grid();
        cfg.reps = 4000;
        cfg.mode = SweepMode::mc;
    } else {
        cfg.channel = ChannelFamily::bitflip;
        cfg.grid = coarse_grid();
        cfg.reps = 1000;
        cfg.mode = SweepMode::exact;
    }
    return cfg;
}

}  // namespace posthoc
