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

#include "posthoc/clockham/serialize.h"

#include <cstdio>

#include "json.hpp"

namespace posthoc {

std::string to_text(const XZHamiltonian &h) {
    std::string out = "{\n  \"num_qubits\": " + std::to_string(h.num_qubits()) + ",\n  \"terms\": [\n";
    char buf[64];
    for (size_t i = 0; i < h.size(); i++) {
        const auto &t = h.terms()[i];
        std::snprintf(buf, sizeof(buf), "%.17g", t.coefficient());
        out += "    {\"coefficient\": ";
        out += buf;
        out += ", \"paulis\": \"" + t.str() + "\"}";
        out += i + 1 < h.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

XZHamiltonian hamiltonian_from_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(std::string("hamiltonian: ") + e.what());
    }
    try {
        const int n = doc.at("num_qubits").get<int>();
        PauliSum terms;
        for (const auto &t : doc.at("terms")) {
            terms.push_back(PauliString::from_str(t.at("paulis").get<std::string>(), t.at("coefficient").get<double>()));
        }
        return XZHamiltonian(n, terms);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("hamiltonian: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("hamiltonian: ") + e.what());
    }
}

}  // namespace posthoc
