// Copyright 2026 The cshadow Authors
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

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "cshadow/error.hpp"
#include "cshadow/shadow.hpp"

namespace cshadow {

namespace {

constexpr const char *kMagic = "#cshadow-bank v1";

std::uint64_t parse_outcome(const std::string &bits, int num_qubits) {
    if (static_cast<int>(bits.size()) != num_qubits) {
        throw DomainError("outcome bitstring length differs from num_qubits");
    }
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw DomainError("outcome bitstring contains '" + std::string(1, c) + "'");
        }
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return v;
}

} // namespace

void write_bank(std::ostream &out, const SnapshotBank &bank) {
    out << kMagic << '\n';
    out << "#ensemble " << to_string(bank.ensemble()) << '\n';
    out << "#num_qubits " << bank.num_qubits() << '\n';
    out << "#master_seed " << bank.master_seed() << '\n';
    out << "#records " << bank.size() << '\n';
    out << "#source " << bank.source_label() << '\n';
    for (const auto &r : bank.records()) {
        if (const auto *p = std::get_if<PauliBasisString>(&r.descriptor)) {
            out << "P " << p->to_string();
        } else {
            out << "C " << std::get<CliffordTableau>(r.descriptor).to_hex();
        }
        out << ' ' << r.outcome_string() << '\n';
    }
}

SnapshotBank read_bank(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kMagic) {
        throw IoError("not a cshadow bank file (missing '" + std::string(kMagic) + "' header)");
    }
    std::map<std::string, std::string> header;
    while (in.peek() == '#') {
        std::getline(in, line);
        const auto space = line.find(' ');
        if (space == std::string::npos) {
            throw IoError("malformed bank header line: " + line);
        }
        header[line.substr(1, space - 1)] = line.substr(space + 1);
    }
    for (const char *key : {"ensemble", "num_qubits", "master_seed", "records", "source"}) {
        if (!header.count(key)) {
            throw IoError(std::string("bank header is missing '") + key + "'");
        }
    }
    const Ensemble ensemble = ensemble_from_string(header["ensemble"]);
    const int n = std::stoi(header["num_qubits"]);
    const std::uint64_t seed = std::stoull(header["master_seed"]);
    const std::size_t expected = std::stoull(header["records"]);
    SnapshotBank bank(ensemble, n, header["source"], seed);
    bank.reserve(expected);
    std::size_t line_no = header.size() + 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string tag, desc, bits, extra;
        if (!(fields >> tag >> desc >> bits) || (fields >> extra)) {
            throw IoError("bank line " + std::to_string(line_no) + " does not have three fields");
        }
        try {
            const std::uint64_t outcome = parse_outcome(bits, n);
            if (tag == "P") {
                bank.append(MeasurementRecord{Ensemble::Pauli, PauliBasisString::parse(desc), outcome});
            } else if (tag == "C") {
                bank.append(MeasurementRecord{Ensemble::Clifford, CliffordTableau::from_hex(n, desc), outcome});
            } else {
                throw DomainError("unknown record tag '" + tag + "'");
            }
        } catch (const Error &e) {
            throw IoError("bank line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (bank.size() != expected) {
        throw IoError("bank declares " + std::to_string(expected) + " records but contains " + std::to_string(bank.size()));
    }
    return bank;
}

void save_bank(const std::string &path, const SnapshotBank &bank) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_bank(out, bank);
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

SnapshotBank load_bank(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    return read_bank(in);
}

} // namespace cshadow
