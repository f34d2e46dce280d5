// Copyright 2026 The ioncluster Authors
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

#include "ioncluster/sequence_io.h"

#include <cmath>
#include <set>

#include "ioncluster/errors.h"

namespace ioncluster {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw ValidationError(where + " must be an object");
    }
    for (const auto &item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw ValidationError("unknown field \"" + item.key() + "\" in " + where);
        }
    }
}

const json &require(const json &obj, const std::string &key, const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError("missing field \"" + key + "\" in " + where);
    }
    return *it;
}

double require_number(const json &obj, const std::string &key, const std::string &where) {
    const json &v = require(obj, key, where);
    if (!v.is_number()) {
        throw ValidationError("field \"" + key + "\" in " + where + " must be a number");
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ValidationError("field \"" + key + "\" in " + where + " must be finite");
    }
    return d;
}

const char *level_key(IonLevel level) {
    switch (level) {
        case IonLevel::G:
            return "g";
        case IonLevel::E:
            return "e";
        case IonLevel::EPrime:
            return "eprime";
    }
    return "?";
}

IonLevel parse_level(const json &v, const std::string &where) {
    if (v == "g") {
        return IonLevel::G;
    }
    if (v == "e") {
        return IonLevel::E;
    }
    if (v == "eprime") {
        return IonLevel::EPrime;
    }
    throw ValidationError("level in " + where + " must be \"g\", \"e\" or \"eprime\"");
}

PulseKind parse_kind(const json &v, const std::string &where) {
    for (PulseKind k : {PulseKind::SidebandGE, PulseKind::SidebandGEPrime, PulseKind::Carrier}) {
        if (v == pulse_kind_name(k)) {
            return k;
        }
    }
    throw ValidationError("kind in " + where + " must be \"sideband_ge\", \"sideband_geprime\" or \"carrier\"");
}

json complex_to_json(Amplitude a) { return json{{"re", a.real()}, {"im", a.imag()}}; }

}  // namespace

json pulse_to_json(const Pulse &pulse) {
    return json{{"kind", pulse_kind_name(pulse.kind)}, {"ion", pulse.ion}, {"phi", pulse.phi}, {"theta", pulse.theta}};
}

json sequence_to_json(const PulseSequence &seq) {
    json ions = json::array();
    for (const auto &prep : seq.preps) {
        json terms = json::array();
        for (const auto &t : prep.terms) {
            terms.push_back({{"level", level_key(t.level)}, {"re", t.coefficient.real()}, {"im", t.coefficient.imag()}});
        }
        ions.push_back(std::move(terms));
    }
    json steps = json::array();
    for (const auto &s : seq.steps) {
        json j = pulse_to_json(s.pulse);
        if (!s.label.empty()) {
            j["label"] = s.label;
        }
        steps.push_back(std::move(j));
    }
    return json{{"version", std::string(kSequenceVersion)}, {"ions", std::move(ions)}, {"steps", std::move(steps)}};
}

PulseSequence sequence_from_json(const json &doc) {
    reject_unknown_keys(doc, {"version", "ions", "steps"}, "sequence");
    const json &version = require(doc, "version", "sequence");
    if (version != std::string(kSequenceVersion)) {
        throw ValidationError("unsupported sequence version " + version.dump() + ", expected \"" +
                              std::string(kSequenceVersion) + "\"");
    }

    PulseSequence seq;
    const json &ions = require(doc, "ions", "sequence");
    if (!ions.is_array()) {
        throw ValidationError("\"ions\" must be an array");
    }
    for (std::size_t i = 0; i < ions.size(); i++) {
        const std::string where = "ion " + std::to_string(i + 1);
        if (!ions[i].is_array()) {
            throw ValidationError(where + " preparation must be an array of terms");
        }
        IonPrep prep;
        for (const auto &term : ions[i]) {
            reject_unknown_keys(term, {"level", "re", "im"}, where);
            prep.terms.push_back({parse_level(require(term, "level", where), where),
                                  {require_number(term, "re", where), require_number(term, "im", where)}});
        }
        seq.preps.push_back(std::move(prep));
    }

    const json &steps = require(doc, "steps", "sequence");
    if (!steps.is_array()) {
        throw ValidationError("\"steps\" must be an array");
    }
    for (std::size_t i = 0; i < steps.size(); i++) {
        const std::string where = "step " + std::to_string(i + 1);
        const json &s = steps[i];
        reject_unknown_keys(s, {"kind", "ion", "phi", "theta", "label"}, where);
        const json &ion = require(s, "ion", where);
        if (!ion.is_number_integer() || ion.get<long long>() < 1) {
            throw ValidationError("\"ion\" in " + where + " must be a positive integer");
        }
        SequenceStep step;
        step.pulse.kind = parse_kind(require(s, "kind", where), where);
        step.pulse.ion = ion.get<std::size_t>();
        step.pulse.phi = require_number(s, "phi", where);
        step.pulse.theta = require_number(s, "theta", where);
        if (auto it = s.find("label"); it != s.end()) {
            if (!it->is_string()) {
                throw ValidationError("\"label\" in " + where + " must be a string");
            }
            step.label = it->get<std::string>();
        }
        seq.steps.push_back(std::move(step));
    }
    seq.validate();
    // Normalization and level checks live in the register constructor.
    new_register(seq.preps, 1);
    return seq;
}

std::string emit_sequence(const PulseSequence &seq) { return dump_document(sequence_to_json(seq)); }

PulseSequence parse_sequence(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw ValidationError(std::string("malformed sequence file: ") + e.what());
    }
    return sequence_from_json(doc);
}

json amplitudes_to_json(const RegisterState &state, bool full) {
    json out = json::array();
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (!full && std::abs(amps[i]) <= kReportAmplitudeCutoff) {
            continue;
        }
        out.push_back({{"index", i},
                       {"label", format_label(decode_index(i, state.n_ions(), state.n_max()))},
                       {"re", amps[i].real()},
                       {"im", amps[i].imag()}});
    }
    return out;
}

json verification_to_json(const VerificationReport &report) {
    json j{{"fidelity", report.fidelity},
           {"leakage_eprime", report.leakage_eprime},
           {"leakage_mode", report.leakage_mode},
           {"global_phase", complex_to_json(report.global_phase)}};
    if (report.stabilizer_expectations) {
        j["stabilizer_expectations"] = *report.stabilizer_expectations;
    } else {
        j["stabilizer_expectations"] = nullptr;
    }
    return j;
}

std::string dump_document(const json &doc) { return doc.dump(2) + "\n"; }

}  // namespace ioncluster
