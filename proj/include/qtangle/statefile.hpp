#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qtangle/invariants.hpp"
#include "qtangle/state.hpp"
#include "qtangle/verify.hpp"

namespace qtangle {

// State file format, version 1: a JSON object
//   {
//     "version": 1,
//     "n_qubits": 4,
//     "label": "optional name",
//     "amplitudes": [[re, im], ...]   // 2^n pairs, big-endian index order:
//   }                                 // a_{i1 i2 i3 i4} at i1*8+i2*4+i3*2+i4
//
// Parse errors name the violated invariant (wrong amplitude count, bad pair,
// non-finite entry, unsupported version).

StateVector parse_state_json(const nlohmann::json& doc, std::string* label_out = nullptr);
StateVector read_state_file(const std::filesystem::path& path, std::string* label_out = nullptr);

nlohmann::ordered_json state_file_json(const StateVector& state, const std::string& label);
void write_state_file(const std::filesystem::path& path, const StateVector& state,
                      const std::string& label = "");

/// Complex value as a JSON [re, im] pair.
nlohmann::ordered_json complex_json(Complex z);

/// InvariantReport as a JSON object; field order is fixed.
nlohmann::ordered_json report_json(const InvariantReport& report);

/// CheckOutcome as the flat JSON object {name, trials, max_residual, pass, seed}.
nlohmann::ordered_json check_outcome_json(const CheckOutcome& outcome);

/// Text rendering of a complex value, e.g. "0.25", "-0.5i", "0.25-0.5i".
std::string format_complex(Complex z);

}  // namespace qtangle
