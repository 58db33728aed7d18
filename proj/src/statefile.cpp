#include "qtangle/statefile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qtangle {

using nlohmann::json;
using nlohmann::ordered_json;

StateVector parse_state_json(const json& doc, std::string* label_out) {
  if (!doc.is_object()) throw std::invalid_argument("state file must be a JSON object");
  for (const char* field : {"version", "n_qubits", "amplitudes"})
    if (!doc.contains(field))
      throw std::invalid_argument(std::string("state file is missing field \"") + field + "\"");

  if (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1)
    throw std::invalid_argument("unsupported state file version (expected version 1)");
  if (!doc["n_qubits"].is_number_integer())
    throw std::invalid_argument("field \"n_qubits\" must be an integer");
  const int n = doc["n_qubits"].get<int>();
  if (n != 3 && n != 4)
    throw std::invalid_argument("unsupported qubit count " + std::to_string(n) +
                                " (3 or 4 supported)");

  const auto& amps = doc["amplitudes"];
  if (!amps.is_array())
    throw std::invalid_argument("field \"amplitudes\" must be an array of [re, im] pairs");
  const std::size_t expected = std::size_t{1} << n;
  if (amps.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " amplitudes for " +
                                std::to_string(n) + " qubits, got " + std::to_string(amps.size()));

  std::vector<Complex> values;
  values.reserve(expected);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const auto& pair = amps[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw std::invalid_argument("amplitude " + std::to_string(i) +
                                  " must be a [re, im] pair of numbers");
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw std::invalid_argument("non-finite amplitude at index " + std::to_string(i));
    values.emplace_back(re, im);
  }

  if (label_out) {
    if (doc.contains("label")) {
      if (!doc["label"].is_string())
        throw std::invalid_argument("field \"label\" must be a string");
      *label_out = doc["label"].get<std::string>();
    } else {
      label_out->clear();
    }
  }
  return StateVector(n, std::move(values));
}

StateVector read_state_file(const std::filesystem::path& path, std::string* label_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
  }
  return parse_state_json(doc, label_out);
}

ordered_json state_file_json(const StateVector& state, const std::string& label) {
  ordered_json doc;
  doc["version"] = 1;
  doc["n_qubits"] = state.n_qubits();
  if (!label.empty()) doc["label"] = label;
  ordered_json amps = ordered_json::array();
  for (const Complex& z : state.amplitudes()) amps.push_back({z.real(), z.imag()});
  doc["amplitudes"] = std::move(amps);
  return doc;
}

void write_state_file(const std::filesystem::path& path, const StateVector& state,
                      const std::string& label) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write state file: " + path.string());
  out << state_file_json(state, label).dump(2) << '\n';
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json report_json(const InvariantReport& report) {
  ordered_json doc;
  doc["distinguished"] = to_string(report.distinguished);
  doc["degenerate"] = report.degenerate;
  doc["i3_0"] = complex_json(report.i3_0);
  doc["i3_1"] = complex_json(report.i3_1);
  doc["p_0"] = complex_json(report.p_0);
  doc["p_1"] = complex_json(report.p_1);
  doc["t"] = complex_json(report.t);
  doc["i48"] = complex_json(report.i48);
  doc["j"] = complex_json(report.j);
  doc["delta"] = complex_json(report.delta);
  doc["tau4"] = report.tau4;
  ordered_json pairs = ordered_json::array();
  for (const LabeledValue& lv : report.two_qubit_invariants) {
    ordered_json entry;
    entry["label"] = lv.label;
    entry["value"] = complex_json(lv.value);
    pairs.push_back(std::move(entry));
  }
  doc["two_qubit_invariants"] = std::move(pairs);
  return doc;
}

ordered_json check_outcome_json(const CheckOutcome& outcome) {
  ordered_json doc;
  doc["name"] = outcome.name;
  doc["trials"] = outcome.trials;
  doc["max_residual"] = outcome.max_residual;
  doc["pass"] = outcome.pass;
  doc["seed"] = outcome.seed;
  return doc;
}

std::string format_complex(Complex z) {
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  if (z.imag() == 0.0) return fmt(z.real());
  if (z.real() == 0.0) return fmt(z.imag()) + "i";
  std::string out = fmt(z.real());
  if (z.imag() > 0.0 || std::isnan(z.imag())) out += "+";
  out += fmt(z.imag()) + "i";
  return out;
}

}  // namespace qtangle
