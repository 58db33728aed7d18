#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtangle/invariants.hpp"
#include "qtangle/state.hpp"
#include "qtangle/statefile.hpp"
#include "qtangle/verify.hpp"

using namespace qtangle;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "qtangle_statefile";
  std::filesystem::create_directories(dir);
  return dir / name;
}

json valid_doc() {
  json doc;
  doc["version"] = 1;
  doc["n_qubits"] = 4;
  doc["amplitudes"] = json::array();
  for (int i = 0; i < 16; ++i) doc["amplitudes"].push_back({i == 0 ? 1.0 : 0.0, 0.0});
  return doc;
}

}  // namespace

TEST_CASE("state files round-trip every builtin bit for bit") {
  for (const std::string& name : builtin_names()) {
    const StateVector original = builtin_state(name);
    const std::filesystem::path path = temp_file("roundtrip_" + name + ".json");
    write_state_file(path, original, name);

    std::string label;
    const StateVector loaded = read_state_file(path, &label);
    CHECK(label == name);
    CHECK(loaded.n_qubits() == original.n_qubits());
    REQUIRE(loaded.dim() == original.dim());
    for (std::size_t i = 0; i < original.dim(); ++i) CHECK(loaded[i] == original[i]);
  }
}

TEST_CASE("labels are optional") {
  const std::filesystem::path path = temp_file("unlabeled.json");
  write_state_file(path, builtin_state("w4"), "");
  CHECK_FALSE(state_file_json(builtin_state("w4"), "").contains("label"));

  std::string label = "stale";
  const StateVector loaded = read_state_file(path, &label);
  CHECK(label.empty());
  CHECK(loaded.dim() == 16);

  // Reading without caring about the label works too.
  CHECK(read_state_file(path).dim() == 16);
}

TEST_CASE("parse failures name the violated invariant") {
  json doc = valid_doc();
  doc.erase("n_qubits");
  CHECK_THROWS_WITH(parse_state_json(doc), doctest::Contains("missing field \"n_qubits\""));

  doc = valid_doc();
  doc["version"] = 2;
  CHECK_THROWS_WITH(parse_state_json(doc), doctest::Contains("unsupported state file version"));

  doc = valid_doc();
  doc["n_qubits"] = 5;
  CHECK_THROWS_WITH(parse_state_json(doc), doctest::Contains("unsupported qubit count 5"));

  doc = valid_doc();
  doc["amplitudes"].erase(15);
  CHECK_THROWS_WITH(parse_state_json(doc),
                    doctest::Contains("expected 16 amplitudes for 4 qubits, got 15"));

  doc = valid_doc();
  doc["amplitudes"][3] = {1.0, 2.0, 3.0};
  CHECK_THROWS_WITH(parse_state_json(doc), doctest::Contains("[re, im] pair"));

  doc = valid_doc();
  doc["amplitudes"][7] = {std::numeric_limits<double>::infinity(), 0.0};
  CHECK_THROWS_WITH(parse_state_json(doc), doctest::Contains("non-finite amplitude at index 7"));

  CHECK_THROWS_AS(parse_state_json(json::array()), std::invalid_argument);
}

// example_state.json in the repository root places 0.8 at |0111> and 0.6 at
// |1000>; its two asymmetric weights pin the big-endian flat-index layout.
TEST_CASE("the committed example file fixes the index convention") {
  std::string label;
  const StateVector s = read_state_file(QTANGLE_EXAMPLE_STATE, &label);
  CHECK(label == "index-convention demo");
  CHECK(s.a(0, 1, 1, 1) == Complex(0.8));
  CHECK(s.a(1, 0, 0, 0) == Complex(0.6));
  CHECK(s[7] == Complex(0.8));
  CHECK(s[8] == Complex(0.6));
  CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("unreadable or malformed files") {
  CHECK_THROWS_AS(read_state_file(temp_file("does_not_exist.json")), std::runtime_error);

  const std::filesystem::path path = temp_file("garbage.json");
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_WITH(read_state_file(path), doctest::Contains("malformed JSON"));
}

TEST_CASE("complex serialization") {
  const ordered_json pair = complex_json(Complex(0.25, -0.5));
  REQUIRE(pair.is_array());
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].get<double>() == 0.25);
  CHECK(pair[1].get<double>() == -0.5);

  CHECK(format_complex(Complex(0.25, 0.0)) == "0.25");
  CHECK(format_complex(Complex(0.0, -0.5)) == "-0.5i");
  CHECK(format_complex(Complex(0.25, -0.5)) == "0.25-0.5i");
  CHECK(format_complex(Complex(0.25, 0.5)) == "0.25+0.5i");
  CHECK(format_complex(Complex(0.0, 0.0)) == "0");
}

TEST_CASE("report serialization shape") {
  const InvariantReport report = full_report(builtin_state("ghz4"), Qubit::A3);
  const ordered_json doc = report_json(report);
  CHECK(doc["distinguished"] == "A3");
  CHECK(doc["degenerate"] == false);
  CHECK(doc["tau4"].is_number());
  CHECK(doc["i48"].is_array());
  REQUIRE(doc["two_qubit_invariants"].is_array());
  REQUIRE(doc["two_qubit_invariants"].size() == 14);
  CHECK(doc["two_qubit_invariants"][0].contains("label"));
  CHECK(doc["two_qubit_invariants"][0].contains("value"));

  // Field order is part of the output contract.
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected = {"distinguished", "degenerate", "i3_0", "i3_1",
                                             "p_0",           "p_1",        "t",    "i48",
                                             "j",             "delta",      "tau4",
                                             "two_qubit_invariants"};
  CHECK(keys == expected);
}

TEST_CASE("check outcome serialization carries exactly the stable fields") {
  const CheckOutcome outcome = check_transformation_law(5, 17);
  const ordered_json doc = check_outcome_json(outcome);
  REQUIRE(doc.size() == 5);
  CHECK(doc["name"] == "transformation_law");
  CHECK(doc["trials"] == 5);
  CHECK(doc["pass"] == true);
  CHECK(doc["seed"] == 17);
  CHECK(doc["max_residual"].is_number());
}
