#pragma once

// JSON state files. Two shapes are accepted:
//
//   {"matrix": [[[re, im], x4], x4]}
//   {"fano": {"x": [3], "y": [3], "T": [[3], [3], [3]]}}
//
// Exactly one of the two keys must be present.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lazyq/fano.hpp"

namespace lazyq {

/// Malformed JSON or a document that does not match either shape.
class StateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a state document. Shape problems raise StateFormatError; a
/// well-formed matrix that is not Hermitian with unit trace (within
/// kStateTol) raises InvalidStateError.
TwoQubitState state_from_json(const nlohmann::json& doc);
TwoQubitState read_state_file(const std::filesystem::path& path);

nlohmann::json state_to_json(const TwoQubitState& rho);
nlohmann::json fano_to_json(const FanoParams& p);
void write_state_file(const std::filesystem::path& path, const TwoQubitState& rho);

}  // namespace lazyq
