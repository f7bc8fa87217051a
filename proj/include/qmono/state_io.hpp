#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qmono/monogamy.hpp"
#include "qmono/roof.hpp"
#include "qmono/tensor_core.hpp"

namespace qmono {

// Malformed state files and schema violations.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// State file schema: {"dims":[d,d,d],"amplitudes":[[re,im],...]} with the
// flat amplitude index running third-party-fastest. The bipartite variant
// uses {"dims":[dA,dB]} with row-major (second index fastest) amplitudes.
nlohmann::json tripartite_to_json(const PureTripartiteState& state);
PureTripartiteState tripartite_from_json(const nlohmann::json& j);
nlohmann::json bipartite_to_json(const BipartitePureState& state);
BipartitePureState bipartite_from_json(const nlohmann::json& j);

PureTripartiteState read_tripartite_file(const std::filesystem::path& path);
BipartitePureState read_bipartite_file(const std::filesystem::path& path);

// {"probabilities":[...],"members":[<bipartite state>...]}
nlohmann::json decomposition_to_json(const EnsembleDecomposition& decomposition);

// Throws FormatError if any number in the document is NaN or infinite.
void require_finite(const nlohmann::json& j);

// Atomic write (temp file + rename); validates finiteness first.
void write_json_atomic(const nlohmann::json& j, const std::filesystem::path& path);
void write_text_atomic(const std::string& text, const std::filesystem::path& path);

// Shortest round-trip decimal form; identical inputs format identically.
std::string format_double(double value);

std::string campaign_csv_header();
std::string campaign_row_csv(const CampaignRow& row);

}  // namespace qmono
