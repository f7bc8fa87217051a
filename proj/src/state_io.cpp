#include "qmono/state_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "qmono/tolerances.hpp"

namespace qmono {

namespace {

nlohmann::json amplitudes_to_json(const Eigen::VectorXcd& a) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.push_back({a[i].real(), a[i].imag()});
  return out;
}

Eigen::VectorXcd amplitudes_from_json(const nlohmann::json& j, long expected,
                                      const char* what) {
  if (!j.is_array() || static_cast<long>(j.size()) != expected)
    throw FormatError(std::string(what) + ": expected " + std::to_string(expected) +
                      " amplitude pairs");
  Eigen::VectorXcd a(expected);
  for (long i = 0; i < expected; ++i) {
    const auto& pair = j[static_cast<size_t>(i)];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      throw FormatError(std::string(what) + ": amplitude entries must be [re, im]");
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw FormatError(std::string(what) + ": non-finite amplitude");
    a[i] = Complex(re, im);
  }
  return a;
}

std::vector<long> dims_from_json(const nlohmann::json& j, size_t count,
                                 const char* what) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("amplitudes"))
    throw FormatError(std::string(what) + ": expected keys dims and amplitudes");
  const auto& dims = j["dims"];
  if (!dims.is_array() || dims.size() != count)
    throw FormatError(std::string(what) + ": dims must have " + std::to_string(count) +
                      " entries");
  std::vector<long> out;
  for (const auto& entry : dims) {
    if (!entry.is_number_integer() || entry.get<long>() < 1)
      throw FormatError(std::string(what) + ": dims must be positive integers");
    out.push_back(entry.get<long>());
  }
  return out;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

}  // namespace

nlohmann::json tripartite_to_json(const PureTripartiteState& state) {
  const int d = state.dim();
  return {{"dims", {d, d, d}}, {"amplitudes", amplitudes_to_json(state.amplitudes())}};
}

PureTripartiteState tripartite_from_json(const nlohmann::json& j) {
  const std::vector<long> dims = dims_from_json(j, 3, "tripartite state");
  if (dims[0] != dims[1] || dims[1] != dims[2])
    throw FormatError("tripartite state: dims must be [d, d, d]");
  if (dims[0] < 2) throw FormatError("tripartite state: d must be >= 2");
  const int d = static_cast<int>(dims[0]);
  const Eigen::VectorXcd a =
      amplitudes_from_json(j["amplitudes"], static_cast<long>(d) * d * d,
                           "tripartite state");
  return make_tripartite(d, a);
}

nlohmann::json bipartite_to_json(const BipartitePureState& state) {
  return {{"dims", {state.dims().first, state.dims().second}},
          {"amplitudes", amplitudes_to_json(state.flattened())}};
}

BipartitePureState bipartite_from_json(const nlohmann::json& j) {
  const std::vector<long> dims = dims_from_json(j, 2, "bipartite state");
  const int da = static_cast<int>(dims[0]);
  const int db = static_cast<int>(dims[1]);
  const Eigen::VectorXcd flat =
      amplitudes_from_json(j["amplitudes"], static_cast<long>(da) * db,
                           "bipartite state");
  const double norm = flat.norm();
  if (norm == 0.0) throw FormatError("bipartite state: zero amplitude vector");
  if (std::abs(norm - 1.0) > tol::kIngestNorm)
    throw FormatError("bipartite state: norm deviates from 1 by more than 1e-6");
  Eigen::MatrixXcd m(da, db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < db; ++k) m(i, k) = flat[i * db + k] / norm;
  return BipartitePureState({da, db}, std::move(m));
}

PureTripartiteState read_tripartite_file(const std::filesystem::path& path) {
  return tripartite_from_json(read_json_file(path));
}

BipartitePureState read_bipartite_file(const std::filesystem::path& path) {
  return bipartite_from_json(read_json_file(path));
}

nlohmann::json decomposition_to_json(const EnsembleDecomposition& decomposition) {
  nlohmann::json probs = nlohmann::json::array();
  nlohmann::json members = nlohmann::json::array();
  for (Eigen::Index h = 0; h < decomposition.probabilities.size(); ++h) {
    probs.push_back(decomposition.probabilities[h]);
    members.push_back(bipartite_to_json(decomposition.members[static_cast<size_t>(h)]));
  }
  return {{"probabilities", probs}, {"members", members}};
}

void require_finite(const nlohmann::json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>()))
    throw FormatError("refusing to serialize non-finite number");
  if (j.is_array() || j.is_object())
    for (const auto& item : j) require_finite(item);
}

void write_text_atomic(const std::string& text, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_json_atomic(const nlohmann::json& j, const std::filesystem::path& path) {
  require_finite(j);
  write_text_atomic(j.dump(2) + "\n", path);
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

std::string campaign_csv_header() {
  return "sample_index,dim,pivot,lhs_pow_d,rhs12_pow_d,rhs13_pow_d,residual,"
         "converged12,converged13";
}

std::string campaign_row_csv(const CampaignRow& row) {
  std::string out;
  out += std::to_string(row.sample_index);
  out += ',';
  out += std::to_string(row.dim);
  out += ',';
  out += std::to_string(row.pivot);
  out += ',';
  out += format_double(row.lhs_pow_d);
  out += ',';
  out += format_double(row.rhs12_pow_d);
  out += ',';
  out += format_double(row.rhs13_pow_d);
  out += ',';
  out += format_double(row.residual);
  out += ',';
  out += row.converged12 ? '1' : '0';
  out += ',';
  out += row.converged13 ? '1' : '0';
  return out;
}

}  // namespace qmono
