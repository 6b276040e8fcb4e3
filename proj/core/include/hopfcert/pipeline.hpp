#ifndef HOPFCERT_PIPELINE_HPP
#define HOPFCERT_PIPELINE_HPP

#include <json.hpp>

#include "hopfcert/hopf.hpp"

namespace hopfcert {

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StageStatus { Certified, Failed, Inconclusive };

std::string to_string(StageStatus s);
StageStatus stage_status_from_string(const std::string &s);

struct StageResult {
  std::string name;
  StageStatus status = StageStatus::Certified;
  unsigned degree_bound = 0;
  std::string witness;
};

/// Machine- and human-readable certification record. The JSON form is
/// a deterministic function of (input, seed, config); wall-clock
/// timings appear in the text rendering only.
struct CertificationReport {
  std::vector<StageResult> stages;
  std::vector<size_t> hilbert_prefix;
  std::string chosen_q;
  std::string determinant;
  std::vector<std::pair<std::string, std::string>> antipode_images;
  bool has_probe = false;
  ProbeReport probe;
  uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> timings_ms;

  StageStatus overall() const;
  /// 0 certified, 1 failed, 2 inconclusive.
  int exit_code() const;

  nlohmann::ordered_json to_json() const;
  static CertificationReport from_json(const nlohmann::ordered_json &j);
  std::string to_text() const;
};

struct PipelineConfig {
  FieldSpec field;
  int n = 0;
  std::optional<Braiding> braiding;
  std::optional<BilinearForm> form;
  /// q candidates, parsed in `field`; the scan stops at the first one
  /// giving a finite-dimensional Nichols algebra.
  std::vector<std::string> q_candidates{"-1"};
  int max_nichols_degree = 6;
  unsigned truncation_degree = 6;
  uint64_t seed = 0;
  bool run_probe = false;
};

/// Parse the braiding / bilinear-form input document:
/// { "field": {"cyclotomic": m}, "n": 2,
///   "braiding": {"flip_scaled": "-1"} | {"diagonal": [[..]]} |
///               {"dense": [...]} ,
///   "bilinear_form": [[..]] }
/// Dense entries are flat, index order (i, j, k, l).
PipelineConfig parse_input_document(const nlohmann::json &doc);

/// The full Theorem-certification chain: braid and rigidity checks, FRT
/// construction, Nichols scan over the q candidates, pairing,
/// determinant, corepresentation identities, localization, antipode.
CertificationReport run_pipeline(const PipelineConfig &cfg);

/// Bilinear-form route: DVL algebra, antipode, optional redundancy
/// probe.
CertificationReport run_dvl(const PipelineConfig &cfg);

CertificationReport run_nichols(const PipelineConfig &cfg);
CertificationReport run_check_braid(const PipelineConfig &cfg);
CertificationReport run_probe(const PipelineConfig &cfg);

}  // namespace hopfcert

#endif
