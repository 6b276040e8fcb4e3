// Command-line driver: parse a braiding / bilinear-form document, run
// one of the certification commands, emit a text or JSON report.
// Exit codes: 0 certified, 1 failed, 2 inconclusive, 3 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hopfcert/pipeline.hpp"

namespace {

struct CommonOpts {
  std::string input_path;
  std::string output_path;
  std::string format = "text";
  std::string q;
  std::vector<std::string> q_scan;
  int max_degree = 6;
  unsigned truncation = 6;
  uint64_t seed = 0;
  bool probe = false;
};

void add_common(CLI::App *cmd, CommonOpts &o) {
  cmd->add_option("input", o.input_path, "input JSON document")->required();
  cmd->add_option("--output", o.output_path, "write the report here");
  cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--q", o.q, "deformation scalar");
  cmd->add_option("--q-scan", o.q_scan,
                  "q candidates, scanned until one gives a finite "
                  "Nichols algebra");
  cmd->add_option("--max-degree", o.max_degree,
                  "highest Nichols degree scanned");
  cmd->add_option("--truncation", o.truncation,
                  "rewrite-system truncation degree");
  cmd->add_option("--seed", o.seed, "seed recorded in the report");
}

hopfcert::PipelineConfig load_config(const CommonOpts &o) {
  std::ifstream in(o.input_path);
  if (!in) throw hopfcert::input_error("cannot open " + o.input_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception &e) {
    throw hopfcert::input_error(std::string("invalid JSON: ") + e.what());
  }
  auto cfg = hopfcert::parse_input_document(doc);
  if (!o.q.empty())
    cfg.q_candidates = {o.q};
  else if (!o.q_scan.empty())
    cfg.q_candidates = o.q_scan;
  cfg.max_nichols_degree = o.max_degree;
  cfg.truncation_degree = o.truncation;
  cfg.seed = o.seed;
  cfg.run_probe = o.probe;
  return cfg;
}

int emit(const hopfcert::CertificationReport &report, const CommonOpts &o) {
  std::string text = o.format == "json" ? report.to_json().dump(2) + "\n"
                                        : report.to_text();
  if (o.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output_path);
    out << text;
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact certification of FRT localizations and "
               "bilinear-form Hopf algebras"};
  app.require_subcommand(1);

  CommonOpts pipeline_opts, dvl_opts, probe_opts, nichols_opts, braid_opts;
  auto *cmd_pipeline =
      app.add_subcommand("pipeline", "full certification chain");
  add_common(cmd_pipeline, pipeline_opts);
  auto *cmd_dvl =
      app.add_subcommand("dvl", "bilinear-form Hopf algebra certification");
  add_common(cmd_dvl, dvl_opts);
  cmd_dvl->add_flag("--probe", dvl_opts.probe,
                    "attach the relation-redundancy probe");
  auto *cmd_probe =
      app.add_subcommand("probe", "relation-family redundancy probe");
  add_common(cmd_probe, probe_opts);
  auto *cmd_nichols =
      app.add_subcommand("nichols", "Nichols dimension scan only");
  add_common(cmd_nichols, nichols_opts);
  auto *cmd_braid =
      app.add_subcommand("check-braid", "braid equation check only");
  add_common(cmd_braid, braid_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_pipeline->parsed())
      return emit(hopfcert::run_pipeline(load_config(pipeline_opts)),
                  pipeline_opts);
    if (cmd_dvl->parsed())
      return emit(hopfcert::run_dvl(load_config(dvl_opts)), dvl_opts);
    if (cmd_probe->parsed())
      return emit(hopfcert::run_probe(load_config(probe_opts)), probe_opts);
    if (cmd_nichols->parsed())
      return emit(hopfcert::run_nichols(load_config(nichols_opts)),
                  nichols_opts);
    if (cmd_braid->parsed())
      return emit(hopfcert::run_check_braid(load_config(braid_opts)),
                  braid_opts);
  } catch (const hopfcert::input_error &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const hopfcert::field_error &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
