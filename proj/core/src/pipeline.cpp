#include "hopfcert/pipeline.hpp"

#include <chrono>
#include <sstream>

namespace hopfcert {

std::string to_string(StageStatus s) {
  switch (s) {
    case StageStatus::Certified: return "certified";
    case StageStatus::Failed: return "failed";
    case StageStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

StageStatus stage_status_from_string(const std::string &s) {
  if (s == "certified") return StageStatus::Certified;
  if (s == "failed") return StageStatus::Failed;
  if (s == "inconclusive") return StageStatus::Inconclusive;
  throw input_error("unknown stage status: " + s);
}

StageStatus CertificationReport::overall() const {
  bool inconclusive = false;
  for (const auto &s : stages) {
    if (s.status == StageStatus::Failed) return StageStatus::Failed;
    if (s.status == StageStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? StageStatus::Inconclusive : StageStatus::Certified;
}

int CertificationReport::exit_code() const {
  switch (overall()) {
    case StageStatus::Certified: return 0;
    case StageStatus::Failed: return 1;
    case StageStatus::Inconclusive: return 2;
  }
  return 1;
}

nlohmann::ordered_json CertificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["overall"] = to_string(overall());
  j["seed"] = seed;
  j["stages"] = nlohmann::ordered_json::array();
  for (const auto &s : stages)
    j["stages"].push_back({{"name", s.name},
                           {"status", to_string(s.status)},
                           {"degree_bound", s.degree_bound},
                           {"witness", s.witness}});
  j["hilbert_prefix"] = hilbert_prefix;
  j["chosen_q"] = chosen_q;
  j["determinant"] = determinant;
  j["antipode"] = nlohmann::ordered_json::array();
  for (const auto &[gen, img] : antipode_images)
    j["antipode"].push_back({{"generator", gen}, {"image", img}});
  if (has_probe) {
    nlohmann::ordered_json p;
    p["degree"] = probe.degree;
    p["truncated"] = probe.truncated;
    p["summary"] = probe.summary;
    p["entries"] = nlohmann::ordered_json::array();
    for (const auto &e : probe.entries)
      p["entries"].push_back({{"lambda", e.lambda},
                              {"rho", e.rho},
                              {"vanished", e.vanished},
                              {"residue", e.residue}});
    j["probe"] = std::move(p);
  }
  return j;
}

CertificationReport CertificationReport::from_json(
    const nlohmann::ordered_json &j) {
  CertificationReport r;
  r.seed = j.at("seed").get<uint64_t>();
  for (const auto &s : j.at("stages"))
    r.stages.push_back({s.at("name").get<std::string>(),
                        stage_status_from_string(s.at("status")),
                        s.at("degree_bound").get<unsigned>(),
                        s.at("witness").get<std::string>()});
  r.hilbert_prefix = j.at("hilbert_prefix").get<std::vector<size_t>>();
  r.chosen_q = j.at("chosen_q").get<std::string>();
  r.determinant = j.at("determinant").get<std::string>();
  for (const auto &a : j.at("antipode"))
    r.antipode_images.emplace_back(a.at("generator").get<std::string>(),
                                   a.at("image").get<std::string>());
  if (j.contains("probe")) {
    r.has_probe = true;
    const auto &p = j.at("probe");
    r.probe.degree = p.at("degree").get<unsigned>();
    r.probe.truncated = p.at("truncated").get<bool>();
    r.probe.summary = p.at("summary").get<std::string>();
    for (const auto &e : p.at("entries"))
      r.probe.entries.push_back({e.at("lambda").get<int>(),
                                 e.at("rho").get<int>(),
                                 e.at("residue").get<std::string>(),
                                 e.at("vanished").get<bool>()});
  }
  return r;
}

std::string CertificationReport::to_text() const {
  std::ostringstream os;
  for (const auto &s : stages) {
    os << "[" << to_string(s.status) << "] " << s.name;
    if (s.degree_bound) os << " (verified up to degree " << s.degree_bound
                           << ")";
    if (!s.witness.empty()) os << ": " << s.witness;
    os << "\n";
  }
  if (!hilbert_prefix.empty()) {
    os << "hilbert prefix:";
    for (size_t d : hilbert_prefix) os << " " << d;
    os << "\n";
  }
  if (!chosen_q.empty()) os << "q = " << chosen_q << "\n";
  if (!determinant.empty()) os << "D = " << determinant << "\n";
  for (const auto &[gen, img] : antipode_images)
    os << "S(" << gen << ") = " << img << "\n";
  if (has_probe) {
    os << "probe (degree " << probe.degree << "): " << probe.summary << "\n";
    for (const auto &e : probe.entries)
      os << "  (" << e.lambda << "," << e.rho << ") "
         << (e.vanished ? "vanished" : "residue: " + e.residue) << "\n";
  }
  for (const auto &[name, ms] : timings_ms)
    os << "time " << name << ": " << ms << " ms\n";
  os << "overall: " << to_string(overall()) << "\n";
  return os.str();
}

namespace {

Scalar parse_scalar(FieldSpec spec, const nlohmann::json &v) {
  if (v.is_number_integer())
    return Scalar(spec, Rational(v.get<long>()));
  if (v.is_string()) return Scalar::parse(spec, v.get<std::string>());
  throw input_error("scalar entries must be strings or integers");
}

class StageRunner {
public:
  explicit StageRunner(CertificationReport &report) : report_(report) {}

  /// Runs fn, timing it; fn fills the stage result. Returns false when
  /// the pipeline should halt.
  bool run(const std::string &name,
           const std::function<void(StageResult &)> &fn) {
    StageResult stage;
    stage.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(stage);
    } catch (const input_error &) {
      throw;
    } catch (const std::exception &e) {
      stage.status = StageStatus::Failed;
      stage.witness = e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    report_.timings_ms.emplace_back(
        name, std::chrono::duration<double, std::milli>(stop - start).count());
    report_.stages.push_back(stage);
    return stage.status == StageStatus::Certified;
  }

private:
  CertificationReport &report_;
};

void stage_from_verify(StageResult &stage, const VerifyReport &v) {
  if (!v.ok) {
    stage.status = StageStatus::Failed;
    stage.witness = v.failures.front();
  } else if (!v.certified) {
    stage.status = StageStatus::Inconclusive;
    stage.witness = "reductions above the certified degree range";
  }
}

}  // namespace

PipelineConfig parse_input_document(const nlohmann::json &doc) {
  PipelineConfig cfg;
  try {
    if (doc.contains("field")) {
      const auto &f = doc.at("field");
      if (f.contains("cyclotomic"))
        cfg.field = FieldSpec::cyclotomic(f.at("cyclotomic").get<unsigned>());
      else if (f.contains("rationals"))
        cfg.field = FieldSpec::rationals();
      else
        throw input_error("field must declare cyclotomic or rationals");
    }
    cfg.n = doc.at("n").get<int>();
    if (cfg.n < 1) throw input_error("n must be positive");
    if (doc.contains("braiding")) {
      const auto &b = doc.at("braiding");
      if (b.contains("flip_scaled")) {
        Scalar q = parse_scalar(cfg.field, b.at("flip_scaled"));
        cfg.braiding = Braiding::flip(cfg.field, cfg.n).scaled(q);
      } else if (b.contains("diagonal")) {
        const auto &rows = b.at("diagonal");
        Mat q(cfg.field, cfg.n, cfg.n);
        for (int i = 0; i < cfg.n; ++i)
          for (int j = 0; j < cfg.n; ++j)
            q.at(i, j) = parse_scalar(cfg.field, rows.at(i).at(j));
        cfg.braiding = Braiding::diagonal(q);
      } else if (b.contains("dense")) {
        const auto &flat = b.at("dense");
        size_t n = cfg.n;
        if (flat.size() != n * n * n * n)
          throw input_error("dense braiding needs n^4 entries");
        Braiding c(cfg.field, cfg.n);
        size_t idx = 0;
        for (int i = 1; i <= cfg.n; ++i)
          for (int j = 1; j <= cfg.n; ++j)
            for (int k = 1; k <= cfg.n; ++k)
              for (int l = 1; l <= cfg.n; ++l)
                c.set_entry(i, j, k, l,
                            parse_scalar(cfg.field, flat.at(idx++)));
        cfg.braiding = c;
      } else {
        throw input_error("unknown braiding shorthand");
      }
    }
    if (doc.contains("bilinear_form")) {
      const auto &rows = doc.at("bilinear_form");
      Mat b(cfg.field, cfg.n, cfg.n);
      for (int i = 0; i < cfg.n; ++i)
        for (int j = 0; j < cfg.n; ++j)
          b.at(i, j) = parse_scalar(cfg.field, rows.at(i).at(j));
      cfg.form = BilinearForm(std::move(b));
    }
  } catch (const input_error &) {
    throw;
  } catch (const std::exception &e) {
    throw input_error(std::string("malformed input document: ") + e.what());
  }
  return cfg;
}

CertificationReport run_check_braid(const PipelineConfig &cfg) {
  if (!cfg.braiding) throw input_error("document carries no braiding");
  CertificationReport report;
  report.seed = cfg.seed;
  StageRunner runner(report);
  runner.run("check_braid", [&](StageResult &stage) {
    auto res = check_braid(*cfg.braiding);
    if (!res.ok) {
      stage.status = StageStatus::Failed;
      std::string w;
      for (int x : res.witness) w += std::to_string(x) + " ";
      stage.witness = "braid equation fails at indices " + w;
    }
  });
  return report;
}

CertificationReport run_nichols(const PipelineConfig &cfg) {
  if (!cfg.braiding) throw input_error("document carries no braiding");
  CertificationReport report;
  report.seed = cfg.seed;
  StageRunner runner(report);
  runner.run("nichols_compute", [&](StageResult &stage) {
    for (const auto &qs : cfg.q_candidates) {
      Scalar q = Scalar::parse(cfg.field, qs);
      NicholsData N = nichols_compute(*cfg.braiding, q,
                                      cfg.max_nichols_degree);
      report.hilbert_prefix = N.hilbert_prefix;
      report.chosen_q = q.render();
      if (N.finite) {
        stage.witness = "finite, top degree " + std::to_string(N.top);
        return;
      }
    }
    stage.status = StageStatus::Inconclusive;
    stage.witness = "no q candidate gave a finite-dimensional algebra "
                    "within the degree bound";
  });
  return report;
}

CertificationReport run_probe(const PipelineConfig &cfg) {
  if (!cfg.form) throw input_error("document carries no bilinear form");
  CertificationReport report;
  report.seed = cfg.seed;
  StageRunner runner(report);
  runner.run("redundancy_probe", [&](StageResult &stage) {
    report.probe = redundancy_probe(*cfg.form, cfg.truncation_degree);
    report.has_probe = true;
    stage.degree_bound = cfg.truncation_degree;
    stage.witness = report.probe.summary;
  });
  return report;
}

CertificationReport run_pipeline(const PipelineConfig &cfg) {
  if (!cfg.braiding) throw input_error("document carries no braiding");
  CertificationReport report;
  report.seed = cfg.seed;
  StageRunner runner(report);
  const Braiding &c = *cfg.braiding;

  if (!runner.run("check_braid", [&](StageResult &stage) {
        auto res = check_braid(c);
        if (!res.ok) {
          stage.status = StageStatus::Failed;
          std::string w;
          for (int x : res.witness) w += std::to_string(x) + " ";
          stage.witness = "braid equation fails at indices " + w;
        }
      }))
    return report;

  if (!runner.run("check_rigid", [&](StageResult &stage) {
        auto res = check_rigid(c);
        if (!res.ok) {
          stage.status = StageStatus::Failed;
          stage.witness = res.diagnostics;
        }
      }))
    return report;

  unsigned truncation = cfg.truncation_degree;
  PresentedBialgebra A;
  if (!runner.run("frt_bialgebra", [&](StageResult &stage) {
        A = frt_bialgebra(c, truncation);
        stage.degree_bound = truncation;
      }))
    return report;

  if (!runner.run("comultiplication_welldefined", [&](StageResult &stage) {
        auto res = check_comul_welldefined(A);
        if (!res.ok) {
          stage.status = StageStatus::Failed;
          stage.witness = res.witness;
        }
      }))
    return report;

  NicholsData N{c};
  if (!runner.run("nichols_compute", [&](StageResult &stage) {
        for (const auto &qs : cfg.q_candidates) {
          Scalar q = Scalar::parse(cfg.field, qs);
          N = nichols_compute(c, q, cfg.max_nichols_degree);
          report.hilbert_prefix = N.hilbert_prefix;
          report.chosen_q = q.render();
          if (N.finite) {
            stage.witness = "finite, top degree " + std::to_string(N.top);
            return;
          }
        }
        stage.status = StageStatus::Inconclusive;
        stage.witness = "no q candidate gave a finite-dimensional algebra "
                        "within the degree bound";
      }))
    return report;

  // Group-like certification of D needs the doubled system to degree
  // 2*top; bump the truncation if the configured bound is too small.
  if (truncation < 2u * unsigned(N.top)) {
    truncation = 2u * unsigned(N.top);
    runner.run("truncation_bump", [&](StageResult &stage) {
      stage.degree_bound = truncation;
      stage.witness = "truncation raised to 2*top";
      A = frt_bialgebra(c, truncation);
    });
  }

  PairingData P;
  if (!runner.run("pairing_data", [&](StageResult &stage) {
        P = pairing_data(N);
        (void)stage;
      }))
    return report;

  CorepData C;
  if (!runner.run("quantum_determinant", [&](StageResult &stage) {
        C = corep_matrices(A, N, P);
        report.determinant = C.D.render(A.alphabet);
        stage.degree_bound = truncation;
      }))
    return report;

  if (!runner.run("verify_determinant_identities", [&](StageResult &stage) {
        stage.degree_bound = truncation;
        stage_from_verify(stage, verify_determinant_identities(C, A));
      }))
    return report;

  if (!runner.run("colinearity", [&](StageResult &stage) {
        stage.degree_bound = truncation;
        stage_from_verify(stage, check_colinearity(A, N, P));
      }))
    return report;

  LocalizedAlgebra L;
  if (!runner.run("localize", [&](StageResult &stage) {
        L = localize(A, C.D, truncation);
        stage.degree_bound = truncation;
      }))
    return report;

  AntipodeMap S;
  if (!runner.run("build_antipode", [&](StageResult &stage) {
        S = build_antipode(L, C);
        stage.degree_bound = truncation;
        for (const auto &[id, img] : S.images)
          report.antipode_images.emplace_back(
              L.base.alphabet.symbols.at(id).name,
              img.render(L.base.alphabet));
      }))
    return report;

  runner.run("verify_hopf", [&](StageResult &stage) {
    stage.degree_bound = truncation;
    stage_from_verify(stage, verify_hopf(L, S));
  });
  return report;
}

CertificationReport run_dvl(const PipelineConfig &cfg) {
  if (!cfg.form) throw input_error("document carries no bilinear form");
  CertificationReport report;
  report.seed = cfg.seed;
  StageRunner runner(report);

  DvlBialgebra dvl;
  if (!runner.run("dvl_bialgebra", [&](StageResult &stage) {
        dvl = dvl_bialgebra(*cfg.form, cfg.truncation_degree);
        stage.degree_bound = cfg.truncation_degree;
      }))
    return report;

  if (!runner.run("comultiplication_welldefined", [&](StageResult &stage) {
        auto res = check_comul_welldefined(dvl.algebra);
        if (!res.ok) {
          stage.status = StageStatus::Failed;
          stage.witness = res.witness;
        }
      }))
    return report;

  runner.run("dvl_antipode", [&](StageResult &stage) {
    stage.degree_bound = cfg.truncation_degree;
    auto res = dvl_antipode(dvl, *cfg.form);
    for (const auto &[id, img] : res.S.images)
      report.antipode_images.emplace_back(
          dvl.algebra.alphabet.symbols.at(id).name,
          img.render(dvl.algebra.alphabet));
    stage_from_verify(stage, res.report);
  });

  if (cfg.run_probe)
    runner.run("redundancy_probe", [&](StageResult &stage) {
      report.probe = redundancy_probe(*cfg.form, cfg.truncation_degree);
      report.has_probe = true;
      stage.degree_bound = cfg.truncation_degree;
      stage.witness = report.probe.summary;
    });
  return report;
}

}  // namespace hopfcert
