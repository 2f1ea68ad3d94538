// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/io/checkpoint.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wigner::io {
namespace {

using nlohmann::json;

json term_to_json(const BasisTerm& t) {
  const auto& g = t.gaussian;
  const int n = static_cast<int>(g.beta.size());
  json alpha = json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) alpha.push_back(g.alpha(i, j));
  }
  json beta = json::array(), shift = json::array();
  for (int i = 0; i < n; ++i) {
    beta.push_back(g.beta(i));
    shift.push_back(g.shift(i));
  }
  return {{"alpha", alpha}, {"beta", beta}, {"shift", shift}, {"photon", t.photon}};
}

BasisTerm term_from_json(const json& j, int particles) {
  const auto alpha = j.at("alpha").get<std::vector<double>>();
  const auto beta = j.at("beta").get<std::vector<double>>();
  const auto shift = j.at("shift").get<std::vector<double>>();
  if (static_cast<int>(beta.size()) != particles || static_cast<int>(shift.size()) != particles ||
      static_cast<int>(alpha.size()) != particles * (particles - 1) / 2) {
    throw UsageError("checkpoint term has the wrong number of parameters");
  }
  BasisTerm t;
  t.gaussian.alpha = SmallMat::Zero(particles, particles);
  t.gaussian.beta.resize(particles);
  t.gaussian.shift.resize(particles);
  int k = 0;
  for (int i = 0; i < particles; ++i) {
    for (int jj = i + 1; jj < particles; ++jj, ++k) {
      t.gaussian.alpha(i, jj) = t.gaussian.alpha(jj, i) = alpha[k];
    }
    t.gaussian.beta(i) = beta[i];
    t.gaussian.shift(i) = shift[i];
  }
  t.photon = j.at("photon").get<int>();
  return t;
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kGrow: return "grow";
    case Stage::kRefine: return "refine";
    case Stage::kDone: return "done";
  }
  return "grow";
}

Stage stage_from_string(std::string_view name) {
  if (name == "grow") return Stage::kGrow;
  if (name == "refine") return Stage::kRefine;
  if (name == "done") return Stage::kDone;
  throw UsageError("unknown checkpoint stage '" + std::string(name) + "'");
}

std::string checkpoint_to_json(const Checkpoint& c) {
  json terms = json::array();
  for (const auto& t : c.terms) terms.push_back(term_to_json(t));
  const json doc = {
      {"format", "wigner1d-checkpoint"},
      {"version", Checkpoint::kVersion},
      {"config", serialize_run_config(c.config)},
      {"config_hash", config_hash(c.config)},
      {"photon_blocks", c.photon_blocks},
      {"stage", std::string(to_string(c.stage))},
      {"rng_state", c.progress.rng_state},
      {"sweeps_done", c.progress.sweeps_done},
      {"next_refine_index", c.progress.next_refine_index},
      {"energy", c.energy},
      {"trace", c.trace},
      {"photon_energies", c.photon_energies},
      {"terms", terms},
  };
  return doc.dump(1) + "\n";
}

Checkpoint checkpoint_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != "wigner1d-checkpoint") {
      throw UsageError("not a checkpoint file");
    }
    const int version = doc.at("version").get<int>();
    if (version != Checkpoint::kVersion) {
      throw UsageError("unsupported checkpoint version " + std::to_string(version));
    }
    Checkpoint c;
    std::istringstream config(doc.at("config").get<std::string>());
    c.config = parse_run_config(config, "<checkpoint config>");
    c.photon_blocks = doc.at("photon_blocks").get<int>();
    c.stage = stage_from_string(doc.at("stage").get<std::string>());
    c.progress.rng_state = doc.at("rng_state").get<std::string>();
    c.progress.sweeps_done = doc.at("sweeps_done").get<int>();
    c.progress.next_refine_index = doc.at("next_refine_index").get<int>();
    c.energy = doc.at("energy").get<double>();
    c.trace = doc.at("trace").get<std::vector<double>>();
    c.photon_energies = doc.at("photon_energies").get<std::vector<double>>();
    for (const auto& t : doc.at("terms")) {
      c.terms.push_back(term_from_json(t, c.config.system.electrons));
    }
    if (c.photon_blocks < 1) throw UsageError("checkpoint photon block count must be >= 1");
    return c;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed checkpoint: ") + e.what());
  }
}

void save_checkpoint(const Checkpoint& checkpoint, const std::filesystem::path& path) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw UsageError("cannot write checkpoint " + tmp.string());
    out << checkpoint_to_json(checkpoint);
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open checkpoint " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return checkpoint_from_json(text.str());
}

}  // namespace wigner::io
