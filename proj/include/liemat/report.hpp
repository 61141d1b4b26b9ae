#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "liemat/linalg.hpp"

namespace liemat {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Vacuous };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Vacuous: return "VACUOUS";
  }
  return "?";
}

/// One catalog identity after a verification run.  FAIL entries always carry
/// a replayable counterexample; VACUOUS entries explain themselves in `note`.
struct EntryResult {
  std::string id;
  std::string anchor;
  Status status = Status::Vacuous;
  int trials = 0;
  double max_residual = 0.0;
  json counterexample;
  std::string note;
};

struct IdentityReport {
  std::string algebra;
  std::uint64_t seed = 0;
  int trials = 0;
  double tolerance = 0.0;
  std::vector<std::string> suites;
  std::vector<std::string> remarks;
  std::vector<EntryResult> entries;

  bool has_fail() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const EntryResult& e) { return e.status == Status::Fail; });
  }
  bool has_vacuous() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const EntryResult& e) { return e.status == Status::Vacuous; });
  }
  const EntryResult* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  json to_json() const {
    json j;
    j["algebra"] = algebra;
    j["seed"] = seed;
    j["trials"] = trials;
    j["tolerance"] = tolerance;
    j["suites"] = suites;
    j["remarks"] = remarks;
    j["entries"] = json::array();
    for (const auto& e : entries) {
      json je;
      je["id"] = e.id;
      je["anchor"] = e.anchor;
      je["status"] = to_string(e.status);
      je["trials"] = e.trials;
      je["max_residual"] = e.max_residual;
      if (e.status == Status::Fail) je["counterexample"] = e.counterexample;
      if (!e.note.empty()) je["note"] = e.note;
      j["entries"].push_back(std::move(je));
    }
    return j;
  }

  /// Canonical byte form: two-space indent, trailing newline.  Identical
  /// inputs and seeds serialize to identical bytes.
  std::string to_json_string() const { return to_json().dump(2) + "\n"; }

  std::string to_text() const {
    std::string out;
    char line[512];
    std::snprintf(line, sizeof(line), "algebra %s  seed %llu  trials %d  tol %g\n",
                  algebra.c_str(), static_cast<unsigned long long>(seed), trials, tolerance);
    out += line;
    out += "suites:";
    for (const auto& s : suites) out += " " + s;
    out += "\n\n";
    std::snprintf(line, sizeof(line), "%-44s %-8s %7s  %-12s %s\n", "id", "status", "trials",
                  "max_residual", "note");
    out += line;
    out += std::string(100, '-') + "\n";
    int pass = 0, fail = 0, vac = 0;
    for (const auto& e : entries) {
      (e.status == Status::Pass ? pass : e.status == Status::Fail ? fail : vac) += 1;
      std::snprintf(line, sizeof(line), "%-44s %-8s %7d  %-12.3e %s\n", e.id.c_str(),
                    to_string(e.status), e.trials, e.max_residual, e.note.c_str());
      out += line;
      if (e.status == Status::Fail && !e.counterexample.is_null())
        out += "    counterexample: " + e.counterexample.dump() + "\n";
    }
    out += std::string(100, '-') + "\n";
    std::snprintf(line, sizeof(line), "%d pass, %d fail, %d vacuous, %zu total\n", pass, fail,
                  vac, entries.size());
    out += line;
    for (const auto& r : remarks) out += "remark: " + r + "\n";
    return out;
  }
};

}  // namespace liemat
