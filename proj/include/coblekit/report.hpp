#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coblekit/error.hpp"
#include "coblekit/partitions.hpp"
#include "coblekit/poly.hpp"
#include "coblekit/rational.hpp"
#include "coblekit/signed_perm.hpp"

namespace coblekit {

using Json = nlohmann::json;

enum class Status { Pass, Fail, EvidenceOnly };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::EvidenceOnly: return "evidence-only";
  }
  return "?";
}

struct Check {
  std::string check_id;
  std::string claim_ref;
  Status status = Status::Fail;
  Json details = Json::object();
  std::uint64_t elapsed_ms = 0;
};

struct ReportHeader {
  std::string version;
  std::vector<std::string> modeling_assumptions;
};

class VerificationReport {
 public:
  explicit VerificationReport(ReportHeader header) : header_(std::move(header)) {}

  void add(Check c) {
    if (!ids_.insert(c.check_id).second) throw Error(ErrorKind::InvalidArgument, "duplicate check id " + c.check_id);
    if (c.status == Status::Fail && !c.details.contains("witness"))
      throw std::logic_error("failing check without witness: " + c.check_id);
    checks_.push_back(std::move(c));
  }

  void add(std::vector<Check> cs) {
    for (auto& c : cs) add(std::move(c));
  }

  const std::vector<Check>& checks() const noexcept { return checks_; }
  const ReportHeader& header() const noexcept { return header_; }

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.status == s;
    return n;
  }
  bool failed() const { return count(Status::Fail) != 0; }

  void zero_timings() {
    for (auto& c : checks_) c.elapsed_ms = 0;
  }

  /// Canonical form: checks sorted by id, object keys sorted.
  Json to_json() const {
    Json checks = Json::array();
    std::vector<const Check*> sorted;
    for (const auto& c : checks_) sorted.push_back(&c);
    std::sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->check_id < b->check_id; });
    for (const auto* c : sorted)
      checks.push_back({{"check_id", c->check_id},
                        {"claim_ref", c->claim_ref},
                        {"status", to_string(c->status)},
                        {"details", c->details},
                        {"elapsed_ms", c->elapsed_ms}});
    return {{"header", {{"version", header_.version}, {"modeling_assumptions", header_.modeling_assumptions}}},
            {"checks", checks}};
  }

  void print_table(std::ostream& out) const {
    std::size_t width = 8;
    for (const auto& c : checks_) width = std::max(width, c.check_id.size());
    out << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(13) << "status"
        << std::right << std::setw(8) << "ms" << "  claim\n";
    for (const auto& c : checks_) {
      out << std::left << std::setw(static_cast<int>(width)) << c.check_id << "  " << std::setw(13) << to_string(c.status)
          << std::right << std::setw(8) << c.elapsed_ms << "  " << c.claim_ref << "\n";
      if (c.status == Status::Fail) out << "    witness: " << c.details["witness"].dump() << "\n";
    }
    out << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, " << count(Status::EvidenceOnly)
        << " evidence-only\n";
  }

 private:
  ReportHeader header_;
  std::vector<Check> checks_;
  std::set<std::string> ids_;
};

struct Outcome {
  Status status;
  Json details;
};

inline Outcome pass_if(bool ok, Json details, const std::string& witness) {
  if (!ok) details["witness"] = witness;
  return {ok ? Status::Pass : Status::Fail, std::move(details)};
}

/// Runs body, timing it; an escaping exception becomes a failing check.
inline Check run_check(std::string id, std::string claim_ref, const std::function<Outcome()>& body) {
  Check c{std::move(id), std::move(claim_ref), Status::Fail, Json::object(), 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [status, details] = body();
    c.status = status;
    c.details = std::move(details);
  } catch (const std::exception& e) {
    c.status = Status::Fail;
    c.details = {{"witness", e.what()}};
  }
  c.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return c;
}

// ---------------------------------------------------------------------------
// Serialization

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const VectorQ& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

/// Records {exponents, coeff} in ascending lexicographic exponent order.
inline Json to_json(const SparsePoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back({{"exponents", e}, {"coeff", to_string(c)}});
  return out;
}

inline Json to_json(const SignedPerm& g) { return g.to_string(); }

}  // namespace coblekit
