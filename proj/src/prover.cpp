#include "miquel/prover.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace miquel {

using nlohmann::json;

std::string_view to_string(ProofKind k) {
  switch (k) {
    case ProofKind::Core: return "core";
    case ProofKind::Audit: return "audit";
    case ProofKind::Info: return "info";
  }
  return "unknown";
}

std::string_view to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::Proved: return "proved";
    case ProofStatus::Refuted: return "refuted";
    case ProofStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

ProofKind parse_proof_kind(std::string_view s) {
  for (ProofKind k : {ProofKind::Core, ProofKind::Audit, ProofKind::Info}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::ParseError, "unknown proof kind: " + std::string(s));
}

ProofStatus parse_proof_status(std::string_view s) {
  for (ProofStatus k : {ProofStatus::Proved, ProofStatus::Refuted, ProofStatus::BudgetExceeded}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::ParseError, "unknown proof status: " + std::string(s));
}

const ProofTaskInfo* find_task(std::string_view name) {
  for (const auto& t : kProofTasks) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

ProofOutcome run_proof(const ProofTaskInfo& task, const ProverOptions& opts) {
  ProofOutcome out;
  out.name = task.name;
  out.statement = task.statement;
  out.kind = task.kind;
  const auto start = std::chrono::steady_clock::now();
  TermBudget budget(opts.budget);
  try {
    const ClaimSet<MultiPoly> claims = task_claims(task.name, symbolic_config(), opts.mutation);
    out.claims = claims.claims().size();
    out.max_terms = claims.max_terms();
    out.max_degree = claims.max_degree();
    out.status = ProofStatus::Proved;
    for (const auto& c : claims.claims()) {
      if (!c.residual.is_zero()) {
        out.status = ProofStatus::Refuted;
        out.failed_claim = c.label;
        out.residual = c.residual.to_string();
        break;
      }
    }
  } catch (const Error& e) {
    out.status = e.kind() == ErrorKind::BudgetExceeded ? ProofStatus::BudgetExceeded : ProofStatus::Refuted;
    out.message = e.what();
  }
  out.peak_terms = budget.peak();
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<ProofOutcome> prove_all(const ProverOptions& opts) {
  std::vector<ProofOutcome> out;
  for (const auto& t : kProofTasks) out.push_back(run_proof(t, opts));
  return out;
}

namespace {

json to_json(const ProofOutcome& o) {
  json j = {{"name", o.name},
            {"statement", o.statement},
            {"kind", to_string(o.kind)},
            {"status", to_string(o.status)},
            {"claims", o.claims},
            {"peak_terms", o.peak_terms},
            {"max_terms", o.max_terms},
            {"max_degree", o.max_degree},
            {"wall_ms", o.wall_ms}};
  if (!o.failed_claim.empty()) j["failed_claim"] = o.failed_claim;
  if (!o.residual.empty()) j["residual"] = o.residual;
  if (!o.message.empty()) j["message"] = o.message;
  return j;
}

ProofOutcome from_json(const json& j) {
  ProofOutcome o;
  o.name = j.at("name").get<std::string>();
  o.statement = j.at("statement").get<std::string>();
  o.kind = parse_proof_kind(j.at("kind").get<std::string>());
  o.status = parse_proof_status(j.at("status").get<std::string>());
  o.claims = j.at("claims").get<std::size_t>();
  o.peak_terms = j.at("peak_terms").get<std::size_t>();
  o.max_terms = j.at("max_terms").get<std::size_t>();
  o.max_degree = j.at("max_degree").get<unsigned>();
  o.wall_ms = j.at("wall_ms").get<double>();
  o.failed_claim = j.value("failed_claim", "");
  o.residual = j.value("residual", "");
  o.message = j.value("message", "");
  return o;
}

}  // namespace

std::string proof_report_json(const std::vector<ProofOutcome>& outcomes) {
  json tasks = json::array();
  for (const auto& o : outcomes) tasks.push_back(to_json(o));
  return json{{"tasks", tasks}}.dump(2) + "\n";
}

std::vector<ProofOutcome> parse_proof_report(const std::string& text) {
  std::vector<ProofOutcome> out;
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("tasks")) out.push_back(from_json(j));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("proof report: ") + e.what());
  }
  return out;
}

std::string proof_report_text(const std::vector<ProofOutcome>& outcomes) {
  constexpr std::size_t kResidualPreview = 160;
  std::ostringstream os;
  for (const auto& o : outcomes) {
    os << std::left << std::setw(22) << o.name << std::setw(7) << to_string(o.kind) << std::setw(16)
       << to_string(o.status) << "claims " << std::setw(4) << o.claims << "peak " << std::setw(9) << o.peak_terms
       << "deg " << std::setw(4) << o.max_degree << std::fixed << std::setprecision(1) << o.wall_ms << " ms\n";
    os << "    " << o.statement << "\n";
    if (!o.failed_claim.empty()) os << "    failed: " << o.failed_claim << "\n";
    if (!o.residual.empty()) {
      os << "    residual: " << o.residual.substr(0, kResidualPreview);
      if (o.residual.size() > kResidualPreview) os << " ... (" << o.residual.size() << " chars)";
      os << "\n";
    }
    if (!o.message.empty()) os << "    " << o.message << "\n";
  }
  return os.str();
}

}  // namespace miquel
