#include "qv/report_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace qv {
namespace {

using nlohmann::json;

json counts_to_json(const SummaryCounts& c) {
  json j;
  j["discrepant"] = c.discrepant;
  j["fail"] = c.fail;
  j["pass"] = c.pass;
  j["skip_constraint"] = c.skip_constraint;
  j["skip_pole"] = c.skip_pole;
  return j;
}

SummaryCounts counts_from_json(const json& j) {
  SummaryCounts c;
  c.discrepant = j.at("discrepant").get<long>();
  c.fail = j.at("fail").get<long>();
  c.pass = j.at("pass").get<long>();
  c.skip_constraint = j.at("skip_constraint").get<long>();
  c.skip_pole = j.at("skip_pole").get<long>();
  return c;
}

json scalar_to_json(const std::optional<ExactScalar>& v) {
  if (!v) return nullptr;
  return v->str();
}

std::optional<ExactScalar> scalar_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return ExactScalar::parse(j.get<std::string>());
}

json point_to_json(const ParamPoint& p) {
  json j;
  j["a"] = p.a().str();
  j["alpha"] = p.alpha.str();
  j["c"] = p.c().str();
  j["gamma"] = p.gamma.str();
  j["q"] = p.q().str();
  j["rho"] = p.rho.str();
  j["u"] = p.u;
  j["v"] = p.v;
  return j;
}

json record_to_json(const VerificationRecord& rec) {
  json j;
  j["derived_skipped"] = rec.derived_skipped;
  j["elapsed_micros"] = rec.elapsed_micros;
  j["ell"] = rec.ell;
  j["identity_id"] = rec.identity_id;
  j["lhs"] = scalar_to_json(rec.lhs);
  j["m"] = rec.m;
  j["n"] = rec.n;
  if (rec.point) {
    j["point"] = point_to_json(*rec.point);
  } else {
    j["point"] = nullptr;
  }
  j["point_index"] = rec.point_index;
  j["resamples"] = rec.resamples;
  j["rhs_closed"] = scalar_to_json(rec.rhs_closed);
  j["rhs_derived"] = scalar_to_json(rec.rhs_derived);
  j["status"] = status_name(rec.status);
  return j;
}

VerificationRecord record_from_json(const json& j) {
  VerificationRecord rec;
  rec.derived_skipped = j.at("derived_skipped").get<bool>();
  rec.elapsed_micros = j.at("elapsed_micros").get<std::int64_t>();
  rec.ell = j.at("ell").get<long>();
  rec.identity_id = j.at("identity_id").get<std::string>();
  rec.lhs = scalar_from_json(j.at("lhs"));
  rec.m = j.at("m").get<long>();
  rec.n = j.at("n").get<long>();
  if (!j.at("point").is_null()) {
    const json& pj = j.at("point");
    ParamPoint p;
    p.rho = ExactScalar::parse(pj.at("rho").get<std::string>());
    p.alpha = ExactScalar::parse(pj.at("alpha").get<std::string>());
    p.gamma = ExactScalar::parse(pj.at("gamma").get<std::string>());
    p.n = rec.n;
    p.ell = rec.ell;
    p.m = rec.m;
    p.u = pj.at("u").get<int>();
    p.v = pj.at("v").get<int>();
    rec.point = p;
  }
  rec.point_index = j.at("point_index").get<int>();
  rec.resamples = j.at("resamples").get<int>();
  rec.rhs_closed = scalar_from_json(j.at("rhs_closed"));
  rec.rhs_derived = scalar_from_json(j.at("rhs_derived"));
  rec.status = status_from_name(j.at("status").get<std::string>());
  return rec;
}

// Worker count is an execution detail like per-record timing, so it stays out
// of the artifact; otherwise --jobs 1 and --jobs 8 could never compare equal.
json config_to_json(const RunConfig& cfg) {
  json j;
  j["ell_max"] = cfg.ell_max;
  j["fail_fast"] = cfg.fail_fast;
  j["ids"] = cfg.ids;
  j["m_max"] = cfg.m_max;
  j["max_resamples"] = cfg.sample.max_resamples;
  j["n_max"] = cfg.n_max;
  j["n_min"] = cfg.n_min;
  json pool = json::array();
  for (const ExactScalar& v : cfg.sample.pool) pool.push_back(v.str());
  j["points_per_cell"] = cfg.points_per_cell;
  j["pool"] = pool;
  j["seed"] = cfg.sample.seed;
  j["stable_output"] = cfg.stable_output;
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig cfg;
  cfg.ell_max = j.at("ell_max").get<long>();
  cfg.fail_fast = j.at("fail_fast").get<bool>();
  cfg.ids = j.at("ids").get<std::vector<std::string>>();
  cfg.m_max = j.at("m_max").get<long>();
  cfg.sample.max_resamples = j.at("max_resamples").get<int>();
  cfg.n_max = j.at("n_max").get<long>();
  cfg.n_min = j.at("n_min").get<long>();
  cfg.points_per_cell = j.at("points_per_cell").get<int>();
  for (const json& v : j.at("pool")) cfg.sample.pool.push_back(ExactScalar::parse(v.get<std::string>()));
  cfg.sample.seed = j.at("seed").get<std::uint64_t>();
  cfg.stable_output = j.at("stable_output").get<bool>();
  return cfg;
}

std::string csv_scalar(const std::optional<ExactScalar>& v) {
  return v ? v->str() : std::string();
}

}  // namespace

std::string report_to_json(const Report& report) {
  json j;
  j["config"] = config_to_json(report.config);
  json records = json::array();
  for (const VerificationRecord& rec : report.records) records.push_back(record_to_json(rec));
  j["records"] = records;
  json per_identity;
  for (const auto& [id, counts] : report.per_identity) per_identity[id] = counts_to_json(counts);
  j["summary"] = json{{"per_identity", per_identity}, {"total", counts_to_json(report.summary)}};
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  json j = json::parse(text);
  Report report;
  report.config = config_from_json(j.at("config"));
  for (const json& rj : j.at("records")) report.records.push_back(record_from_json(rj));
  report.summary = counts_from_json(j.at("summary").at("total"));
  const json& per_identity = j.at("summary").at("per_identity");
  for (auto it = per_identity.begin(); it != per_identity.end(); ++it)
    report.per_identity[it.key()] = counts_from_json(it.value());
  return report;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "identity_id,n,ell,m,point_index,status,lhs,rhs_closed,rhs_derived,resamples\n";
  for (const VerificationRecord& rec : report.records) {
    out << rec.identity_id << ',' << rec.n << ',' << rec.ell << ',' << rec.m << ','
        << rec.point_index << ',' << status_name(rec.status) << ',' << csv_scalar(rec.lhs)
        << ',' << csv_scalar(rec.rhs_closed) << ',' << csv_scalar(rec.rhs_derived) << ','
        << rec.resamples << '\n';
  }
  return out.str();
}

std::string report_to_markdown(const Report& report) {
  std::ostringstream out;
  out << "# verification report\n\n";
  out << "seed " << report.config.sample.seed << ", n in [" << report.config.n_min << ", "
      << report.config.n_max << "], ell <= " << report.config.ell_max << ", m <= "
      << report.config.m_max << ", " << report.config.points_per_cell << " point(s) per cell\n\n";
  const SummaryCounts& t = report.summary;
  out << "| pass | fail | skip_constraint | skip_pole | discrepant |\n";
  out << "| --- | --- | --- | --- | --- |\n";
  out << "| " << t.pass << " | " << t.fail << " | " << t.skip_constraint << " | "
      << t.skip_pole << " | " << t.discrepant << " |\n";

  std::map<std::string, std::vector<const VerificationRecord*>> by_id;
  for (const VerificationRecord& rec : report.records) by_id[rec.identity_id].push_back(&rec);

  std::vector<std::string> order;
  for (const std::string& id : document_order())
    if (by_id.count(id)) order.push_back(id);
  for (const auto& [id, recs] : by_id)
    if (std::find(order.begin(), order.end(), id) == order.end()) order.push_back(id);

  for (const std::string& id : order) {
    out << "\n## " << id << "\n\n";
    if (const IdentitySpec* spec = find_identity(id)) {
      out << spec->citation << " (" << family_name(spec->family) << " family)";
      if (!spec->constraint_text.empty()) out << ", " << spec->constraint_text;
      out << "\n\n";
    }
    out << "| n | ell | m | point | status | lhs | rhs_closed | rhs_derived | resamples |\n";
    out << "| --- | --- | --- | --- | --- | --- | --- | --- | --- |\n";
    for (const VerificationRecord* rec : by_id[id]) {
      out << "| " << rec->n << " | " << rec->ell << " | " << rec->m << " | "
          << rec->point_index << " | " << status_name(rec->status) << " | "
          << csv_scalar(rec->lhs) << " | " << csv_scalar(rec->rhs_closed) << " | ";
      if (rec->derived_skipped) {
        out << "(constraint)";
      } else {
        out << csv_scalar(rec->rhs_derived);
      }
      out << " | " << rec->resamples << " |\n";
    }
  }
  return out.str();
}

}  // namespace qv
