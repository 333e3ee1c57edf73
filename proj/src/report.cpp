#include "tsyslab/report.hpp"

#include <json.hpp>

#include <sstream>

namespace tsyslab {

std::string status_name(CheckReport::Status s) {
  switch (s) {
  case CheckReport::Status::Pass:
    return "pass";
  case CheckReport::Status::Warn:
    return "warn";
  case CheckReport::Status::Fail:
    return "fail";
  }
  return "?";
}

std::string report_text(const CheckReport &r, bool verbose_items) {
  std::ostringstream out;
  out << "[" << status_name(r.status()) << "] " << r.name;
  if (!r.params.empty()) {
    out << " (";
    for (std::size_t i = 0; i < r.params.size(); ++i) {
      if (i)
        out << ", ";
      out << r.params[i].first << "=" << r.params[i].second;
    }
    out << ")";
  }
  out << "  [" << r.wall_ms << " ms]\n";
  for (const auto &it : r.items) {
    if (it.ok && !verbose_items)
      continue;
    out << "  " << (it.ok ? "ok  " : (it.soft ? "warn" : "FAIL")) << "  "
        << it.label;
    if (it.residual)
      out << "  residual=" << *it.residual;
    if (!it.detail.empty())
      out << "  " << it.detail;
    out << "\n";
  }
  return out.str();
}

std::string report_json(const std::vector<CheckReport> &reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &r : reports) {
    nlohmann::ordered_json jr;
    jr["check"] = r.name;
    nlohmann::ordered_json jp = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.params)
      jp[k] = v;
    jr["params"] = jp;
    jr["status"] = status_name(r.status());
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto &it : r.items) {
      nlohmann::ordered_json ji;
      ji["name"] = it.label;
      ji["ok"] = it.ok;
      if (it.soft)
        ji["soft"] = true;
      if (it.residual)
        ji["residual"] = *it.residual;
      if (!it.detail.empty())
        ji["detail"] = it.detail;
      items.push_back(ji);
    }
    jr["items"] = items;
    jr["wall_ms"] = r.wall_ms;
    arr.push_back(jr);
  }
  return arr.dump(2);
}

} // namespace tsyslab
