#ifndef TSYSLAB_REPORT_HPP
#define TSYSLAB_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tsyslab {

// One verified (or failed) item inside a check: a symbolic identity with
// its residual text, or a numeric comparison with its relative error.
struct CheckItem {
  std::string label;
  bool ok = true;
  bool soft = false; // failure downgrades the report to a warning
  std::string detail;
  std::optional<double> residual;
};

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckItem> items;
  double wall_ms = 0;

  enum class Status { Pass, Warn, Fail };

  void param(const std::string &key, const std::string &value) {
    params.emplace_back(key, value);
  }
  CheckItem &add(const std::string &label, bool ok) {
    items.push_back(CheckItem{label, ok, false, "", std::nullopt});
    return items.back();
  }
  Status status() const {
    bool warn = false;
    for (const auto &it : items) {
      if (!it.ok) {
        if (it.soft)
          warn = true;
        else
          return Status::Fail;
      }
    }
    return warn ? Status::Warn : Status::Pass;
  }
  bool passed() const { return status() != Status::Fail; }
};

std::string status_name(CheckReport::Status s);

// Plain-text rendering, one line per item.
std::string report_text(const CheckReport &r, bool verbose_items = true);

// JSON rendering with a stable key order.
std::string report_json(const std::vector<CheckReport> &reports);

} // namespace tsyslab

#endif
