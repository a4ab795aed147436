#include "center_kit/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ck {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  if (v == std::floor(v) && std::abs(v) < 1e12)
    std::snprintf(buf, sizeof buf, "%.0f", v);
  else
    std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Report::Report(std::string command, std::string category, std::string fingerprint)
    : command_(std::move(command)), category_(std::move(category)), fingerprint_(std::move(fingerprint)) {}

bool Report::residual(const std::string& name, double value, double threshold) {
  const bool ok = std::isfinite(value) && value < threshold;
  records_.push_back({name, CheckRecord::Kind::Residual, value, threshold, ok});
  return ok;
}

bool Report::bound(const std::string& name, double value, double b) {
  const bool ok = std::isfinite(value) && value <= b;
  records_.push_back({name, CheckRecord::Kind::Bound, value, b, ok});
  return ok;
}

bool Report::count(const std::string& name, long value, long expected) {
  const bool ok = value == expected;
  records_.push_back({name, CheckRecord::Kind::Count, static_cast<double>(value), static_cast<double>(expected), ok});
  return ok;
}

bool Report::flag(const std::string& name, bool ok) {
  records_.push_back({name, CheckRecord::Kind::Flag, ok ? 1.0 : 0.0, 1.0, ok});
  return ok;
}

bool Report::pass() const {
  for (const auto& r : records_)
    if (!r.pass) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "command: " << command_ << "\n";
  if (!category_.empty()) os << "category: " << category_ << "\n";
  if (!fingerprint_.empty()) os << "fingerprint: " << fingerprint_ << "\n";
  for (const auto& l : lines_) os << l << "\n";
  size_t w = 0;
  for (const auto& r : records_) w = std::max(w, r.name.size());
  for (const auto& r : records_) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.name << std::string(w - r.name.size() + 2, ' ');
    switch (r.kind) {
      case CheckRecord::Kind::Residual:
        os << format_number(r.value) << " < " << format_number(r.threshold);
        break;
      case CheckRecord::Kind::Bound:
        os << format_number(r.value) << " <= " << format_number(r.threshold);
        break;
      case CheckRecord::Kind::Count:
        os << format_number(r.value) << " = " << format_number(r.threshold);
        break;
      case CheckRecord::Kind::Flag:
        os << (r.pass ? "true" : "false");
        break;
    }
    os << "\n";
  }
  os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::json Report::json() const {
  nlohmann::json j;
  j["command"] = command_;
  j["category"] = category_;
  j["fingerprint"] = fingerprint_;
  auto& recs = j["checks"] = nlohmann::json::array();
  for (const auto& r : records_) {
    nlohmann::json x;
    x["name"] = r.name;
    switch (r.kind) {
      case CheckRecord::Kind::Residual:
        x["residual"] = r.value;
        x["threshold"] = r.threshold;
        break;
      case CheckRecord::Kind::Bound:
        x["value"] = r.value;
        x["bound"] = r.threshold;
        break;
      case CheckRecord::Kind::Count:
        x["count"] = static_cast<long>(r.value);
        x["expected"] = static_cast<long>(r.threshold);
        break;
      case CheckRecord::Kind::Flag:
        x["value"] = r.pass;
        break;
    }
    x["pass"] = r.pass;
    recs.push_back(x);
  }
  if (!data_.empty()) j["data"] = data_;
  j["pass"] = pass();
  return j;
}

}  // namespace ck
