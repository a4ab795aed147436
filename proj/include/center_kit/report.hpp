#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ck {

struct CheckRecord {
  enum class Kind { Residual, Bound, Count, Flag };
  std::string name;
  Kind kind = Kind::Residual;
  double value = 0;      // residual, bounded quantity or count
  double threshold = 0;  // residual bound, upper bound or expected count
  bool pass = false;
};

// A run report. Everything except the wall time is a function of the inputs, so the
// serialized forms are byte-stable; the wall time is printed separately.
class Report {
 public:
  Report(std::string command, std::string category, std::string fingerprint);

  // value < threshold
  bool residual(const std::string& name, double value, double threshold);
  // value <= bound
  bool bound(const std::string& name, double value, double bound);
  bool count(const std::string& name, long value, long expected);
  bool flag(const std::string& name, bool ok);

  // Free-form output lines (tables, summaries) and structured payload.
  void line(const std::string& s) { lines_.push_back(s); }
  nlohmann::json& data() { return data_; }

  const std::vector<CheckRecord>& records() const { return records_; }
  bool pass() const;
  std::string text() const;
  nlohmann::json json() const;

 private:
  std::string command_, category_, fingerprint_;
  std::vector<CheckRecord> records_;
  std::vector<std::string> lines_;
  nlohmann::json data_ = nlohmann::json::object();
};

std::string format_number(double v);

}  // namespace ck
