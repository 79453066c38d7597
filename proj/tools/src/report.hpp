#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "finsler/types.hpp"

namespace finsler::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// One residual/tolerance record. Unasserted checks are reported but never
/// affect the exit status.
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool asserted = true;
};

class Report {
 public:
  Report(std::string command, ordered_json inputs);

  void add_check(Check check);
  /// Adds a named result; insertion order is the output order.
  void set(const std::string& key, ordered_json value);
  /// Records a failure raised while running the command.
  void set_error(std::string message);

  bool passed() const;
  /// 0 when every asserted check passes, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }

  ordered_json to_json() const;
  void write_json(std::ostream& out) const;
  void write_text(std::ostream& out) const;

 private:
  std::string command_;
  ordered_json inputs_;
  ordered_json results_ = ordered_json::object();
  std::vector<Check> checks_;
  std::string error_;
};

/// 17 significant digits, enough to round-trip a double.
std::string format_number(double x);

ordered_json to_json(const Matrix& m);
ordered_json to_json(const Vector& v);

}  // namespace finsler::cli
