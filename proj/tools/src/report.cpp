#include "report.hpp"

#include <cstdio>
#include <ostream>

namespace finsler::cli {

namespace {

bool is_scalar(const ordered_json& j) { return !j.is_array() && !j.is_object(); }

bool is_scalar_array(const ordered_json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (!is_scalar(x)) return false;
  }
  return true;
}

bool is_matrix(const ordered_json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& x : j) {
    if (!is_scalar_array(x)) return false;
  }
  return true;
}

std::string scalar_text(const ordered_json& j) {
  if (j.is_number_float()) return format_number(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_array(const ordered_json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += scalar_text(j[i]);
  }
  return s + "]";
}

void write_value(std::ostream& out, const ordered_json& j, int indent);

void write_entry(std::ostream& out, const std::string& key, const ordered_json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(value)) {
    out << pad << key << ": " << scalar_text(value) << '\n';
  } else if (is_scalar_array(value)) {
    out << pad << key << ": " << inline_array(value) << '\n';
  } else {
    out << pad << key << ":\n";
    write_value(out, value, indent + 2);
  }
}

void write_value(std::ostream& out, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) write_entry(out, key, value, indent);
  } else if (is_matrix(j)) {
    for (const auto& row : j) out << pad << inline_array(row) << '\n';
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad << "- [" << i << "]\n";
      write_value(out, j[i], indent + 2);
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json to_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Report::Report(std::string command, ordered_json inputs) : command_(std::move(command)), inputs_(std::move(inputs)) {}

void Report::add_check(Check check) { checks_.push_back(std::move(check)); }

void Report::set(const std::string& key, ordered_json value) { results_[key] = std::move(value); }

void Report::set_error(std::string message) { error_ = std::move(message); }

bool Report::passed() const {
  if (!error_.empty()) return false;
  for (const Check& c : checks_) {
    if (c.asserted && !c.pass) return false;
  }
  return true;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = command_;
  j["inputs"] = inputs_;
  j["results"] = results_;
  ordered_json checks = ordered_json::array();
  for (const Check& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"asserted", c.asserted}});
  }
  j["checks"] = std::move(checks);
  if (!error_.empty()) j["error"] = error_;
  j["status"] = passed() ? "pass" : "fail";
  j["exit_code"] = exit_code();
  return j;
}

void Report::write_json(std::ostream& out) const { out << to_json().dump(2) << '\n'; }

void Report::write_text(std::ostream& out) const {
  out << "command: " << command_ << '\n';
  out << "inputs:\n";
  write_value(out, inputs_, 2);
  if (!results_.empty()) {
    out << "results:\n";
    write_value(out, results_, 2);
  }
  if (!checks_.empty()) out << "checks:\n";
  for (const Check& c : checks_) {
    if (!c.asserted) {
      out << "  INFO  " << c.name << "  value " << format_number(c.residual) << '\n';
      continue;
    }
    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  residual " << format_number(c.residual)
        << "  tolerance " << format_number(c.tolerance) << '\n';
  }
  if (!error_.empty()) out << "error: " << error_ << '\n';
  out << "status: " << (passed() ? "pass" : "fail") << '\n';
}

}  // namespace finsler::cli
