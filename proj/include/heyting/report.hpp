#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace heyting {

// structured check results; every failed check carries its witness text
struct Report {
  enum class Status { pass, fail, info };

  std::string name;
  Status status = Status::info;
  std::string detail;
  double seconds = 0;
  std::vector<Report> children;

  static Report check(std::string name, bool ok, std::string detail = "") {
    Report r;
    r.name = std::move(name);
    r.status = ok ? Status::pass : Status::fail;
    r.detail = std::move(detail);
    return r;
  }
  static Report info(std::string name, std::string detail = "") {
    Report r;
    r.name = std::move(name);
    r.detail = std::move(detail);
    return r;
  }

  Report& add(Report child) {
    children.push_back(std::move(child));
    return children.back();
  }

  bool all_pass() const {
    if (status == Status::fail) return false;
    for (const auto& c : children)
      if (!c.all_pass()) return false;
    return true;
  }

  int count(Status s) const {
    int n = status == s ? 1 : 0;
    for (const auto& c : children) n += c.count(s);
    return n;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["status"] = status == Status::pass ? "pass" : status == Status::fail ? "fail" : "info";
    if (!detail.empty()) j["detail"] = detail;
    if (seconds > 0) j["seconds"] = seconds;
    if (!children.empty()) {
      j["children"] = nlohmann::json::array();
      for (const auto& c : children) j["children"].push_back(c.to_json());
    }
    return j;
  }

  void render(std::ostream& os, int indent = 0) const {
    for (int i = 0; i < indent; ++i) os << "  ";
    if (status == Status::pass)
      os << "[PASS] ";
    else if (status == Status::fail)
      os << "[FAIL] ";
    else
      os << "[....] ";
    os << name;
    if (!detail.empty()) os << " - " << detail;
    if (seconds > 0.0005) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(2);
      t << seconds;
      os << " (" << t.str() << "s)";
    }
    os << '\n';
    for (const auto& c : children) c.render(os, indent + 1);
  }

  std::string text() const {
    std::ostringstream os;
    render(os);
    return os.str();
  }
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace heyting
