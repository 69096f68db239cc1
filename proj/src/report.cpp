#include "dx/report.hpp"

#include <json.hpp>

#include <exception>
#include <sstream>

namespace dx {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (!c.passed) ++n;
  return n;
}

void Report::add(std::string id, bool passed, std::string detail) {
  checks_.push_back({std::move(id), passed, std::move(detail)});
  if (listener_) listener_(checks_.back());
}

void Report::run(const std::string& id, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  add(id, ok, std::move(detail));
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) add(other.suite_ + "." + c.id, c.passed, c.detail);
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : "FAIL ") << suite_ << '.' << c.id;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  out << suite_ << ": " << (checks_.size() - failures()) << '/' << checks_.size() << " passed\n";
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j.dump(2);
}

}  // namespace dx
