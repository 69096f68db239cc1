#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dx {

/// Outcome of a named verification suite: one line per check.
struct Check {
  std::string id;
  bool passed = false;
  std::string detail;
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;
  std::size_t failures() const;

  void add(std::string id, bool passed, std::string detail = {});
  /// Runs `body`; a thrown exception counts as a failure carrying its message.
  void run(const std::string& id, const std::function<bool(std::string&)>& body);
  /// Appends all checks of `other`, prefixing ids with its suite name.
  void merge(const Report& other);

  /// Invoked after every added check (used for -v progress output).
  void set_listener(std::function<void(const Check&)> listener) { listener_ = std::move(listener); }

  std::string to_text() const;
  std::string to_json() const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
  std::function<void(const Check&)> listener_;
};

}  // namespace dx
