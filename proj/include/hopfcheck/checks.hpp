#ifndef HOPFCHECK_CHECKS_HPP_
#define HOPFCHECK_CHECKS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfcheck/hopf.hpp"

namespace hopfcheck {

struct CheckOptions {
  std::optional<std::string> model_path;
  std::optional<CycQ8> tau;
};

enum class Verdict { Pass, Fail, Error };
const char* to_string(Verdict v);

struct CheckOutcome {
  bool passed = false;
  json witness;
};

struct CheckDescriptor {
  std::string id;
  std::string title;
  std::string anchor;
  std::function<CheckOutcome(const CheckOptions&)> run;
  Verdict expected = Verdict::Pass;  // Fail marks a negative control
};

struct Report {
  std::string id;
  Verdict verdict = Verdict::Error;
  double elapsed_ms = 0;
  json witness;
  std::string anchor;
  Verdict expected = Verdict::Pass;

  bool as_expected() const { return verdict == expected; }
  // {id, verdict, elapsed_ms, witness, anchor}
  json to_json() const;
};

// Registered checks in id order.
const std::vector<CheckDescriptor>& check_registry();
// Descriptors whose id contains the filter (all when empty).
std::vector<const CheckDescriptor*> list_checks(const std::string& filter = "");
// Throws UnknownCheck. Errors raised by the check body become Verdict::Error
// with the message as witness, except ModelFormat / Io from a user model file,
// which propagate.
Report run_check(const std::string& id, const CheckOptions& opts = {});
// Concurrent dispatch; reports in registry order.
std::vector<Report> run_all(const CheckOptions& opts = {});

// "kp", "vtilde", "vtilde-twist", "smash"; UnknownCheck otherwise.
HopfPtr exportable_model(const std::string& id);

} // namespace hopfcheck

#endif
