#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lks {

// Three failure classes with distinct process exit codes:
//   input       (2): malformed or precondition-violating caller input
//   infeasible  (1): a quantitative guarantee ran out on this instance
//                    (a legitimate verdict under a relaxed profile)
//   violation   (3): a structural invariant broke; always a bug report
enum class FailKind { input, infeasible, violation };

class Failure : public std::runtime_error {
  public:
    Failure(FailKind kind, std::string stage, std::string detail)
        : std::runtime_error(stage + ": " + detail),
          kind(kind), stage(std::move(stage)), detail(std::move(detail)) {}

    FailKind kind;
    std::string stage;
    std::string detail;
};

[[noreturn]] inline void fail_input(const std::string& stage, const std::string& detail) {
    throw Failure(FailKind::input, stage, detail);
}
[[noreturn]] inline void fail_infeasible(const std::string& stage, const std::string& detail) {
    throw Failure(FailKind::infeasible, stage, detail);
}
[[noreturn]] inline void fail_violation(const std::string& stage, const std::string& detail) {
    throw Failure(FailKind::violation, stage, detail);
}

}  // namespace lks
