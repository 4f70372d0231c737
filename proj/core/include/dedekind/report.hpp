#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace dedekind {

enum class Status { pass, fail, reported_only };

std::string_view to_string(Status status);

/// One monomial of a polynomial-valued report entry. The coefficient is an
/// exact "p/q" string.
struct Term {
  std::vector<int> exponents;
  std::string coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact scalar ("p/q"), polynomial term list, or absent.
using ReportValue = std::variant<std::monostate, std::string, std::vector<Term>>;

/// Structured outcome of an identity check.
///
/// Invariant: status == fail implies witnesses is non-empty. Use `fail()` to
/// set a failure together with its witness.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> inputs;
  Status status = Status::pass;
  ReportValue lhs;
  ReportValue rhs;
  ReportValue residual;
  std::vector<std::string> witnesses;
  std::string detail;
  double elapsed_ms = 0.0;

  bool passed() const { return status == Status::pass; }

  void add_input(std::string name, std::string value) {
    inputs.emplace_back(std::move(name), std::move(value));
  }

  void fail(std::string witness) {
    status = Status::fail;
    witnesses.push_back(std::move(witness));
  }
};

/// Records wall time into `report.elapsed_ms` when it goes out of scope.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& report)
      : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    const auto dt = std::chrono::steady_clock::now() - start_;
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(dt).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

/// Comma-joined rendering used for report inputs.
template <typename Range>
std::string join_values(const Range& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    if constexpr (std::is_arithmetic_v<std::decay_t<decltype(v)>>) {
      out += std::to_string(v);
    } else {
      out += v.str();
    }
  }
  return out;
}

}  // namespace dedekind
