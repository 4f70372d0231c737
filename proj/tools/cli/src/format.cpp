#include <charconv>
#include <sstream>

#include "dedekind_cli/cli.hpp"

namespace dedekind::cli {

namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  if (parts.empty()) throw UsageError("empty list");
  return parts;
}

nlohmann::ordered_json value_json(const ReportValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* terms = std::get_if<std::vector<Term>>(&v)) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& t : *terms) {
      arr.push_back({{"exponents", t.exponents}, {"coefficient", t.coefficient}});
    }
    return arr;
  }
  return nullptr;
}

std::string value_text(const ReportValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  if (const auto* terms = std::get_if<std::vector<Term>>(&v)) return render_terms(*terms);
  return {};
}

}  // namespace

long parse_long(const std::string& text) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw UsageError("not an integer: '" + text + "'");
  }
  return value;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& part : split(text)) out.push_back(parse_long(part));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text)) {
    const long v = parse_long(part);
    if (v < -1000000 || v > 1000000) throw UsageError("index out of range: '" + part + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& part : split(text)) {
    try {
      out.push_back(Rational::parse(part));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

std::string render_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const bool negative = !t.coefficient.empty() && t.coefficient.front() == '-';
    const std::string mag = negative ? t.coefficient.substr(1) : t.coefficient;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "y" + std::to_string(i + 1);
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty()) out += mag;
    else if (mag == "1") out += mono;
    else out += mag + "*" + mono;
  }
  return out;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  auto inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  j["status"] = std::string(to_string(report.status));
  j["lhs"] = value_json(report.lhs);
  j["rhs"] = value_json(report.rhs);
  j["residual"] = value_json(report.residual);
  j["witnesses"] = report.witnesses;
  j["detail"] = report.detail;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.identity << ": " << to_string(report.status) << '\n';
  for (const auto& [k, v] : report.inputs) os << "  " << k << " = " << v << '\n';
  const std::pair<const char*, const ReportValue*> values[] = {
      {"lhs", &report.lhs}, {"rhs", &report.rhs}, {"residual", &report.residual}};
  for (const auto& [name, v] : values) {
    if (!std::holds_alternative<std::monostate>(*v)) os << "  " << name << ": " << value_text(*v) << '\n';
  }
  if (!report.detail.empty()) os << "  detail: " << report.detail << '\n';
  for (const auto& w : report.witnesses) os << "  witness: " << w << '\n';
  return os.str();
}

}  // namespace dedekind::cli
