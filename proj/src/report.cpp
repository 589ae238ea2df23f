#include "vcs/report.hpp"

#include <sstream>

namespace vcs {

namespace {

template <typename T, typename Fn>
std::string join(const std::vector<T>& values, Fn render) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += render(values[i]);
  }
  return out;
}

}  // namespace

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << "valid=" << (valid ? "true" : "false") << '\n';
  out << "secure=" << (secure ? "true" : "false") << '\n';
  out << "h=" << h << '\n';
  out << "l=" << l << '\n';
  out << "alpha=" << to_string(alpha) << '\n';
  if (!level_weights.empty())
    out << "level_weights=" << join(level_weights, [](long v) { return std::to_string(v); })
        << '\n';
  if (!level_weights_max.empty())
    out << "level_weights_max="
        << join(level_weights_max, [](long v) { return std::to_string(v); }) << '\n';
  if (!alpha_levels.empty())
    out << "alpha_levels=" << join(alpha_levels, [](const Rational& q) { return to_string(q); })
        << '\n';
  for (const auto& v : violations) out << "violation=" << v << '\n';
  return out.str();
}

}  // namespace vcs
