#include "gham/presets.hpp"

#include <stdexcept>

namespace gham {

namespace {

StepGraphon support_graphon(Partition partition, const Rational& value, bool keep_last_loop) {
  std::vector<std::pair<int, int>> support = {{0, 1}, {1, 2}, {2, 1}, {2, 3},
                                              {3, 2}, {3, 0}};
  if (keep_last_loop) support.emplace_back(3, 3);
  std::vector<std::vector<Rational>> values(4, std::vector<Rational>(4, Rational(0)));
  for (auto [i, j] : support) values[i][j] = value;
  return new_step_graphon(std::move(partition), std::move(values));
}

}  // namespace

StepGraphon preset_graphon(const std::string& name) {
  if (name == "case-a")
    return support_graphon({Rational(0), Rational(1, 16), Rational(1, 4), Rational(9, 16),
                            Rational(1)},
                           Rational(1, 5), true);
  if (name == "case-b")
    return support_graphon({Rational(0), Rational(1, 8), Rational(3, 8), Rational(3, 4),
                            Rational(1)},
                           Rational(1), true);
  if (name == "case-c")
    return support_graphon({Rational(0), Rational(1, 4), Rational(1, 2), Rational(4, 5),
                            Rational(1)},
                           Rational(1), true);
  if (name == "case-d")
    return support_graphon({Rational(0), Rational(1, 8), Rational(3, 8), Rational(3, 4),
                            Rational(1)},
                           Rational(1), false);
  throw std::invalid_argument("unknown preset '" + name +
                              "'; available: case-a, case-b, case-c, case-d");
}

std::vector<std::string> preset_names() { return {"case-a", "case-b", "case-c", "case-d"}; }

}  // namespace gham
