#include "cayleylab/limits.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cayleylab {

Limits with_env_overrides(Limits limits) {
  if (const char* raw = std::getenv("CAYLEYLAB_MAX_N")) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(raw, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("CAYLEYLAB_MAX_N is not an integer: " + std::string(raw));
    }
    if (pos != std::string(raw).size() || value < 2 || value > kHardMaxDegree) {
      throw std::invalid_argument("CAYLEYLAB_MAX_N must be an integer in [2, " +
                                  std::to_string(kHardMaxDegree) + "], got " + std::string(raw));
    }
    limits.max_degree = value;
  }
  return limits;
}

}  // namespace cayleylab
