#include "modpar/engine.hpp"

namespace modpar {

unsigned default_cores() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace modpar
