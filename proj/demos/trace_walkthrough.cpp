// Walks the worked d=2 examples through every step of the map, printing the
// diagrams the library renders for each stage.

#include <iostream>

#include <bressoud/bressoud.hpp>

int main() {
  using namespace bressoud;
  const ResiduePermutation dual = ResiduePermutation::bressoud_dual();

  std::cout << "forward map, d=2, pi=(0,1): odd parts must beat twice the even count\n\n";
  for (const char* text : {"6,3", "8,1", "5,3,1"}) {
    std::cout << render_trace(trace(parse_partition(text), dual, Direction::forward)) << "\n";
  }

  std::cout << "inverse map on 5,4:\n\n";
  std::cout << render_trace(trace(parse_partition("5,4"), dual, Direction::inverse)) << "\n";

  std::cout << "inverse map on 2,1 fails the threshold:\n\n";
  try {
    inverse(parse_partition("2,1"), dual);
  } catch (const ConditionViolation& e) {
    std::cout << e.what() << "\n";
  }
  return 0;
}
