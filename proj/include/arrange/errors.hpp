#pragma once

#include <stdexcept>
#include <string>

namespace arrange {

// Thrown when an exhaustive search would exceed its configured node or size
// budget.  The budget that applies is included in the message; callers can
// raise it explicitly or through the ARRANGE_SEARCH_CAP environment variable
// where documented.
class SearchSpaceTooLarge : public std::runtime_error {
 public:
  explicit SearchSpaceTooLarge(const std::string& what)
      : std::runtime_error(what), size(-1), cap(-1) {}
  SearchSpaceTooLarge(long long size, long long cap)
      : std::runtime_error("search space of size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap)),
        size(size),
        cap(cap) {}

  long long size;  // problem size that tripped the guard (-1 if not applicable)
  long long cap;   // budget in force (-1 if not applicable)
};

}  // namespace arrange
