#pragma once

#include <optional>
#include <string>

namespace monadforge {

// Deliberate defects used to check that the law suites catch real bugs.
enum class Mutation {
  None,
  DropConvex,    // s forgets the convex flag
  DropMultTerm,  // VAL multiplication loses its last outer term
  SwapMinSup,    // r builds the opposite (sup instead of min) prevision
};

std::string to_string(Mutation m);
std::optional<Mutation> parse_mutation(const std::string& name);

// The mutation in force on the calling thread.
Mutation active_mutation();

class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m);
  ~ScopedMutation();
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation saved_;
};

}  // namespace monadforge
