#include "monadforge/mutation.hpp"

namespace monadforge {

namespace {
thread_local Mutation current = Mutation::None;
}

std::string to_string(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::DropConvex: return "drop-convex";
    case Mutation::DropMultTerm: return "drop-mult-term";
    case Mutation::SwapMinSup: return "swap-minsup";
  }
  return "?";
}

std::optional<Mutation> parse_mutation(const std::string& name) {
  if (name == "none") return Mutation::None;
  if (name == "drop-convex") return Mutation::DropConvex;
  if (name == "drop-mult-term") return Mutation::DropMultTerm;
  if (name == "swap-minsup" || name == "swap-min-sup") return Mutation::SwapMinSup;
  return std::nullopt;
}

Mutation active_mutation() { return current; }

ScopedMutation::ScopedMutation(Mutation m) : saved_(current) { current = m; }
ScopedMutation::~ScopedMutation() { current = saved_; }

}  // namespace monadforge
