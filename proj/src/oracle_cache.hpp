#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "monadforge/space.hpp"

// Per-thread memo tables for the order oracles. Results depend only on the
// keys, so every thread computes the same answers as a sequential run.
namespace monadforge::detail {

inline constexpr std::size_t kMaxCacheEntries = 400000;

inline std::unordered_map<std::string, bool>& bool_cache() {
  thread_local std::unordered_map<std::string, bool> cache;
  return cache;
}

inline std::unordered_map<std::string, Element>& element_cache() {
  thread_local std::unordered_map<std::string, Element> cache;
  return cache;
}

inline std::optional<bool> lookup_bool(const std::string& key) {
  auto& c = bool_cache();
  auto it = c.find(key);
  if (it == c.end()) return std::nullopt;
  return it->second;
}

inline void store_bool(const std::string& key, bool value) {
  auto& c = bool_cache();
  if (c.size() > kMaxCacheEntries) c.clear();
  c.emplace(key, value);
}

inline const Element* lookup_element(const std::string& key) {
  auto& c = element_cache();
  auto it = c.find(key);
  return it == c.end() ? nullptr : &it->second;
}

inline void store_element(const std::string& key, const Element& value) {
  auto& c = element_cache();
  if (c.size() > kMaxCacheEntries / 4) c.clear();
  c.emplace(key, value);
}

}  // namespace monadforge::detail
