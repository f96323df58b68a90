#pragma once

#include <optional>

#include "netfield/error.hpp"

// Error code thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<netfield::Errc> errc_of(F&& f) {
  try {
    f();
  } catch (const netfield::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
