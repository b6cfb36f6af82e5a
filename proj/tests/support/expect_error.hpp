#pragma once

#include <functional>

#include <catch_amalgamated.hpp>

#include "rlfrac/error.hpp"

// Runs fn and returns the code of the rlfrac::Error it throws.
inline rlfrac::ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const rlfrac::Error& e) {
    return e.code();
  }
  FAIL("expected rlfrac::Error");
  return rlfrac::ErrorCode::Io;
}
