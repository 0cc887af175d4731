#pragma once

#include <doctest.h>

#include "mla/error.hpp"

// Runs f and returns the mla::Error it throws; fails the test otherwise.
template <class F>
mla::Error expect_error(F&& f) {
  try {
    f();
  } catch (const mla::Error& e) {
    return e;
  }
  FAIL("expected mla::Error");
  return mla::Error(mla::ErrorKind::Format, "unreachable");
}
