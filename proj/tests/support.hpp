#pragma once

#include <gtest/gtest.h>

#include "trigirth/error.hpp"

// Asserts that `stmt` throws trigirth::Error of the given kind.
#define EXPECT_ERROR_KIND(stmt, expected_kind)                                  \
  do {                                                                          \
    try {                                                                       \
      stmt;                                                                     \
      ADD_FAILURE() << "expected " << trigirth::to_string(expected_kind);       \
    } catch (const trigirth::Error& e) {                                        \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                           \
    }                                                                           \
  } while (0)
