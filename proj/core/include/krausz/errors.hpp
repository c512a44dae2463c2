// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace krausz {

// Malformed textual input (graph6, edge list, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is well formed but outside the class an algorithm is defined
// for (non-chordal input to the chordal pipeline, non-split input to the
// split test, ...).
class ClassPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A 3-dimensional matching instance violates the closure condition.
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search hit its configured safety cap.
class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace krausz
