// Copyright 2026 The bpsim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BP_ERRORS_HPP_
#define BP_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bp {

using VertexId = std::uint32_t;

// Root of every error raised by the library. Each subclass maps onto one
// CLI exit code (see harness/exit_codes.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A search exceeded its configured node budget while working on `vertex`.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(VertexId vertex, const std::string& what)
      : Error(what), vertex_(vertex) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

// Input violates an algorithm's precondition (e.g. non-bipartite input to a
// bipartite program, isolated vertex handed to the oracle).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NoValidSelection : public PreconditionError {
 public:
  explicit NoValidSelection(VertexId vertex)
      : PreconditionError("vertex " + std::to_string(vertex) +
                          " has no neighbor to select"),
        vertex_(vertex) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

class InvalidAssignment : public Error {
 public:
  InvalidAssignment(VertexId selector, VertexId target, const std::string& why)
      : Error("invalid selection " + std::to_string(selector) + " -> " +
              std::to_string(target) + ": " + why),
        selector_(selector),
        target_(target) {}
  VertexId selector() const { return selector_; }
  VertexId target() const { return target_; }

 private:
  VertexId selector_;
  VertexId target_;
};

class ArboricityTooSmall : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class BudgetViolation : public Error {
 public:
  BudgetViolation(std::uint32_t round, VertexId from, VertexId to,
                  std::size_t bits, std::size_t budget)
      : Error("round " + std::to_string(round) + ": message " +
              std::to_string(from) + " -> " + std::to_string(to) + " carries " +
              std::to_string(bits) + " bits, budget is " +
              std::to_string(budget)),
        round_(round),
        from_(from),
        to_(to),
        bits_(bits) {}
  std::uint32_t round() const { return round_; }
  VertexId from() const { return from_; }
  VertexId to() const { return to_; }
  std::size_t bits() const { return bits_; }

 private:
  std::uint32_t round_;
  VertexId from_;
  VertexId to_;
  std::size_t bits_;
};

class LocalityViolation : public Error {
 public:
  LocalityViolation(std::uint32_t round, VertexId from, VertexId to)
      : Error("round " + std::to_string(round) + ": vertex " +
              std::to_string(from) + " addressed non-neighbor " +
              std::to_string(to)),
        round_(round),
        from_(from),
        to_(to) {}
  std::uint32_t round() const { return round_; }
  VertexId from() const { return from_; }
  VertexId to() const { return to_; }

 private:
  std::uint32_t round_;
  VertexId from_;
  VertexId to_;
};

}  // namespace bp

#endif  // BP_ERRORS_HPP_
