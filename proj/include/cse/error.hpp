// Copyright 2026 The CSE Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSE_ERROR_HPP_
#define CSE_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cse {

// Base of every error raised by the toolkit. `code()` is a stable
// machine-readable identifier surfaced in reports.
//
// A few errors are "negative results": the computation succeeded and the
// answer is no (a precondition of an existence result fails, or a search
// came up empty). The CLI maps those to exit code 2 instead of 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        bool negative_result = false)
      : std::runtime_error(message),
        code_(std::move(code)),
        negative_result_(negative_result) {}

  const std::string& code() const { return code_; }
  bool negative_result() const { return negative_result_; }

 private:
  std::string code_;
  bool negative_result_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error("InvalidArgument", message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& message)
      : Error("ParseError", where + ": " + message), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class NegativePayoff : public Error {
 public:
  NegativePayoff(const std::string& profile, int player)
      : Error("NegativePayoff", "negative payoff for player " +
                                    std::to_string(player + 1) +
                                    " at profile " + profile),
        player_(player) {}
  int player() const { return player_; }

 private:
  int player_;
};

class ArityMismatch : public Error {
 public:
  explicit ArityMismatch(const std::string& message)
      : Error("ArityMismatch", message) {}
};

class UnsupportedNfgFeature : public Error {
 public:
  explicit UnsupportedNfgFeature(const std::string& message)
      : Error("UnsupportedNfgFeature", message) {}
};

class UnsupportedSemantics : public Error {
 public:
  explicit UnsupportedSemantics(const std::string& message)
      : Error("UnsupportedSemantics", message) {}
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, const std::string& size,
                 std::uint64_t budget)
      : Error("BudgetExceeded", what + " has size " + size +
                                    " which exceeds the budget of " +
                                    std::to_string(budget)),
        size_(size),
        budget_(budget) {}
  const std::string& size() const { return size_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::string size_;
  std::uint64_t budget_;
};

class WrongPlayerCount : public Error {
 public:
  WrongPlayerCount(std::string code, const std::string& message)
      : Error(std::move(code), message) {}
};

class ActionSetTooSmall : public Error {
 public:
  explicit ActionSetTooSmall(int player)
      : Error("ActionSetTooSmall",
              "player " + std::to_string(player + 1) +
                  " needs at least two actions for this construction"),
        player_(player) {}
  int player() const { return player_; }

 private:
  int player_;
};

class NotIndividuallyRational : public Error {
 public:
  NotIndividuallyRational(int player, const std::string& maximin,
                          const std::string& value)
      : Error("NotIndividuallyRational",
              "player " + std::to_string(player + 1) + " gets " + value +
                  " at the target, below the maximin value " + maximin,
              /*negative_result=*/true),
        player_(player),
        maximin_(maximin),
        value_(value) {}
  int player() const { return player_; }
  const std::string& maximin() const { return maximin_; }
  const std::string& value() const { return value_; }

 private:
  int player_;
  std::string maximin_;
  std::string value_;
};

class NoDoubleMaxProfile : public Error {
 public:
  NoDoubleMaxProfile()
      : Error("NoDoubleMaxProfile",
              "no action profile gives two players their maximum payoff",
              /*negative_result=*/true) {}
};

class SearchExhausted : public Error {
 public:
  explicit SearchExhausted(const std::string& message)
      : Error("SearchExhausted", message, /*negative_result=*/true) {}
};

class UnknownCell : public Error {
 public:
  explicit UnknownCell(const std::string& label)
      : Error("UnknownCell", "unknown partition cell '" + label + "'") {}
};

}  // namespace cse

#endif  // CSE_ERROR_HPP_
