// Copyright 2026 The ISN Coordination Authors
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

#ifndef ISN_MONEY_HPP
#define ISN_MONEY_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace isn {

/// Exact rational amount in currency-neutral units. No game computation ever
/// rounds.
using Money = mpq_class;

/// Payoff vector, one entry per agent.
using Allocation = std::vector<Money>;

/// Parses an integer ("-12"), a fraction ("3/4") or a decimal ("0.125",
/// "-2.5") into an exact rational. Throws Error(kParseError) otherwise.
Money ParseMoney(std::string_view text);

/// Lowest-terms rendering: "13/3", "-2", "0".
std::string ToString(const Money& m);

Money Factorial(unsigned k);

}  // namespace isn

#endif  // ISN_MONEY_HPP
