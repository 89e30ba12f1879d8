/*
 * Copyright 2026 The streampart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef STREAMPART_CLI_HPP
#define STREAMPART_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace streampart {

/// Exit statuses of execute_command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/**
 * Runs one CLI invocation. `args` excludes the program name:
 *   gen    --kind uniform|constant|spike|yz|index --n N [--m M] [--t T] [--i I]
 *          [--bits STR] [--seed SEED] [--out FILE]
 *   solve  --p P --mode part|partb --know none|m|mn|s [--epsilon E] [--m M]
 *          [--n N] [--s S] [--input FILE]
 *   oracle --p P [--method binsearch|dp] [--input FILE]
 *   bench  --config FILE --out CSV
 * Streams are read from `in` when --input is absent. Errors produce a single
 * "error: ..." line on `err`.
 */
int execute_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                    std::ostream& err);

}  // namespace streampart

#endif  // STREAMPART_CLI_HPP
