// Copyright 2026 The Socgan Authors
//
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

#ifndef SOCGAN_CLI_CLI_HPP
#define SOCGAN_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace socgan::cli {

/// Full command-line surface (simulate / train / predict / evaluate /
/// gradcheck), callable in-process. `args` excludes the program name.
/// Returns the process exit code: 0 success, 1 usage or configuration
/// error, 2 data error, 3 numeric failure (NaN loss, gradcheck failure).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace socgan::cli

#endif  // SOCGAN_CLI_CLI_HPP
