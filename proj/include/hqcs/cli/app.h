// Copyright 2026 The HQCS Authors.
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

#ifndef HQCS_CLI_APP_H_
#define HQCS_CLI_APP_H_

#include <ostream>

namespace hqcs::cli {

/// Entry point of the `hqcs` tool. Returns one of the ExitCode values.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hqcs::cli

#endif  // HQCS_CLI_APP_H_
