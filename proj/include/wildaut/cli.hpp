/*
   Copyright 2026 The wildaut authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WILDAUT_CLI_HPP
#define WILDAUT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wildaut {

// Exit codes: 0 ok, 1 usage/other error, 2 degenerate cover, 3 cap exceeded.
int run_request(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace wildaut

#endif
