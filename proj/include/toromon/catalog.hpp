/*
   Copyright 2026 The toromon authors

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

// Bundled scenario catalog and name-or-path resolution for the CLI.

#pragma once

#include <string>
#include <vector>

namespace toromon {

struct CatalogEntry {
    std::string name;
    std::string json_text;
};

// Scenarios compiled into the binary, in catalog order.
const std::vector<CatalogEntry>& bundled_catalog();

// Resolves a scenario argument to its JSON text. Arguments that look like
// paths (contain a slash, end in .json, or name an existing file) are read
// from disk. Otherwise the name is looked up under TOROMON_CATALOG_DIR
// when that variable is set and the file exists, then in the bundled
// catalog. Throws Error(ParseError) when nothing matches.
std::string load_scenario_text(const std::string& name_or_path);

}  // namespace toromon
