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

#include "toromon/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "toromon/error.hpp"

namespace toromon {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_path(const std::string& arg) {
    if (arg.find('/') != std::string::npos) return true;
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") return true;
    std::error_code ec;
    return std::filesystem::exists(arg, ec);
}

}  // namespace

const std::vector<CatalogEntry>& bundled_catalog() {
    static const std::vector<CatalogEntry> entries = {
#include "catalog_data.inc"
    };
    return entries;
}

std::string load_scenario_text(const std::string& name_or_path) {
    if (looks_like_path(name_or_path)) return read_file(name_or_path);
    if (const char* dir = std::getenv("TOROMON_CATALOG_DIR"); dir != nullptr) {
        std::filesystem::path candidate =
            std::filesystem::path(dir) / (name_or_path + ".json");
        std::error_code ec;
        if (std::filesystem::exists(candidate, ec))
            return read_file(candidate.string());
    }
    for (const CatalogEntry& entry : bundled_catalog())
        if (entry.name == name_or_path) return entry.json_text;
    fail(ErrorKind::ParseError,
         "unknown scenario '" + name_or_path +
             "' (not a file, not in TOROMON_CATALOG_DIR, not bundled)");
}

}  // namespace toromon
