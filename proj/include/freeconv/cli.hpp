#pragma once

// Command-line surface. Exit codes: 0 success or all checks pass, 1 a
// verification failed, 2 usage or parse error, 3 domain error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "freeconv/catalan.hpp"

namespace freeconv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// args excludes the program name. env_seed is the value of FREECONV_SEED,
// if set; --seed overrides it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_seed = std::nullopt);

// JSON form of a Catalan object: tree text as a string, partitions as block
// arrays, planar trees as nested arrays, parking functions as int arrays.
nlohmann::json object_to_json(const CatalanObject& x);
// Accepts the raw text form or its JSON dump (a quoted tree string).
CatalanObject object_from_text(FamilyId fam, const std::string& text);

} // namespace freeconv
