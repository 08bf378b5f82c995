#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewnorm/json_io.hpp"

namespace skewnorm {

struct Response {
  bool ok = true;
  Json result;
  Json diagnostics = Json::array();
  int exit_code = 0;  // 0 ok, 1 operation error, 2 usage error

  Json to_json() const;
  std::string dump() const { return to_json().dump(); }
};

struct VerbInfo {
  std::string name;
  std::string summary;
};

const std::vector<VerbInfo>& verb_list();
const std::vector<VerbInfo>& demo_list();

/// Routes {"verb", "args", "seed"} to the matching operation. `seed_override`
/// replaces the request seed when set.
Response dispatch(const Json& request, std::optional<std::uint64_t> seed_override = std::nullopt);

/// Parses `text` as a request first; malformed JSON is a usage error.
Response dispatch_text(const std::string& text, std::optional<std::uint64_t> seed_override = std::nullopt);

Response run_demo(const std::string& name, std::uint64_t seed = 0);

}  // namespace skewnorm
