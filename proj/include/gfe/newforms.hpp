#pragma once

#include "gfe/eliminate.hpp"

namespace gfe {

// Load newform records from a local JSON file or an http:// endpoint.
// Remote fetches are cached under cache_dir keyed by the SHA-256 of the URL;
// a cache hit never touches the network. Malformed records are skipped with
// per-record diagnostics; Weil-violating eigenvalues reject the record.
struct LoadResult {
  std::vector<NewformRecord> records;
  std::vector<std::string> diagnostics;
};
LoadResult load_newforms(const std::string& source, const RunConfig& cfg = {});

std::string report_json(const EliminationReport& rep);

}  // namespace gfe
