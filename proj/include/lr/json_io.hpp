#pragma once

#include <string>

#include "lr/analyze.hpp"
#include "lr/families.hpp"
#include "lr/refine.hpp"
#include "lr/search.hpp"

namespace lr {

/// Line-oriented trace form: one JSON record per iteration carrying the
/// class membership arrays and the split that produced the iteration.
std::string trace_to_json_lines(const RefinementTrace& trace);

std::string report_to_json(const StructureReport& report);

std::string catalog_provenance_json(const CatalogResult& result);

std::string cross_validation_json(const CrossValidationReport& report);

}  // namespace lr
