#pragma once

#include <string>

#include "json.hpp"
#include "sublab/catalog.hpp"
#include "sublab/metric.hpp"

namespace sublab {

using Json = nlohmann::ordered_json;

/// Which report sections to compute.
struct ReportSections {
  bool decomposition = true;
  bool metric = true;
  bool verdict = true;
  bool obstruction = true;

  static ReportSections full() { return {}; }
  static ReportSections decompose_only() {
    return {true, false, false, false};
  }
  static ReportSections metric_only() { return {true, true, false, false}; }
  static ReportSections obstruct_only() {
    return {false, false, false, true};
  }
};

Json decomposition_json(const Decomposition& d);
Json obstruction_json(const ObstructionResult& r);

/// Obstruction section for an explicit total -> base question, with the
/// two spaces named in the output.
Json framed_obstruction(const SpaceDescriptor& total,
                        const SpaceDescriptor& base);

/// Group descriptor for a single-factor so/su/sp label at parameter n.
SpaceDescriptor group_descriptor(const std::string& label, std::size_t n);

/// Versioned report for one fixture at one n. Out-of-scope scenarios keep
/// scenario.constructible = false and still carry the obstruction section.
Json run_fixture(const CatalogEntry& row, const Fixture& fx, std::size_t n,
                 const DecomposeOptions& opt,
                 const ReportSections& sections = ReportSections::full());

/// Runs a fixture across an n range, capturing per-n failures instead of
/// aborting. With parallel=true the n values run independently.
Json sweep_fixture(const CatalogEntry& row, const Fixture& fx,
                   std::size_t n_min, std::size_t n_max,
                   const DecomposeOptions& opt, bool obstruct_only,
                   bool parallel);

/// Plain-text rendering of a report produced by run_fixture or
/// sweep_fixture.
std::string render_text(const Json& report);

}  // namespace sublab
