#ifndef KERNELALG_SUITES_HPP
#define KERNELALG_SUITES_HPP

#include "kernelalg/config.hpp"
#include "kernelalg/report.hpp"

namespace kernelalg {

// Runs the named verification suite against the configured space. The report
// content is a deterministic function of (config, seed); wall time is filled
// in memory only.
Report run_suite(const DiscreteSpace::Ptr& space, const ExperimentConfig& config);

}  // namespace kernelalg

#endif
