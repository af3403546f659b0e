#ifndef DGLA_CLI_HPP
#define DGLA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dgla/deformation.hpp"
#include "dgla/hodge.hpp"
#include "dgla/report.hpp"

namespace dgla {

enum ExitCode : int { kExitOk = 0, kExitInvariant = 1, kExitInput = 2 };

constexpr int kDefaultOrder = 4;
constexpr int kMaxOrder = 16;

/// Runs one command line (without the program name), writing the report to
/// `out` and diagnostics to `err`. Returns 0 if every check passed, 1 if an
/// invariant failed and 2 on input or usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                bool color = false);

// Stage builders shared by the subcommands and the self test.
Stage validation_stage(const Dgla& g);
Stage homology_stage(const Dgla& g);
Stage sdr_stage(const Dgla& g, const SdrData& sdr);
Stage hodge_stage(const Dgla& g, const SdrData& sdr);
Stage mc_stage(const Dgla& g, const SdrData& sdr, const FormalElement& direction,
               const std::string& name = "mc-solve");
Stage obstruction_stage(const Dgla& g, const SdrData& sdr, const FormalElement& direction);
Stage kuranishi_stage(const Dgla& g, const SdrData& sdr, const FormalElement& input, bool inverse);
Stage gauge_stage(const Dgla& g, const SdrData& sdr, const FormalElement& from,
                  const FormalElement& to);

/// Direction sum_i coords[i] eta_i t over the harmonic basis eta of H^1.
/// Throws InputError if the number of coordinates differs from dim H^1.
FormalElement harmonic_combination(const Dgla& g, const SdrData& sdr, const Vector& coords,
                                   const CoefficientRing& ring);

/// Every sdr, hodge and deformation invariant over the built-in corpus.
/// Deterministic: randomised parts use a fixed seed.
RunReport selftest_report();

}  // namespace dgla

#endif  // DGLA_CLI_HPP
