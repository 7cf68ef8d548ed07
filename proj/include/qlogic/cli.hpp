#ifndef QLOGIC_CLI_HPP
#define QLOGIC_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/fixtures.hpp"
#include "qlogic/projorder.hpp"
#include "qlogic/report.hpp"

namespace qlogic {

enum class OutputFormat { text, structured, dot };

struct RunConfig {
  std::vector<std::string> inputs;
  Tolerance tolerance{};
  std::size_t max_enum = 1'000'000;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 0;
  std::optional<std::string> order;  // "mult" or "inclusion"
  std::optional<Backend> backend;
};

/// Exit codes: 0 success, 1 law or claim failure, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A loaded input: the raw document, the groupoid when it is one, and the
/// algebra it denotes (groupoid algebra, C*-spec, or algebra document).
struct Input {
  std::string name;
  Document document;
  std::optional<Groupoid> groupoid;
  std::optional<FrobeniusAlgebra> algebra;
};

/// Throws ParseError, LawViolationError (invalid groupoid) or
/// BackendMismatchError (when cfg.backend disagrees with the document).
Input load_input(const std::string& spec, const RunConfig& cfg);

/// Subsets of the carrier as points: index set {i : bit i of mask}. Works for
/// both backends (0/1 coordinate vectors in FHilb).
Point indicator_point(const FrobeniusAlgebra& alg, std::uint64_t mask);
std::string indicator_name(const FrobeniusAlgebra& alg, std::uint64_t mask);

/// Every 0/1 point of the carrier that is a projection. Throws
/// ResourceLimitError when 2^|carrier| exceeds max_enum.
std::vector<NamedPoint> indicator_projections(const FrobeniusAlgebra& alg, Tolerance tol,
                                              std::size_t max_enum);

/// Subgroupoids for groupoid inputs, indicator projections otherwise.
std::vector<NamedPoint> projection_family(const Input& in, const RunConfig& cfg);

std::vector<std::string> counterexample_names();
/// Throws Error for an unknown name.
Report counterexample_report(std::string_view name, const RunConfig& cfg);

Report validate_report(const Input& in, const RunConfig& cfg);
Report projections_report(const Input& in, const RunConfig& cfg);
Report lattice_command_report(const Input& in, const RunConfig& cfg);
Report copyables_report(const Input& in, const RunConfig& cfg);
Report tensor_report(const Input& a, const Input& b, const RunConfig& cfg);

/// Elements and cover edges of a poset, for rendering.
void attach_poset(Report& r, const ProjectionPoset& poset);

}  // namespace qlogic

#endif  // QLOGIC_CLI_HPP
