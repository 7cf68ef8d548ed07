#ifndef QLOGIC_FIXTURES_HPP
#define QLOGIC_FIXTURES_HPP

// Named, embedded input documents so that the CLI and the acceptance suite
// run without external files.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/serialize.hpp"

namespace qlogic {

/// Groupoids: empty, trivial, cyclicN, klein4, z2xz4, dihedralN, quaternion8,
/// symmetric3, interval, two-component, broken-inverse (invalid on purpose).
/// Algebras: pantsN, basisN, direct-sum-2-1, fault-order (a Rel algebra whose
/// multiplication order is not antisymmetric).
std::optional<Document> find_fixture(std::string_view name);

/// Representative names, one per family (parametrised families listed with
/// small parameters).
std::vector<std::string> fixture_names();

/// Resolves `spec` as a file path, then as path + ".json", then by its last
/// path component (e.g. "fixtures/klein4") as an embedded fixture.
Document resolve_document(const std::string& spec);

/// Rel algebra on {0, 1}: 0.0 = 0, 1.0 = 1, 1.1 = 0, 0.1 empty, unit {0}.
/// {0} <= {0,1} and {0,1} <= {0} both hold for the product order.
FrobeniusAlgebra fault_order_algebra();

}  // namespace qlogic

#endif  // QLOGIC_FIXTURES_HPP
