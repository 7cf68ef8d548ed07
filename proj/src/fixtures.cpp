#include "qlogic/fixtures.hpp"

#include <charconv>

#include "qlogic/cstar.hpp"
#include "qlogic/errors.hpp"
#include "qlogic/groupoid.hpp"

namespace qlogic {

namespace {

// "cyclic12" with prefix "cyclic" -> 12.
std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::size_t n = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return n;
}

}  // namespace

FrobeniusAlgebra fault_order_algebra() {
  const Object a = Object::rel(2);
  const std::pair<std::size_t, std::size_t> mult_pairs[] = {{0, 0}, {2, 1}, {3, 0}};
  const std::pair<std::size_t, std::size_t> unit_pairs[] = {{0, 0}};
  return FrobeniusAlgebra(Morphism::from_pairs(tensor(a, a), a, mult_pairs),
                          Morphism::from_pairs(unit_object(Backend::rel), a, unit_pairs));
}

std::optional<Document> find_fixture(std::string_view name) {
  using namespace qlogic::fixtures;
  if (name == "empty") return empty().to_spec();
  if (name == "trivial") return trivial().to_spec();
  if (name == "klein4") return klein4().to_spec();
  if (name == "z2xz4") return product(cyclic(2), cyclic(4)).to_spec();
  if (name == "quaternion8") return quaternion8().to_spec();
  if (name == "symmetric3") return symmetric3().to_spec();
  if (name == "interval") return interval().to_spec();
  if (name == "two-component") return disjoint_union(cyclic(2), trivial()).to_spec();
  if (name == "broken-inverse") return broken_inverse_spec();
  if (name == "direct-sum-2-1") return CStarSpec{{2, 1}};
  if (name == "fault-order") return fault_order_algebra();
  if (auto n = suffix_number(name, "cyclic"); n && *n >= 1 && *n <= 64) return cyclic(*n).to_spec();
  if (auto n = suffix_number(name, "dihedral"); n && *n >= 2 && *n <= 32) return dihedral(*n).to_spec();
  if (auto n = suffix_number(name, "pants"); n && *n >= 1 && *n <= 8) return pants_algebra(*n);
  if (auto n = suffix_number(name, "basis"); n && *n >= 1 && *n <= 64) return basis_algebra(*n);
  return std::nullopt;
}

std::vector<std::string> fixture_names() {
  return {"empty",     "trivial",      "cyclic1",       "cyclic2",        "cyclic3",        "cyclic4",
          "cyclic5",   "cyclic6",      "cyclic7",       "cyclic8",        "klein4",         "z2xz4",
          "dihedral3", "dihedral4",    "quaternion8",   "symmetric3",     "interval",       "two-component",
          "broken-inverse", "pants1", "pants2",        "pants3",         "basis1",         "basis2",
          "basis3",    "basis4",       "direct-sum-2-1", "fault-order"};
}

Document resolve_document(const std::string& spec) {
  namespace fs = std::filesystem;
  const fs::path path(spec);
  std::error_code ec;
  if (fs::is_regular_file(path, ec)) return load_document(path);
  fs::path with_ext = path;
  with_ext += ".json";
  if (fs::is_regular_file(with_ext, ec)) return load_document(with_ext);
  if (auto doc = find_fixture(path.filename().string())) return *doc;
  throw ParseError(spec, "no such file and no embedded fixture of that name");
}

}  // namespace qlogic
