#pragma once

#include <string>

#include <json.hpp>

#include "entmono/locc_fuzz.hpp"
#include "entmono/spinchain.hpp"
#include "entmono/states.hpp"

namespace entmono {

// Insertion-ordered JSON so serialized reports keep a stable field order.
using Json = nlohmann::ordered_json;

// File formats. A complex scalar is a two-element array [re, im]. A matrix
// (bipartite state or density matrix) is an array of rows. A tripartite
// state is the nested array [2][2][n] indexed a[i][j][k]. Parsing is strict:
// ragged rows, wrong nesting depth, non-finite or non-numeric entries are
// ParseErrors.

Complex parse_complex(const Json& j);
ComplexMatrix parse_matrix(const Json& j);
BipartitePureState parse_bipartite_state(const Json& j);
TripartitePureState parse_tripartite_state(const Json& j);
DensityMatrix parse_density_matrix(const Json& j);

Json complex_to_json(Complex z);
Json matrix_to_json(const ComplexMatrix& m);
// Tripartite states serialize back to the [2][2][n] nesting.
Json tripartite_to_json(const TripartitePureState& s);
Json povm_to_json(const PovmPair& p);
Json fuzz_report_to_json(const FuzzReport& r);
Json kinks_to_json(const std::vector<KinkReport>& kinks);

// Round to 12 significant digits; all serialized numbers go through this so
// emitted files are stable across platforms.
double round12(double x);
std::string fmt12(double x);

// Reads and parses a JSON file; I/O and syntax problems are ParseErrors.
Json load_json_file(const std::string& path);

// Writes via a temporary in the same directory plus rename, so readers
// never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace entmono
