// File formats and report rendering.

#ifndef MFACES_IO_HPP
#define MFACES_IO_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfaces/complex.hpp"

namespace mfaces {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One facet per line, labels space-separated, '#' lines ignored.
SimplicialComplex read_complex(const std::string& text);

/// Facets in lexicographic order with sorted labels; comment lines first.
std::string write_complex(const SimplicialComplex& k, const std::vector<std::string>& comments = {});

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

/// One or more `name=[[v,...],[v,...],...]` entries. A leading "manifold_"
/// is dropped from each name.
std::vector<NamedComplex> parse_lutz(const std::string& text);

/// Reads a file in either format: the first non-comment character decides
/// (a digit means facet lines, a letter means name=[[...]] entries).
std::vector<NamedComplex> load_complexes(const std::string& path);

std::string read_text_file(const std::string& path);

/// Ordered key-value pairs.
using Report = std::vector<std::pair<std::string, std::string>>;

/// "key=value" per line.
std::string render_kv(const Report& r);

struct AnalyzeOptions {
  bool full_sphere_check = false;
  bool links = true;
};

/// f/h/g/m vectors, neighborliness, flag/Eulerian/sphere verdicts, stacked
/// degree, bound reports, per-vertex link data and the certificate.
Report analyze(const SimplicialComplex& k, const AnalyzeOptions& opt = {});

/// Aligned two-column rendering of the same report.
std::string render_table(const Report& r);

std::string join_counts(const std::vector<std::int64_t>& v);

}  // namespace mfaces

#endif  // MFACES_IO_HPP
