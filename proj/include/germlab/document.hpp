#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germlab/deformation.hpp"
#include "germlab/germ.hpp"

namespace germlab {

/// Parsed and validated input file: variable/parameter declarations, the map
/// components, and optional arcs, h polynomials and sample tuples.
struct InputDocument {
  std::vector<std::string> variables;
  std::vector<std::string> parameters;
  std::vector<std::string> map_text;

  RingPtr var_ring;                    // variables only
  RingPtr full_ring;                   // parameters then variables
  std::vector<Poly> map;               // in full_ring (= var_ring when no parameters)
  std::vector<Arc> arcs;
  std::vector<Poly> h_list;            // in var_ring
  std::vector<std::vector<Rational>> samples;

  bool is_family() const { return !parameters.empty(); }
  Germ germ() const;                   // requires a parameter-free document
  DeformationFamily family() const;    // requires parameters
};

InputDocument parse_input(const std::string& json_text);

Arc parse_arc(const std::string& text, int dim);

std::vector<std::vector<Rational>> parse_samples(const std::string& text, int k);

struct DispatchOptions {
  std::optional<std::string> h;
  std::optional<std::string> arc;
  std::optional<std::string> samples;     // "1;1/2;-2" tuples, comma-separated entries
  std::optional<int> truncation;
  std::optional<int> random_samples;      // with seed, appended to the sample set
  std::optional<unsigned> seed;
};

/// Runs one CLI command and returns the serialized JSON result (stable key
/// order, exact rationals as strings). Commands: multiplicity, exponent,
/// charpoly, polygon, arc, deform, prop23.
std::string run_command(const std::string& command, const InputDocument& doc,
                        const DispatchOptions& options);

}  // namespace germlab
