// JSON and CSV serialization. Lattices travel as {schema_version, dim,
// num_vertices, facets}; the full lattice is always rebuilt from the facets
// on load. Rationals are strings ("num/den" or "num") to stay exact.
#pragma once

#include "facelat/bounds.hpp"
#include "facelat/construction.hpp"
#include "facelat/face_lattice.hpp"
#include "facelat/oracle.hpp"

#include <string>

namespace facelat {

constexpr int kSchemaVersion = 1;

std::string lattice_to_json(const FaceLattice& p);
FaceLattice lattice_from_json(const std::string& text);

std::string points_to_json(const PointConfig& pc);
PointConfig points_from_json(const std::string& text);

std::string construction_to_json(const Construction& spec);
Construction construction_from_json(const std::string& text);

std::string report_to_json(const BoundReport& rep);
// Fixed columns: d,s,k,f_k,phi_k,slack (header row included).
std::string report_to_csv(const BoundReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace facelat
