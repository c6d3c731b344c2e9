#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tropmat/field_matrix.hpp"
#include "tropmat/graph.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/trop_matrix.hpp"
#include "tropmat/trop_space.hpp"

namespace tropmat {

/// Matroid JSON: {"n": 7, "circuits": [[1,2,4], ...]}, 1-indexed.
/// Loading runs validate_circuits.
Matroid load_matroid_json(std::istream& in);
Matroid load_matroid_file(const std::string& path);
std::string matroid_to_json(const Matroid& m);

/// Graph file: first line "V m", then m lines "u v" (1-indexed vertices);
/// edge id = line order.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);

/// Tropical matrix file: one row per line, entries "p/q" or "inf".
TropMatrix load_trop_matrix(std::istream& in);
TropMatrix load_trop_matrix_file(const std::string& path);
std::string trop_matrix_to_text(const TropMatrix& a);

/// Field matrix file: one row per line, whitespace-separated entries in
/// the grammar of Puiseux::parse (e.g. "1/2", "t", "3*t^2", "1+t-t^(1/2)").
FieldMatrix load_field_matrix(std::istream& in);
FieldMatrix load_field_matrix_file(const std::string& path);
std::string field_matrix_to_text(const FieldMatrix& a);

/// Pluecker file: header "d n", then C(n,d) lines "subset value" in lex
/// order; subset as comma-separated 1-indexed labels, value "p/q" or "inf".
TropPlucker load_plucker(std::istream& in);
TropPlucker load_plucker_file(const std::string& path);
std::string plucker_to_text(const TropPlucker& p);

/// Point: comma-separated "p/q" or "inf" entries.
TropPoint parse_point(const std::string& text);
std::string point_to_text(const TropPoint& x);

}  // namespace tropmat
