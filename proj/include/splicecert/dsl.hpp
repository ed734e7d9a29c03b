#pragma once

#include "splicecert/diagram.hpp"

#include <map>
#include <string>
#include <string_view>

namespace splicecert {

struct SourceLocation {
  int line = 0;
  int column = 0;
};

struct DiagramDocument {
  std::string source;
  SpliceDiagram diagram;
  std::map<VertexId, SourceLocation> vertex_locations;
  std::map<EdgeId, SourceLocation> edge_locations;
};

/// Line-oriented diagram format, one statement per line, '#' starts a comment:
///
///   node NAME
///   leaf NAME
///   edge A B WA WB        # WA/WB: positive integer at a node, '-' at a leaf
///   arrow LEAF [mult=N] [colour=N]
///
/// Statements may appear in any order. Throws ParseError (code ParseError)
/// for lexical and referential problems and (code StructureError) when the
/// edges do not form a tree.
DiagramDocument parse_diagram(std::string_view text);

/// Inverse of parse_diagram: vertices in id order, then edges, then arrows.
std::string serialize_diagram(const SpliceDiagram& d);

}  // namespace splicecert
