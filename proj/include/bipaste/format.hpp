#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "bipaste/diagram.hpp"
#include "bipaste/matrix_model.hpp"
#include "bipaste/span_model.hpp"

namespace bipaste {

// Surface syntax for diagram files: one declaration per line, '#' starts a
// comment.  Composition paths are written source to sink, fully
// parenthesized down to pairs: "(h1 h2) f2".
//
//   diagram NAME
//   vertex A B ...
//   edge e : X -> Y
//   face f : dom = (h1 h2) f2 ; cod = g1 g2
//   source = V
//   sink = T
//   dom = f1 f2
//   cod = g1 g2
//
// An optional model block binds cells to the shape:
//
//   model span
//   object V = { v1 v2 }
//   span h1 = V -> S { a : v1 -> s1 }
//   cell theta1 = { d -> (a,b1) }
//
//   model matrix
//   dim h1 = 2
//   cell theta1 = [1 x 2] 3 4

struct PathExpr {
  std::vector<Id> edges;
  Bracketing shape;
  bool operator==(const PathExpr&) const = default;
};

struct EdgeDecl {
  Id name, tail, head;
};

struct FaceDecl {
  Id name;
  PathExpr dom, cod;
};

struct SpanRow {
  std::string elem, left, right;
};

struct SpanDecl {
  Id tail_vertex, head_vertex;
  std::vector<SpanRow> rows;
};

struct MatrixLiteral {
  std::uint64_t rows = 0, cols = 0;
  std::vector<std::uint64_t> data;
};

struct ModelBlock {
  std::string kind;  // "span" or "matrix"
  std::map<Id, std::vector<std::string>> objects;
  std::map<Id, SpanDecl> spans;
  std::map<Id, std::vector<std::pair<std::string, std::string>>> cells;
  std::map<Id, std::uint64_t> dims;
  std::map<Id, MatrixLiteral> matrices;
};

struct DiagramDocument {
  std::string name;
  std::vector<Id> vertices;
  std::vector<EdgeDecl> edges;
  std::vector<FaceDecl> faces;
  Id source, sink;
  PathExpr dom, cod;
  std::optional<ModelBlock> model;
};

struct ParseError {
  size_t line = 0, col = 0;
  std::string message;
  std::string str() const;
};

using ParseOutcome = std::variant<DiagramDocument, ParseError>;

ParseOutcome parse_document(const std::string& text);

// Parses a standalone assignment file: a model block with nothing before it.
using AssignmentOutcome = std::variant<ModelBlock, ParseError>;

AssignmentOutcome parse_assignment(const std::string& text);

// Inverse of parsing up to whitespace; parse(print(doc)) == doc.
std::string print_document(const DiagramDocument& doc);

// Checks declarations against each other (undeclared names, endpoint
// mismatches, duplicate ids) and assembles the bracketed graph.
Result<BracketedGraph> document_graph(const DiagramDocument& doc);

DiagramDocument document_of(const BracketedGraph& g, std::string name);

void attach_span_model(DiagramDocument& doc, const Diagram<SpanModel>& d);
void attach_matrix_model(DiagramDocument& doc, const Diagram<MatrixModel>& d);

// Builds the model assignment from a model block and validates it cell by
// cell against the shape.
Result<Diagram<SpanModel>> bind_span_model(const ModelBlock& mb, const BracketedGraph& g);
Result<Diagram<MatrixModel>> bind_matrix_model(const ModelBlock& mb,
                                               const BracketedGraph& g);

}  // namespace bipaste
