#include "bipaste/format.hpp"

#include <algorithm>
#include <cctype>

namespace bipaste {

std::string ParseError::str() const {
  return cat("line ", line, ", column ", col, ": ", message);
}

namespace {

struct Tok {
  std::string text;
  size_t col = 0;  // 1-based
  bool sym = false;
};

struct ParseFail {
  ParseError e;
};

[[noreturn]] void fail_at(size_t line, size_t col, std::string msg) {
  throw ParseFail{{line, col, std::move(msg)}};
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '~' || c == '\'' ||
         c == '*' || c == '.';
}

std::vector<Tok> lex_line(const std::string& line, size_t lineno) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (std::string("(){}=;:,[]").find(c) != std::string::npos) {
      out.push_back({std::string(1, c), i + 1, true});
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", i + 1, true});
      i += 2;
      continue;
    }
    if (ident_char(c)) {
      size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({line.substr(i, j - i), i + 1, false});
      i = j;
      continue;
    }
    fail_at(lineno, i + 1, cat("unexpected character '", c, "'"));
  }
  return out;
}

// Token cursor over one logical line.
struct Cursor {
  const std::vector<Tok>& toks;
  size_t line;
  size_t i = 0;

  bool done() const { return i >= toks.size(); }
  const Tok& peek() const {
    if (done()) fail_at(line, toks.empty() ? 1 : toks.back().col + toks.back().text.size(),
                        "unexpected end of line");
    return toks[i];
  }
  Tok next() {
    const Tok& t = peek();
    ++i;
    return t;
  }
  bool at(const std::string& s) const { return !done() && toks[i].text == s; }
  void expect(const std::string& s) {
    const Tok& t = peek();
    if (t.text != s) fail_at(line, t.col, cat("expected '", s, "', found '", t.text, "'"));
    ++i;
  }
  std::string ident(const std::string& what) {
    const Tok& t = peek();
    if (t.sym) fail_at(line, t.col, cat("expected ", what, ", found '", t.text, "'"));
    ++i;
    return t.text;
  }
  void end() {
    if (!done()) fail_at(line, toks[i].col, cat("trailing input '", toks[i].text, "'"));
  }
};

std::uint64_t parse_number(Cursor& c, const std::string& what) {
  const Tok& t = c.peek();
  if (t.sym || t.text.empty() ||
      !std::all_of(t.text.begin(), t.text.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    fail_at(c.line, t.col, cat("expected ", what, ", found '", t.text, "'"));
  c.i++;
  return std::stoull(t.text);
}

// item := NAME | '(' items ')'; a run of three or more items needs
// parentheses because composition is not strictly associative here.
PathExpr parse_path_items(Cursor& c, bool top);

PathExpr parse_path_item(Cursor& c) {
  if (c.at("(")) {
    size_t col = c.peek().col;
    c.next();
    PathExpr inner = parse_path_items(c, false);
    if (!c.at(")")) fail_at(c.line, c.done() ? col : c.peek().col, "unbalanced '('");
    c.next();
    return inner;
  }
  PathExpr e;
  e.edges.push_back(c.ident("an edge name"));
  e.shape = Bracketing::leaf();
  return e;
}

bool path_item_starts(const Cursor& c) {
  return !c.done() && (c.at("(") || !c.toks[c.i].sym);
}

PathExpr parse_path_items(Cursor& c, bool top) {
  size_t start_col = c.peek().col;
  std::vector<PathExpr> items;
  while (path_item_starts(c)) items.push_back(parse_path_item(c));
  if (items.empty()) fail_at(c.line, start_col, "empty path");
  if (items.size() > 2)
    fail_at(c.line, start_col,
            cat("ambiguous run of ", items.size(), " factors; add parentheses"));
  if (items.size() == 1) return items[0];
  PathExpr out;
  out.edges = items[0].edges;
  out.edges.insert(out.edges.end(), items[1].edges.begin(), items[1].edges.end());
  out.shape = Bracketing::node(items[0].shape, items[1].shape);
  (void)top;
  return out;
}

PathExpr parse_path(Cursor& c) { return parse_path_items(c, true); }

// elem := NAME | '(' elem ',' elem ')', rendered in the canonical nested
// pair spelling.
std::string parse_elem(Cursor& c) {
  if (c.at("(")) {
    c.next();
    std::string a = parse_elem(c);
    c.expect(",");
    std::string b = parse_elem(c);
    c.expect(")");
    return SpanModel::pair(a, b);
  }
  return c.ident("an element");
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string parse_model_kind(Cursor& c, size_t lineno, size_t kwcol) {
  std::string kind = c.ident("a model kind");
  c.end();
  if (kind != "span" && kind != "matrix")
    fail_at(lineno, kwcol, cat("unknown model kind '", kind, "'"));
  return kind;
}

// One object/span/cell/dim line inside a model block; shared between diagram
// documents and standalone assignment files.
void parse_model_item(ModelBlock& mb, Cursor& c, const std::string& kw, size_t lineno,
                      size_t kwcol) {
  if (kw == "object") {
    if (mb.kind != "span") fail_at(lineno, kwcol, "objects belong to span models");
    Id v = c.ident("a vertex name");
    c.expect("=");
    c.expect("{");
    std::vector<std::string> labels;
    while (!c.at("}")) labels.push_back(c.ident("a label"));
    c.expect("}");
    c.end();
    if (!mb.objects.emplace(v, std::move(labels)).second)
      fail_at(lineno, kwcol, cat("object for '", v, "' already declared"));
  } else if (kw == "span") {
    if (mb.kind != "span") fail_at(lineno, kwcol, "spans belong to span models");
    Id e = c.ident("an edge name");
    c.expect("=");
    SpanDecl sd;
    sd.tail_vertex = c.ident("a vertex name");
    c.expect("->");
    sd.head_vertex = c.ident("a vertex name");
    c.expect("{");
    while (!c.at("}")) {
      SpanRow row;
      row.elem = parse_elem(c);
      c.expect(":");
      row.left = c.ident("a label");
      c.expect("->");
      row.right = c.ident("a label");
      sd.rows.push_back(std::move(row));
      if (c.at(";")) c.next();
    }
    c.expect("}");
    c.end();
    if (!mb.spans.emplace(e, std::move(sd)).second)
      fail_at(lineno, kwcol, cat("span for '", e, "' already declared"));
  } else if (kw == "dim") {
    if (mb.kind != "matrix") fail_at(lineno, kwcol, "dims belong to matrix models");
    Id e = c.ident("an edge name");
    c.expect("=");
    std::uint64_t d = parse_number(c, "a dimension");
    c.end();
    if (!mb.dims.emplace(e, d).second)
      fail_at(lineno, kwcol, cat("dim for '", e, "' already declared"));
  } else {
    Id f = c.ident("a face name");
    c.expect("=");
    if (mb.kind == "span") {
      c.expect("{");
      std::vector<std::pair<std::string, std::string>> rows;
      while (!c.at("}")) {
        std::string from = parse_elem(c);
        c.expect("->");
        std::string to = parse_elem(c);
        rows.emplace_back(std::move(from), std::move(to));
        if (c.at(";")) c.next();
      }
      c.expect("}");
      c.end();
      if (!mb.cells.emplace(f, std::move(rows)).second)
        fail_at(lineno, kwcol, cat("cell for '", f, "' already declared"));
    } else {
      c.expect("[");
      std::uint64_t rows = parse_number(c, "a row count");
      std::string x = c.ident("'x'");
      if (x != "x") fail_at(lineno, kwcol, "matrix size must be written RxC, e.g. [2 x 3]");
      std::uint64_t cols = parse_number(c, "a column count");
      c.expect("]");
      MatrixLiteral lit{rows, cols, {}};
      while (!c.done()) lit.data.push_back(parse_number(c, "a matrix entry"));
      if (lit.data.size() != rows * cols)
        fail_at(lineno, kwcol,
                cat("matrix literal has ", lit.data.size(), " entries, expected ",
                    rows * cols));
      if (!mb.matrices.emplace(f, std::move(lit)).second)
        fail_at(lineno, kwcol, cat("cell for '", f, "' already declared"));
    }
  }
}

std::string render_path(const PathExpr& e) {
  struct R {
    const std::vector<Id>& edges;
    std::string run(const Bracketing& b, size_t lo, bool top) {
      if (b.is_leaf()) return edges[lo];
      std::string s = cat(run(b.left(), lo, false), " ",
                          run(b.right(), lo + b.left().length(), false));
      return top ? s : cat("(", s, ")");
    }
  };
  R r{e.edges};
  return r.run(e.shape, 0, true);
}

}  // namespace

ParseOutcome parse_document(const std::string& text) {
  DiagramDocument doc;
  bool have_source = false, have_sink = false, have_dom = false, have_cod = false;
  try {
    std::vector<std::string> lines = split_lines(text);
    for (size_t ln = 0; ln < lines.size(); ++ln) {
      size_t lineno = ln + 1;
      std::vector<Tok> toks = lex_line(lines[ln], lineno);
      if (toks.empty()) continue;
      Cursor c{toks, lineno};
      std::string kw = c.ident("a declaration keyword");
      size_t kwcol = toks[0].col;

      if (kw == "diagram") {
        if (!doc.name.empty()) fail_at(lineno, kwcol, "diagram name already declared");
        doc.name = c.ident("a diagram name");
        c.end();
        continue;
      }
      if (doc.name.empty())
        fail_at(lineno, kwcol, "file must start with a diagram declaration");

      if (kw == "vertex") {
        if (c.done()) fail_at(lineno, kwcol, "vertex declaration names no vertices");
        while (!c.done()) doc.vertices.push_back(c.ident("a vertex name"));
      } else if (kw == "edge") {
        EdgeDecl e;
        e.name = c.ident("an edge name");
        c.expect(":");
        e.tail = c.ident("a vertex name");
        c.expect("->");
        e.head = c.ident("a vertex name");
        c.end();
        doc.edges.push_back(std::move(e));
      } else if (kw == "face") {
        FaceDecl f;
        f.name = c.ident("a face name");
        c.expect(":");
        c.expect("dom");
        c.expect("=");
        f.dom = parse_path(c);
        c.expect(";");
        c.expect("cod");
        c.expect("=");
        f.cod = parse_path(c);
        c.end();
        doc.faces.push_back(std::move(f));
      } else if (kw == "source" || kw == "sink") {
        c.expect("=");
        Id v = c.ident("a vertex name");
        c.end();
        bool& seen = kw == "source" ? have_source : have_sink;
        if (seen) fail_at(lineno, kwcol, cat(kw, " already declared"));
        seen = true;
        (kw == "source" ? doc.source : doc.sink) = v;
      } else if (kw == "dom" || kw == "cod") {
        c.expect("=");
        PathExpr p = parse_path(c);
        c.end();
        bool& seen = kw == "dom" ? have_dom : have_cod;
        if (seen) fail_at(lineno, kwcol, cat(kw, " path already declared"));
        seen = true;
        (kw == "dom" ? doc.dom : doc.cod) = std::move(p);
      } else if (kw == "model") {
        if (doc.model) fail_at(lineno, kwcol, "model block already declared");
        doc.model = ModelBlock{};
        doc.model->kind = parse_model_kind(c, lineno, kwcol);
      } else if (kw == "object" || kw == "span" || kw == "cell" || kw == "dim") {
        if (!doc.model)
          fail_at(lineno, kwcol, cat("'", kw, "' outside a model block"));
        parse_model_item(*doc.model, c, kw, lineno, kwcol);
      } else {
        fail_at(lineno, kwcol, cat("unknown declaration '", kw, "'"));
      }
    }
    if (doc.name.empty()) fail_at(1, 1, "file must start with a diagram declaration");
  } catch (const ParseFail& f) {
    return f.e;
  }
  return doc;
}

AssignmentOutcome parse_assignment(const std::string& text) {
  ModelBlock mb;
  bool have_model = false;
  try {
    std::vector<std::string> lines = split_lines(text);
    for (size_t ln = 0; ln < lines.size(); ++ln) {
      size_t lineno = ln + 1;
      std::vector<Tok> toks = lex_line(lines[ln], lineno);
      if (toks.empty()) continue;
      Cursor c{toks, lineno};
      std::string kw = c.ident("a declaration keyword");
      size_t kwcol = toks[0].col;
      if (kw == "model") {
        if (have_model) fail_at(lineno, kwcol, "model block already declared");
        have_model = true;
        mb.kind = parse_model_kind(c, lineno, kwcol);
      } else if (!have_model) {
        fail_at(lineno, kwcol, "assignment file must start with a model declaration");
      } else if (kw == "object" || kw == "span" || kw == "cell" || kw == "dim") {
        parse_model_item(mb, c, kw, lineno, kwcol);
      } else {
        fail_at(lineno, kwcol, cat("unknown assignment declaration '", kw, "'"));
      }
    }
    if (!have_model) fail_at(1, 1, "assignment file must start with a model declaration");
  } catch (const ParseFail& f) {
    return f.e;
  }
  return mb;
}

std::string print_document(const DiagramDocument& doc) {
  std::ostringstream os;
  os << "diagram " << doc.name << "\n";
  if (!doc.vertices.empty()) {
    os << "vertex";
    for (const Id& v : doc.vertices) os << " " << v;
    os << "\n";
  }
  for (const EdgeDecl& e : doc.edges)
    os << "edge " << e.name << " : " << e.tail << " -> " << e.head << "\n";
  for (const FaceDecl& f : doc.faces)
    os << "face " << f.name << " : dom = " << render_path(f.dom)
       << " ; cod = " << render_path(f.cod) << "\n";
  os << "source = " << doc.source << "\n";
  os << "sink = " << doc.sink << "\n";
  os << "dom = " << render_path(doc.dom) << "\n";
  os << "cod = " << render_path(doc.cod) << "\n";
  if (doc.model) {
    const ModelBlock& mb = *doc.model;
    os << "\nmodel " << mb.kind << "\n";
    for (const auto& [v, labels] : mb.objects) {
      os << "object " << v << " = {";
      for (const std::string& l : labels) os << " " << l;
      os << " }\n";
    }
    for (const auto& [e, sd] : mb.spans) {
      os << "span " << e << " = " << sd.tail_vertex << " -> " << sd.head_vertex << " {";
      for (size_t i = 0; i < sd.rows.size(); ++i)
        os << (i ? " ; " : " ") << sd.rows[i].elem << " : " << sd.rows[i].left << " -> "
           << sd.rows[i].right;
      os << " }\n";
    }
    for (const auto& [e, d] : mb.dims) os << "dim " << e << " = " << d << "\n";
    for (const auto& [f, rows] : mb.cells) {
      os << "cell " << f << " = {";
      for (size_t i = 0; i < rows.size(); ++i)
        os << (i ? " ; " : " ") << rows[i].first << " -> " << rows[i].second;
      os << " }\n";
    }
    for (const auto& [f, lit] : mb.matrices) {
      os << "cell " << f << " = [" << lit.rows << " x " << lit.cols << "]";
      for (std::uint64_t v : lit.data) os << " " << v;
      os << "\n";
    }
  }
  return os.str();
}

Result<BracketedGraph> document_graph(const DiagramDocument& doc) {
  using R = Result<BracketedGraph>;
  Graph gr;
  for (const Id& v : doc.vertices)
    if (!gr.vertices.insert(v).second) return R::fail(cat("vertex '", v, "' declared twice"));
  for (const EdgeDecl& e : doc.edges) {
    if (!gr.vertices.count(e.tail))
      return R::fail(cat("edge '", e.name, "': undeclared vertex '", e.tail, "'"));
    if (!gr.vertices.count(e.head))
      return R::fail(cat("edge '", e.name, "': undeclared vertex '", e.head, "'"));
    if (gr.vertices.count(e.name) || gr.edges.count(e.name))
      return R::fail(cat("edge '", e.name, "' reuses a declared name"));
    gr.edges[e.name] = {e.tail, e.head};
  }

  auto build_path = [&](const PathExpr& pe, const std::string& what) -> Result<DirectedPath> {
    auto p = path_from_edges(gr, pe.edges);
    if (!p) return Result<DirectedPath>::fail(cat(what, ": ", p.error()));
    return p;
  };

  std::vector<Face> faces;
  std::map<Id, FaceShapes> shapes;
  for (const FaceDecl& f : doc.faces) {
    auto dom = build_path(f.dom, cat("face '", f.name, "' dom"));
    if (!dom) return R::fail(dom.error());
    auto cod = build_path(f.cod, cat("face '", f.name, "' cod"));
    if (!cod) return R::fail(cod.error());
    if (dom->source() != cod->source() || dom->sink() != cod->sink())
      return R::fail(cat("face '", f.name, "': dom and cod do not share endpoints"));
    if (shapes.count(f.name)) return R::fail(cat("face '", f.name, "' declared twice"));
    faces.push_back({f.name, {dom->source(), dom->sink(), *dom, *cod}});
    shapes[f.name] = {f.dom.shape, f.cod.shape};
  }

  if (doc.source.empty()) return R::fail("no source declared");
  if (doc.sink.empty()) return R::fail("no sink declared");
  if (doc.dom.edges.empty()) return R::fail("no dom path declared");
  if (doc.cod.edges.empty()) return R::fail("no cod path declared");
  if (!gr.vertices.count(doc.source))
    return R::fail(cat("source '", doc.source, "' is not a declared vertex"));
  if (!gr.vertices.count(doc.sink))
    return R::fail(cat("sink '", doc.sink, "' is not a declared vertex"));
  auto dom = build_path(doc.dom, "dom");
  if (!dom) return R::fail(dom.error());
  auto cod = build_path(doc.cod, "cod");
  if (!cod) return R::fail(cod.error());
  for (const DirectedPath* p : {&*dom, &*cod}) {
    if (p->source() != doc.source)
      return R::fail(cat("boundary path starts at '", p->source(), "', not the source"));
    if (p->sink() != doc.sink)
      return R::fail(cat("boundary path ends at '", p->sink(), "', not the sink"));
  }

  BracketedGraph bg;
  bg.g = make_anchored(std::move(gr), std::move(faces), {doc.source, doc.sink, *dom, *cod});
  bg.dom_shape = doc.dom.shape;
  bg.cod_shape = doc.cod.shape;
  bg.face_shapes = std::move(shapes);
  return bg;
}

namespace {

PathExpr path_expr_of(const DirectedPath& p, const Bracketing& shape) {
  return {p.edges, shape};
}

}  // namespace

DiagramDocument document_of(const BracketedGraph& g, std::string name) {
  DiagramDocument doc;
  doc.name = std::move(name);
  doc.vertices.assign(g.g.graph.vertices.begin(), g.g.graph.vertices.end());
  for (const auto& [e, inc] : g.g.graph.edges) doc.edges.push_back({e, inc.tail, inc.head});
  for (const Face& f : g.g.faces) {
    const FaceShapes& fs = g.face_shapes.at(f.id);
    doc.faces.push_back({f.id, path_expr_of(f.anchor.dom, fs.dom),
                         path_expr_of(f.anchor.cod, fs.cod)});
  }
  doc.source = g.g.outer.source;
  doc.sink = g.g.outer.sink;
  doc.dom = path_expr_of(g.g.outer.dom, g.dom_shape);
  doc.cod = path_expr_of(g.g.outer.cod, g.cod_shape);
  return doc;
}

void attach_span_model(DiagramDocument& doc, const Diagram<SpanModel>& d) {
  ModelBlock mb;
  mb.kind = "span";
  for (const auto& [v, obj] : d.objects) mb.objects[v] = obj;
  std::map<Id, Incidence> inc;
  for (const EdgeDecl& e : doc.edges) inc[e.name] = {e.tail, e.head};
  for (const auto& [e, span] : d.ones) {
    SpanDecl sd;
    sd.tail_vertex = inc.at(e).tail;
    sd.head_vertex = inc.at(e).head;
    for (size_t i = 0; i < span.apex.size(); ++i)
      sd.rows.push_back({span.apex[i], span.left[i], span.right[i]});
    mb.spans[e] = std::move(sd);
  }
  for (const auto& [f, cell] : d.twos) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (size_t i = 0; i < cell.src.apex.size(); ++i)
      rows.emplace_back(cell.src.apex[i], cell.tgt.apex[cell.map[i]]);
    mb.cells[f] = std::move(rows);
  }
  doc.model = std::move(mb);
}

void attach_matrix_model(DiagramDocument& doc, const Diagram<MatrixModel>& d) {
  ModelBlock mb;
  mb.kind = "matrix";
  for (const auto& [e, one] : d.ones) mb.dims[e] = one.dim;
  for (const auto& [f, cell] : d.twos) mb.matrices[f] = {cell.rows, cell.cols, cell.data};
  doc.model = std::move(mb);
}

Result<Diagram<SpanModel>> bind_span_model(const ModelBlock& mb, const BracketedGraph& g) {
  using R = Result<Diagram<SpanModel>>;
  if (mb.kind != "span")
    return R::fail(cat("model block kind is '", mb.kind, "', expected 'span'"));
  SpanModel m;
  Diagram<SpanModel> d;
  d.shape = g;

  for (const Id& v : g.g.graph.vertices) {
    auto it = mb.objects.find(v);
    if (it == mb.objects.end()) return R::fail(cat("no object declared for vertex '", v, "'"));
    d.objects[v] = SpanModel::object(it->second);
  }
  for (const auto& [e, incid] : g.g.graph.edges) {
    auto it = mb.spans.find(e);
    if (it == mb.spans.end()) return R::fail(cat("no span declared for edge '", e, "'"));
    const SpanDecl& sd = it->second;
    if (sd.tail_vertex != incid.tail || sd.head_vertex != incid.head)
      return R::fail(cat("span for '", e, "' runs ", sd.tail_vertex, " -> ", sd.head_vertex,
                         " but the edge runs ", incid.tail, " -> ", incid.head));
    std::vector<SpanModel::Elem> apex;
    std::vector<std::string> left, right;
    for (const SpanRow& row : sd.rows) {
      apex.push_back(row.elem);
      left.push_back(row.left);
      right.push_back(row.right);
    }
    auto span = SpanModel::span(d.objects.at(incid.tail), d.objects.at(incid.head),
                                std::move(apex), std::move(left), std::move(right));
    if (!span) return R::fail(cat("span for '", e, "': ", span.error()));
    d.ones.emplace(e, std::move(span).take());
  }
  for (const Face& f : g.g.faces) {
    auto it = mb.cells.find(f.id);
    if (it == mb.cells.end()) return R::fail(cat("no cell declared for face '", f.id, "'"));
    const FaceShapes& fs = g.face_shapes.at(f.id);
    SpanModel::OneCell src = eval_bracketed_path(m, d.ones, f.anchor.dom, fs.dom);
    SpanModel::OneCell tgt = eval_bracketed_path(m, d.ones, f.anchor.cod, fs.cod);
    std::map<SpanModel::Elem, SpanModel::Elem> assignment;
    for (const auto& [from, to] : it->second)
      if (!assignment.emplace(from, to).second)
        return R::fail(cat("cell for '", f.id, "': element '", from, "' mapped twice"));
    auto cell = SpanModel::two_cell(src, tgt, assignment);
    if (!cell) return R::fail(cat("cell for '", f.id, "': ", cell.error()));
    d.twos.emplace(f.id, std::move(cell).take());
  }
  return d;
}

Result<Diagram<MatrixModel>> bind_matrix_model(const ModelBlock& mb,
                                               const BracketedGraph& g) {
  using R = Result<Diagram<MatrixModel>>;
  if (mb.kind != "matrix")
    return R::fail(cat("model block kind is '", mb.kind, "', expected 'matrix'"));
  Diagram<MatrixModel> d;
  d.shape = g;
  for (const Id& v : g.g.graph.vertices) d.objects[v] = MatrixModel::Object{};
  for (const auto& [e, incid] : g.g.graph.edges) {
    (void)incid;
    auto it = mb.dims.find(e);
    if (it == mb.dims.end()) return R::fail(cat("no dim declared for edge '", e, "'"));
    d.ones.emplace(e, MatrixModel::OneCell{it->second});
  }
  for (const Face& f : g.g.faces) {
    auto it = mb.matrices.find(f.id);
    if (it == mb.matrices.end()) return R::fail(cat("no cell declared for face '", f.id, "'"));
    std::uint64_t rows = 0, cols = 0;
    for (const Id& e : f.anchor.dom.edges) rows += d.ones.at(e).dim;
    for (const Id& e : f.anchor.cod.edges) cols += d.ones.at(e).dim;
    if (it->second.rows != rows || it->second.cols != cols)
      return R::fail(cat("cell for '", f.id, "' is ", it->second.rows, " x ", it->second.cols,
                         " but the boundary needs ", rows, " x ", cols));
    d.twos.emplace(f.id, MatrixModel::matrix(it->second.rows, it->second.cols,
                                             it->second.data));
  }
  return d;
}

}  // namespace bipaste
