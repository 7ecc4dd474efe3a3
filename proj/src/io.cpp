#include "semimon/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "semimon/error.hpp"

namespace semimon {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{n, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

bool is_keyword(const Line& l) { return std::isalpha(static_cast<unsigned char>(l.tokens[0][0])) != 0; }

Integer parse_integer(const Line& l, const std::string& token) {
  Integer x;
  std::string_view t = token;
  if (!t.empty() && t[0] == '+') t.remove_prefix(1);
  if (t.empty() || x.set_str(std::string(t), 10) != 0) fail(l.number, "not an integer: " + token);
  return x;
}

IntVector parse_row(const Line& l, std::size_t from, std::size_t width) {
  if (l.tokens.size() - from != width)
    fail(l.number, "expected " + std::to_string(width) + " integers, got " + std::to_string(l.tokens.size() - from));
  IntVector v;
  for (std::size_t i = from; i < l.tokens.size(); ++i) v.push_back(parse_integer(l, l.tokens[i]));
  return v;
}

std::size_t parse_count(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) fail(l.number, "missing count");
  Integer x = parse_integer(l, l.tokens[i]);
  if (sgn(x) < 0 || !x.fits_ulong_p()) fail(l.number, "bad count");
  return x.get_ui();
}

std::string row_text(std::span<const Integer> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].get_str();
  }
  return s;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

InputKind detect_input(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty input");
  if (lines[0].tokens[0] == "monoid") return InputKind::Monoid;
  if (lines[0].tokens[0] == "model") return InputKind::Model;
  return InputKind::Complex;
}

AffineMonoid parse_monoid(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "monoid" || lines[0].tokens.size() != 2)
    throw Error(ErrorKind::ParseError, "expected header 'monoid <m>'");
  const std::size_t m = parse_count(lines[0], 1);
  std::vector<IntVector> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_row(lines[i], 0, m));
  return AffineMonoid(std::move(gens), m);
}

std::string write_monoid(const AffineMonoid& m) {
  std::string s = "monoid " + std::to_string(m.ambient_dim()) + "\n";
  for (const auto& g : m.generators()) s += row_text(g) + "\n";
  return s;
}

DecoratedCone parse_model(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "model" || lines[0].tokens.size() != 2)
    throw Error(ErrorKind::ParseError, "expected header 'model <m>'");
  const std::size_t m = parse_count(lines[0], 1);
  std::size_t i = 1;
  std::vector<IntVector> rays;
  for (; i < lines.size() && !is_keyword(lines[i]); ++i) rays.push_back(parse_row(lines[i], 0, m));

  std::optional<IntVector> degree;
  std::optional<std::vector<IntVector>> group_rows;
  std::vector<std::pair<Line, std::vector<IntVector>>> face_blocks;
  while (i < lines.size()) {
    const Line& head = lines[i++];
    std::vector<IntVector> rows;
    auto take_rows = [&] {
      for (; i < lines.size() && !is_keyword(lines[i]); ++i) rows.push_back(parse_row(lines[i], 0, m));
    };
    const std::string& kw = head.tokens[0];
    if (kw == "degree") {
      if (degree) fail(head.number, "repeated degree line");
      degree = parse_row(head, 1, m);
    } else if (kw == "group") {
      if (group_rows) fail(head.number, "repeated group block");
      take_rows();
      group_rows = rows;
    } else if (kw == "face") {
      take_rows();
      face_blocks.emplace_back(head, std::move(rows));
    } else {
      fail(head.number, "unknown keyword: " + kw);
    }
  }

  try {
    std::shared_ptr<const FaceLattice> fl;
    try {
      fl = std::make_shared<const FaceLattice>(dual_description(rays, m));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, std::string("rays: ") + e.what());
    }
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (r >= fl->cone().extreme_rays().size() || rays[r] != fl->cone().extreme_rays()[r])
        throw Error(ErrorKind::ParseError, "model rays must be distinct primitive extreme rays");

    const Lattice group = group_rows ? lattice_from_rows(m, *group_rows) : fl->cone().span_lattice();
    std::map<std::size_t, Lattice> explicit_lattices;
    for (const auto& [head, rows] : face_blocks) {
      std::vector<std::size_t> ids;
      for (std::size_t t = 1; t < head.tokens.size(); ++t) ids.push_back(parse_count(head, t));
      if (!std::is_sorted(ids.begin(), ids.end()) || std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        fail(head.number, "face rays must be sorted and distinct");
      std::size_t id;
      try {
        id = find_face(*fl, ids);
      } catch (const Error&) {
        fail(head.number, "not a face");
      }
      if (id == fl->top()) fail(head.number, "use a group block for the full cone");
      if (!explicit_lattices.emplace(id, lattice_from_rows(m, rows)).second) fail(head.number, "repeated face");
    }
    std::vector<Lattice> lambda;
    for (const auto& face : fl->faces()) {
      if (face.id == fl->top()) {
        lambda.push_back(group);
      } else if (auto it = explicit_lattices.find(face.id); it != explicit_lattices.end()) {
        lambda.push_back(it->second);
      } else {
        Lattice l = lattice_intersect(face.span, group);
        for (const auto& [id, lat] : explicit_lattices)
          if (fl->is_subface(face.id, id)) l = lattice_intersect(l, lat);
        lambda.push_back(std::move(l));
      }
    }
    IntVector deg = degree ? *degree : grading_form(fl->cone());
    return DecoratedCone(fl, std::move(lambda), std::move(deg));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string write_model(const DecoratedCone& w) {
  const FaceLattice& fl = w.faces();
  const std::size_t m = w.ambient_dim();
  std::string s = "model " + std::to_string(m) + "\n";
  for (const auto& r : fl.cone().extreme_rays()) s += row_text(r) + "\n";
  s += "degree " + row_text(w.degree_form()) + "\n";
  s += "group\n";
  for (std::size_t i = 0; i < w.group().rank(); ++i) s += row_text(w.group().basis().row(i)) + "\n";
  // Faces from the top down: a lattice is written only when the default rule
  // (span, group and the written faces above) would not reproduce it.
  std::vector<bool> written(fl.size(), false);
  for (std::size_t id = fl.size(); id-- > 0;) {
    if (id == fl.top() || fl.face(id).dim == 0) continue;
    Lattice l = lattice_intersect(fl.face(id).span, w.group());
    for (std::size_t up = id + 1; up < fl.size(); ++up)
      if (written[up] && fl.is_subface(id, up)) l = lattice_intersect(l, w.lambda(up));
    written[id] = !(l == w.lambda(id));
  }
  for (std::size_t id = 0; id < fl.size(); ++id) {
    if (!written[id]) continue;
    s += "face";
    for (auto r : fl.face(id).rays.indices()) s += " " + std::to_string(r);
    s += "\n";
    for (std::size_t i = 0; i < w.lambda(id).rank(); ++i) s += row_text(w.lambda(id).basis().row(i)) + "\n";
  }
  return s;
}

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<std::vector<long>> facets;
  for (const auto& line : tokenize(text)) {
    std::vector<long> f;
    for (const auto& t : line.tokens) {
      Integer x = parse_integer(line, t);
      if (!x.fits_slong_p()) fail(line.number, "vertex label out of range");
      f.push_back(x.get_si());
    }
    facets.push_back(std::move(f));
  }
  if (facets.empty()) throw Error(ErrorKind::ParseError, "no facets");
  return SimplicialComplex::from_facets(facets);
}

}  // namespace semimon
