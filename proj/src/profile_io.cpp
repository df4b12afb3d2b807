#include "jinf/profile_io.hpp"

#include <sstream>

namespace jinf {

namespace {

constexpr char const *kHeader = "jinf-profile";

struct Line
{
  std::size_t number = 0;
  std::string keyword;
  std::vector<std::string> fields;
  std::string rest;
};

std::vector<Line> tokenize(std::string const &text)
{
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (!raw.empty() && raw.back() == '\r')
      raw.pop_back();
    std::istringstream ls(raw);
    Line line;
    line.number = n;
    if (!(ls >> line.keyword) || line.keyword.front() == '#')
      continue;
    std::getline(ls >> std::ws, line.rest);
    std::istringstream fs(line.rest);
    for (std::string f; fs >> f;)
      line.fields.push_back(f);
    out.push_back(std::move(line));
  }
  return out;
}

long parse_long(Line const &l, std::string const &s, std::string const &field)
{
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size())
      return v;
  } catch (std::exception const &) {
  }
  throw ProfileError(l.number, field, "expected an integer, found '" + s + "'");
}

Rational parse_entry(Line const &l, std::string const &s, std::string const &field)
{
  try {
    return parse_rational(s);
  } catch (std::invalid_argument const &e) {
    throw ProfileError(l.number, field, e.what());
  }
}

long parse_ring(Line const &l)
{
  if (l.fields.size() != 1)
    throw ProfileError(l.number, "ring", "expected one of Q, Z, Z<p>");
  std::string const &r = l.fields[0];
  if (r == "Q")
    return -1;
  if (r == "Z")
    return 0;
  if (r.size() > 1 && r[0] == 'Z') {
    long p = parse_long(l, r.substr(1), "ring");
    if (p > 1 && is_prime(p))
      return p;
  }
  throw ProfileError(l.number, "ring", "unknown ring '" + r + "'");
}

ProfileKind parse_kind(Line const &l)
{
  std::string k = l.fields.empty() ? "" : l.fields[0];
  for (auto kind : {ProfileKind::va, ProfileKind::matrep, ProfileKind::permgroup, ProfileKind::wreath})
    if (k == to_string(kind) && l.fields.size() == 1)
      return kind;
  throw ProfileError(l.number, "kind", "unknown kind '" + l.rest + "'");
}

std::string ring_text(long ring) { return ring < 0 ? "Q" : ring == 0 ? "Z" : "Z" + std::to_string(ring); }

} // namespace

ProfileError::ProfileError(std::size_t line, std::string field, std::string const &what)
: std::runtime_error((line == 0 ? std::string("end of input") : "line " + std::to_string(line)) + ", " + field + ": " +
                     what),
  line_(line), field_(std::move(field))
{
}

std::string to_string(ProfileKind k)
{
  switch (k) {
  case ProfileKind::va: return "va";
  case ProfileKind::matrep: return "matrep";
  case ProfileKind::permgroup: return "permgroup";
  case ProfileKind::wreath: return "wreath";
  }
  return "va";
}

ProfileFile parse_profile(std::string const &text)
{
  auto lines = tokenize(text);
  if (lines.empty())
    throw ProfileError(0, "header", "empty profile");
  ProfileFile f;
  auto const &h = lines.front();
  if (h.keyword != kHeader || h.fields.size() != 1)
    throw ProfileError(h.number, "header", "expected '" + std::string(kHeader) + " <version>'");
  f.version = static_cast<int>(parse_long(h, h.fields[0], "header"));
  if (f.version != kProfileFormatVersion)
    throw ProfileError(h.number, "header", "unsupported format version " + h.fields[0]);

  bool have_kind = false, have_ring = false, have_degree = false;
  std::size_t k = 1;
  for (; k < lines.size(); ++k) {
    auto const &l = lines[k];
    if (l.keyword == "kind") {
      f.kind = parse_kind(l);
      have_kind = true;
    } else if (l.keyword == "name") {
      f.name = l.rest;
    } else if (l.keyword == "ring") {
      f.ring = parse_ring(l);
      have_ring = true;
    } else if (l.keyword == "precision") {
      if (l.fields.size() != 1)
        throw ProfileError(l.number, "precision", "expected one integer");
      long n = parse_long(l, l.fields[0], "precision");
      if (n < 1)
        throw ProfileError(l.number, "precision", "must be positive");
      f.precision = n;
    } else if (l.keyword == "modulus") {
      QPoly m;
      for (auto const &s : l.fields)
        m.push_back(parse_entry(l, s, "modulus"));
      try {
        NumberRing ring(m);
        f.modulus = ring.modulus();
      } catch (std::invalid_argument const &e) {
        throw ProfileError(l.number, "modulus", e.what());
      }
    } else if (l.keyword == "factor") {
      f.factor = l.rest;
    } else if (l.keyword == "degree") {
      if (l.fields.size() != 1)
        throw ProfileError(l.number, "degree", "expected one integer");
      long n = parse_long(l, l.fields[0], "degree");
      if (n < 1)
        throw ProfileError(l.number, "degree", "must be positive");
      f.degree = static_cast<std::size_t>(n);
      have_degree = true;
    } else if (l.keyword == "gen") {
      if (!have_degree)
        throw ProfileError(l.number, "gen", "generator before degree");
      if (l.fields.size() != f.degree)
        throw ProfileError(l.number, "gen", "expected " + std::to_string(f.degree) + " images");
      std::vector<std::size_t> g;
      std::vector<bool> hit(f.degree, false);
      for (auto const &s : l.fields) {
        long x = parse_long(l, s, "gen");
        if (x < 0 || static_cast<std::size_t>(x) >= f.degree || hit[x])
          throw ProfileError(l.number, "gen", "not a permutation of 0.." + std::to_string(f.degree - 1));
        hit[x] = true;
        g.push_back(static_cast<std::size_t>(x));
      }
      f.generators.push_back(std::move(g));
    } else {
      break;
    }
  }
  if (!have_kind)
    throw ProfileError(0, "kind", "missing kind");
  if (!have_degree || f.generators.empty())
    throw ProfileError(0, "gen", "missing degree or generators");
  bool needs_matrices = f.kind == ProfileKind::va || f.kind == ProfileKind::matrep;
  if (needs_matrices && !have_ring)
    throw ProfileError(0, "ring", "missing ring");
  if (f.kind == ProfileKind::va && f.ring < 0)
    throw ProfileError(0, "ring", "a va profile needs ring Z or Z<p>");
  if (f.kind == ProfileKind::wreath && f.factor.empty())
    throw ProfileError(0, "factor", "missing factor");

  // matrix blocks; each block's row count fixes the dimension
  std::size_t dim = 0;
  while (k < lines.size()) {
    auto const &l = lines[k];
    MatrixBlock b;
    if (l.keyword == "matrix")
      b.form = MatrixForm::rational;
    else if (l.keyword == "padic-matrix")
      b.form = MatrixForm::padic;
    else if (l.keyword == "ring-matrix")
      b.form = MatrixForm::number_ring;
    else
      throw ProfileError(l.number, l.keyword, "unexpected line");
    if (!needs_matrices)
      throw ProfileError(l.number, l.keyword, "matrices are not allowed for kind " + to_string(f.kind));
    if (b.form == MatrixForm::padic && (f.ring <= 0 || !f.precision))
      throw ProfileError(l.number, l.keyword, "p-adic matrices need ring Z<p> and a precision");
    if (b.form == MatrixForm::number_ring && !f.modulus)
      throw ProfileError(l.number, l.keyword, "ring matrices need a modulus");
    ++k;
    std::vector<Line const *> rows;
    while (k < lines.size() && lines[k].keyword != "matrix" && lines[k].keyword != "padic-matrix" &&
           lines[k].keyword != "ring-matrix")
      rows.push_back(&lines[k++]);
    if (rows.empty())
      throw ProfileError(l.number, l.keyword, "matrix without rows");
    std::size_t n = rows.size();
    std::size_t eff = b.form == MatrixForm::number_ring ? n * (f.modulus->size() - 1) : n;
    if (dim == 0)
      dim = eff;
    if (eff != dim)
      throw ProfileError(l.number, l.keyword, "matrix dimensions differ between generators");
    std::vector<RatVec> rational_rows;
    for (auto const *r : rows) {
      std::vector<std::string> entries{r->keyword};
      entries.insert(entries.end(), r->fields.begin(), r->fields.end());
      if (entries.size() != n)
        throw ProfileError(r->number, "row", "expected " + std::to_string(n) + " entries");
      if (b.form == MatrixForm::rational) {
        RatVec row;
        for (auto const &e : entries)
          row.push_back(parse_entry(*r, e, "row"));
        rational_rows.push_back(std::move(row));
      } else if (b.form == MatrixForm::padic) {
        std::vector<Integer> row;
        for (auto const &e : entries) {
          Rational q = parse_entry(*r, e, "row");
          if (denominator(q) != 1 || q < 0)
            throw ProfileError(r->number, "row", "p-adic residues are nonnegative integers");
          row.push_back(numerator(q));
        }
        b.residues.push_back(std::move(row));
      } else {
        std::vector<QPoly> row;
        for (auto const &e : entries) {
          QPoly c;
          std::stringstream ss(e);
          for (std::string part; std::getline(ss, part, ',');)
            c.push_back(parse_entry(*r, part, "row"));
          row.push_back(NumberRing(*f.modulus).reduce(c));
        }
        b.ring_entries.push_back(std::move(row));
      }
    }
    if (b.form == MatrixForm::rational)
      b.rational = RatMat::from_rows(rational_rows);
    f.matrices.push_back(std::move(b));
  }
  if (needs_matrices && f.matrices.size() != f.generators.size())
    throw ProfileError(0, "matrix", "expected one matrix per generator, found " + std::to_string(f.matrices.size()));
  return f;
}

std::string emit_profile(ProfileFile const &f)
{
  std::ostringstream out;
  out << kHeader << ' ' << f.version << '\n';
  out << "kind " << to_string(f.kind) << '\n';
  if (!f.name.empty())
    out << "name " << f.name << '\n';
  if (f.kind == ProfileKind::va || f.kind == ProfileKind::matrep)
    out << "ring " << ring_text(f.ring) << '\n';
  if (f.precision)
    out << "precision " << *f.precision << '\n';
  if (f.modulus) {
    out << "modulus";
    for (auto const &c : *f.modulus)
      out << ' ' << to_string(c);
    out << '\n';
  }
  if (f.kind == ProfileKind::wreath)
    out << "factor " << f.factor << '\n';
  out << "degree " << f.degree << '\n';
  for (auto const &g : f.generators) {
    out << "gen";
    for (auto x : g)
      out << ' ' << x;
    out << '\n';
  }
  for (auto const &b : f.matrices) {
    switch (b.form) {
    case MatrixForm::rational:
      out << "matrix\n";
      for (std::size_t i = 0; i < b.rational.rows(); ++i) {
        for (std::size_t j = 0; j < b.rational.cols(); ++j)
          out << (j ? " " : "") << to_string(b.rational(i, j));
        out << '\n';
      }
      break;
    case MatrixForm::padic:
      out << "padic-matrix\n";
      for (auto const &row : b.residues) {
        for (std::size_t j = 0; j < row.size(); ++j)
          out << (j ? " " : "") << to_string(row[j]);
        out << '\n';
      }
      break;
    case MatrixForm::number_ring:
      out << "ring-matrix\n";
      for (auto const &row : b.ring_entries) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          out << (j ? " " : "");
          if (row[j].empty())
            out << '0';
          for (std::size_t c = 0; c < row[j].size(); ++c)
            out << (c ? "," : "") << to_string(row[j][c]);
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

} // namespace jinf
