#include "jinf/profile_io.hpp"

namespace jinf {

std::vector<Perm> file_generators(ProfileFile const &file)
{
  std::vector<Perm> gens;
  for (auto const &g : file.generators)
    gens.emplace_back(std::vector<Point>(g.begin(), g.end()));
  return gens;
}

PermGroup file_group(ProfileFile const &file) { return PermGroup(file.degree, file_generators(file)); }

VaProfile file_va_profile(ProfileFile const &file, std::size_t order_gate)
{
  if (file.kind != ProfileKind::va && file.kind != ProfileKind::matrep)
    throw ProfileError(0, "kind", "expected a va or matrep profile, found " + to_string(file.kind));
  auto gens = file_generators(file);
  bool padic = !file.matrices.empty() && file.matrices.front().form == MatrixForm::padic;
  for (auto const &b : file.matrices)
    if ((b.form == MatrixForm::padic) != padic)
      throw ProfileError(0, "matrix", "p-adic and exact matrices cannot be mixed");
  long p = file.ring < 0 ? 0 : file.ring;
  try {
    if (padic) {
      long n = *file.precision;
      Integer bound = 1;
      for (long k = 0; k < n; ++k)
        bound *= p;
      std::vector<PadicMat> mats;
      for (auto const &b : file.matrices) {
        std::size_t d = b.residues.size();
        PadicMat m(d, d, Padic::zero(p));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            if (b.residues[i][j] >= bound)
              throw ProfileError(0, "matrix", "residue " + to_string(b.residues[i][j]) + " exceeds p^precision");
            m(i, j) = Padic::from_residue(b.residues[i][j], p, n);
          }
        mats.push_back(std::move(m));
      }
      auto rep = rep_from_data(file.degree, gens, mats, order_gate);
      return make_profile(std::move(rep), file.name);
    }
    std::vector<RatMat> mats;
    for (auto const &b : file.matrices)
      mats.push_back(b.form == MatrixForm::rational ? b.rational : NumberRing(*file.modulus).expand(b.ring_entries));
    auto rep = rep_from_data(file.degree, gens, mats, order_gate);
    auto prof = make_profile(std::move(rep), p, file.name);
    if (file.ring < 0)
      std::get<MatRep>(prof.action).ring = "Q";
    if (file.precision)
      prof.precision = *file.precision;
    return prof;
  } catch (RelationViolation const &e) {
    throw ProfileError(0, "matrix", e.what());
  } catch (std::invalid_argument const &e) {
    throw ProfileError(0, "matrix", e.what());
  }
}

WreathShadow file_wreath(ProfileFile const &file)
{
  if (file.kind != ProfileKind::wreath)
    throw ProfileError(0, "kind", "expected a wreath profile, found " + to_string(file.kind));
  PermGroup top = file_group(file);
  if (!top.is_transitive())
    throw ProfileError(0, "gen", "the top group must be transitive");
  try {
    return make_wreath_shadow(file.factor, top);
  } catch (std::invalid_argument const &e) {
    throw ProfileError(0, "factor", e.what());
  }
}

ProfileFile permgroup_file(PermGroup const &g, std::string name)
{
  ProfileFile f;
  f.kind = ProfileKind::permgroup;
  f.name = std::move(name);
  f.degree = g.degree();
  for (auto const &x : g.generators())
    f.generators.emplace_back(x.images().begin(), x.images().end());
  return f;
}

ProfileFile profile_file(VaProfile const &profile)
{
  ProfileFile f;
  f.kind = ProfileKind::va;
  f.name = profile.name;
  f.ring = profile.p;
  f.degree = profile.group().degree();
  if (auto const *prep = std::get_if<PadicRep>(&profile.action)) {
    long n = Padic::kExact;
    for (auto const &m : prep->images)
      n = std::min(n, min_precision(m));
    f.precision = n;
    for (auto const &g : prep->generators)
      f.generators.emplace_back(g.images().begin(), g.images().end());
    for (auto const &m : prep->images) {
      MatrixBlock b;
      b.form = MatrixForm::padic;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Integer> row;
        for (std::size_t j = 0; j < m.cols(); ++j)
          row.push_back(m(i, j).residue(n));
        b.residues.push_back(std::move(row));
      }
      f.matrices.push_back(std::move(b));
    }
    return f;
  }
  auto const &rep = std::get<MatRep>(profile.action);
  if (profile.p != 0 && profile.precision != kDefaultPrecision)
    f.precision = profile.precision;
  for (auto const &g : rep.generators)
    f.generators.emplace_back(g.images().begin(), g.images().end());
  for (auto const &m : rep.images) {
    MatrixBlock b;
    b.rational = m;
    f.matrices.push_back(std::move(b));
  }
  return f;
}

} // namespace jinf
