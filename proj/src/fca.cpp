#include "gcat/fca.hpp"

#include <algorithm>

#include "gcat/error.hpp"

namespace gcat {

InducedSubcomplex point_fibre(const SubdividedMap& f, const Simplex& tau) {
  const auto& target = f.target.original;
  if (!target.contains(tau)) throw MalformedInput("target simplex is not in " + target.name());
  const auto& source = f.source.original;
  const SimplicialMap original(source, target,
                               std::vector<Vertex>(f.map.vertex_map().begin(),
                                                   f.map.vertex_map().begin() + source.vertex_count()));
  VertexSet s;
  for (std::size_t i = 0; i < source.simplices().size(); ++i)
    if (original.image(source.simplices()[i]) == tau) s.push_back(static_cast<Vertex>(i));
  return full_subcomplex(f.source.subdivided, s);
}

InducedSubcomplex point_fibre(const SimplicialMap& f, const Simplex& tau) {
  return point_fibre(subdivide_map(f), tau);
}

namespace {

FcaResult run_fca(const SimplicialMap& f, const GroupClass& c, int k, const Budget& budget,
                  const CoverValidation* pieces, const VertexCover* cover) {
  FcaResult out;
  const auto& target = f.target();
  if (target.dim() > k) {
    out.verdict = Verdict{Answer::No, {"dimension gate: target has dimension " + std::to_string(target.dim()) +
                                       " > " + std::to_string(k)}};
    return out;
  }
  auto sd = subdivide_map(f);
  PieceValidator validator(sd.source.subdivided, c, budget);
  out.verdict.answer = Answer::Yes;
  for (const auto& tau : target.simplices()) {
    FibreReport r;
    r.target_simplex = tau;
    r.fibre = point_fibre(sd, tau);
    r.overall = validator.validate(r.fibre.to_parent);
    if (r.overall.answer == Answer::Unknown && pieces && c.subgroup_closed()) {
      // the fibre over the interior of tau lies in the open-star union of piece tau[0]
      const auto i = static_cast<std::size_t>(tau[0]);
      if (pieces->pieces[i].answer == Answer::Yes) {
        r.overall.answer = Answer::Yes;
        r.overall.trace.push_back("fibre lies in the star union of validated piece " + std::to_string(i) +
                                  " " + std::to_string(cover->pieces[i].size()) + " vertices; subgroup closure");
      }
    }
    if (r.overall.answer == Answer::No) out.verdict.answer = Answer::No;
    else if (r.overall.answer == Answer::Unknown && out.verdict.answer == Answer::Yes)
      out.verdict.answer = Answer::Unknown;
    std::string label = "[";
    for (std::size_t j = 0; j < tau.size(); ++j) label += (j ? "," : "") + std::to_string(tau[j]);
    out.verdict.trace.push_back("fibre over " + label + "]: " + to_string(r.overall.answer));
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace

FcaResult check_fca(const SimplicialMap& f, const GroupClass& c, int k, const Budget& budget) {
  return run_fca(f, c, k, budget, nullptr, nullptr);
}

FcaWitness cover_to_fca_witness(const VertexCover& partition, const GroupClass& c, const Budget& budget) {
  if (!partition.partition || !is_partition(partition.pieces))
    throw UnsupportedInput("FCA witness needs a partition cover");
  auto nerve = multiplicity_and_nerve(partition);
  auto validation = validate_cover(partition, c, budget);
  const int k = nerve.multiplicity - 1;
  auto fca = run_fca(*nerve.index_map, c, k, budget, &validation, &partition);
  return FcaWitness{*nerve.index_map, k, std::move(validation), std::move(fca)};
}

VertexCover fca_to_cover(const SimplicialMap& f) {
  auto sd = subdivide_map(f);
  const auto& x = f.source();
  std::vector<VertexSet> pieces(static_cast<std::size_t>(std::max(f.target().dim() + 1, 0)));
  for (std::size_t i = 0; i < x.simplices().size(); ++i)
    pieces[f.image(x.simplices()[i]).size() - 1].push_back(static_cast<Vertex>(i));
  std::erase_if(pieces, [](const VertexSet& p) { return p.empty(); });
  return VertexCover::make(sd.source.subdivided, std::move(pieces), true);
}

}  // namespace gcat
