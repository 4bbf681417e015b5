#include "lefschetz/lifting.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace lefschetz {

long long fiber_genus(long long sheets, long long branch_points) {
  if (sheets < 1) throw InputError("sheet count must be positive");
  const long long twice = branch_points - 2 * sheets + 2;
  if (twice < 0 || twice % 2 != 0)
    throw InputError("d - 2N + 2 must be even and non-negative (N=" + std::to_string(sheets) +
                     ", d=" + std::to_string(branch_points) + ")");
  return twice / 2;
}

bool is_liftable(const BraidWord& w, const BranchData& branch) {
  branch.validate();
  if (w.strands() != branch.transpositions.size())
    throw InputError("braid has " + std::to_string(w.strands()) + " strands but branch data has " +
                     std::to_string(branch.transpositions.size()) + " entries");
  const auto moved = hurwitz_act(branch.transpositions, w, [](const Permutation& p) { return p.inverse(); });
  return moved == branch.transpositions;
}

CoverModel::CoverModel(const BranchData& branch) : branch_(branch) {
  branch_.validate();
  const std::size_t n = sheets();
  const std::size_t d = branch_points();
  if (d == 0) throw InputError("cover model needs at least one branch point");
  if (!branch_.transitive()) throw InputError("branch data is not transitive: cover is disconnected");
  FreeWord total(d);
  for (std::size_t i = 1; i <= d; ++i) total *= FreeWord::generator(d, i);
  if (!branch_.evaluate(total).is_identity())
    throw InputError("theta(x_1 ... x_d) must be the identity (cover unbranched over infinity)");
  genus_ = fiber_genus(static_cast<long long>(n), static_cast<long long>(d));

  const auto& th = branch_.transpositions;
  auto image = [&](std::size_t s0, std::size_t k) -> std::size_t { return th[k](static_cast<std::uint32_t>(s0 + 1)) - 1; };
  auto preimage = [&](std::size_t s0, std::size_t k) -> std::size_t {
    return th[k].inverse()(static_cast<std::uint32_t>(s0 + 1)) - 1;
  };

  // rotation at each sheet: out(s,k), in(preimage,k) for k = 1..d
  const std::size_t edges = n * d;
  std::vector<std::vector<int>> rotation(n);
  std::vector<int> sigma(2 * edges), origin(2 * edges);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < d; ++k) {
      rotation[s].push_back(static_cast<int>(2 * edge_id(s, k)));
      rotation[s].push_back(static_cast<int>(2 * edge_id(preimage(s, k), k) + 1));
    }
    const auto& rot = rotation[s];
    for (std::size_t p = 0; p < rot.size(); ++p) {
      sigma[static_cast<std::size_t>(rot[p])] = rot[(p + 1) % rot.size()];
      origin[static_cast<std::size_t>(rot[p])] = static_cast<int>(s);
    }
  }
  // faces: next(dart) = sigma(reverse(dart))
  std::vector<bool> used(2 * edges, false);
  for (std::size_t start = 0; start < 2 * edges; ++start) {
    if (used[start]) continue;
    std::vector<int> cyc;
    std::size_t cur = start;
    while (!used[cur]) {
      used[cur] = true;
      cyc.push_back(static_cast<int>(cur));
      cur = static_cast<std::size_t>(sigma[cur ^ 1u]);
    }
    faces_.push_back(std::move(cyc));
  }
  if (euler_characteristic() != 2 - 2 * genus_)
    throw InputError("cell model Euler characteristic " + std::to_string(euler_characteristic()) +
                     " disagrees with genus " + std::to_string(genus_));

  // spanning tree by BFS from sheet 1
  std::vector<bool> seen(n, false);
  std::vector<FreeWord> word_to(n, FreeWord(d));
  std::vector<bool> tree(edges, false);
  struct TreeStep {
    std::size_t child;
    int parent_dart;
    int child_dart;
  };
  std::vector<TreeStep> steps;
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t v = image(u, k);
      if (!seen[v]) {
        seen[v] = true;
        const std::size_t e = edge_id(u, k);
        tree[e] = true;
        word_to[v] = word_to[u] * FreeWord::generator(d, k + 1);
        steps.push_back({v, static_cast<int>(2 * e), static_cast<int>(2 * e + 1)});
        queue.push_back(v);
      }
      const std::size_t t = preimage(u, k);
      if (!seen[t]) {
        seen[t] = true;
        const std::size_t e = edge_id(t, k);
        tree[e] = true;
        word_to[t] = word_to[u] * FreeWord::generator(d, k + 1, -1);
        steps.push_back({t, static_cast<int>(2 * e + 1), static_cast<int>(2 * e)});
        queue.push_back(t);
      }
    }
  }

  loop_index_.assign(edges, -1);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t e = edge_id(s, k);
      if (tree[e]) continue;
      loop_index_[e] = static_cast<long long>(cycle_words_.size());
      cycle_words_.push_back(word_to[s] * FreeWord::generator(d, k + 1) * word_to[image(s, k)].inverse());
    }
  const std::size_t m = cycle_words_.size();

  boundaries_ = IntMatrix(m, faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (int dart : faces_[f]) {
      const long long li = loop_index_[static_cast<std::size_t>(dart) / 2];
      if (li >= 0) boundaries_(static_cast<std::size_t>(li), f) += (dart % 2 == 0) ? 1 : -1;
    }

  const SmithForm snf = smith_normal_form(boundaries_);
  for (const auto& inv : snf.invariants)
    if (inv != 1) throw InputError("cell model has torsion in H_1; branch data inconsistent");
  const std::size_t r = snf.rank();
  const std::size_t h = m - r;
  if (h != static_cast<std::size_t>(2 * genus_))
    throw InputError("cell model H_1 rank " + std::to_string(h) + " differs from 2g");
  projection_ = IntMatrix(h, m);
  section_ = IntMatrix(m, h);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      projection_(a, b) = snf.left(r + a, b);
      section_(b, a) = snf.left_inverse(b, r + a);
    }

  // contract the tree: splice each child's rotation into the merged one
  std::vector<int> merged = rotation[0];
  for (const auto& st : steps) {
    const auto pos = std::find(merged.begin(), merged.end(), st.parent_dart);
    const auto& rot = rotation[st.child];
    const auto cpos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), st.child_dart) - rot.begin());
    std::vector<int> spliced;
    for (std::size_t q = 1; q < rot.size(); ++q) spliced.push_back(rot[(cpos + q) % rot.size()]);
    const auto at = merged.erase(pos);
    merged.insert(at, spliced.begin(), spliced.end());
  }
  std::vector<std::size_t> place(2 * edges, 0);
  for (std::size_t p = 0; p < merged.size(); ++p) place[static_cast<std::size_t>(merged[p])] = p;
  const std::size_t len = merged.size();
  std::vector<std::size_t> loop_edge(m);
  for (std::size_t e = 0; e < edges; ++e)
    if (loop_index_[e] >= 0) loop_edge[static_cast<std::size_t>(loop_index_[e])] = e;
  loop_form_ = IntMatrix(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t a_out = place[2 * loop_edge[a]];
    const std::size_t a_in = place[2 * loop_edge[a] + 1];
    auto inside = [&](std::size_t p) { return (p + len - a_out) % len < (a_in + len - a_out) % len; };
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const bool out_inside = inside(place[2 * loop_edge[b]]);
      const bool in_inside = inside(place[2 * loop_edge[b] + 1]);
      if (out_inside == in_inside) continue;
      loop_form_(a, b) = out_inside ? 1 : -1;
    }
  }
  form_ = section_.transposed() * loop_form_ * section_;
}

long long CoverModel::euler_characteristic() const {
  return static_cast<long long>(vertex_count()) - static_cast<long long>(edge_count()) +
         static_cast<long long>(face_count());
}

std::vector<long long> CoverModel::lift_edges(const FreeWord& w, std::size_t sheet0, std::size_t* end0) const {
  if (w.rank() != branch_points()) throw InputError("word rank differs from branch point count");
  if (sheet0 >= sheets()) throw InputError("sheet out of range");
  std::vector<long long> v(cycle_words_.size(), 0);
  std::size_t c = sheet0;
  const auto& th = branch_.transpositions;
  for (Letter l : w.letters()) {
    const std::size_t k = static_cast<std::size_t>(std::abs(l)) - 1;
    if (l > 0) {
      const long long li = loop_index_[edge_id(c, k)];
      if (li >= 0) ++v[static_cast<std::size_t>(li)];
      c = th[k](static_cast<std::uint32_t>(c + 1)) - 1;
    } else {
      const std::size_t t = th[k].inverse()(static_cast<std::uint32_t>(c + 1)) - 1;
      const long long li = loop_index_[edge_id(t, k)];
      if (li >= 0) --v[static_cast<std::size_t>(li)];
      c = t;
    }
  }
  if (end0) *end0 = c;
  return v;
}

IntVector CoverModel::loop_vector(const FreeWord& w, std::size_t sheet) const {
  std::size_t end = 0;
  const auto v = lift_edges(w, sheet - 1, &end);
  if (end != sheet - 1) throw InputError("lift of " + w.to_string() + " from sheet " + std::to_string(sheet) + " is not closed");
  return IntVector(v.begin(), v.end());
}

IntVector CoverModel::homology_class(const FreeWord& w, std::size_t sheet) const {
  return projection_.apply(loop_vector(w, sheet));
}

HomologyAction CoverModel::action(const BraidWord& w, const WordLimits& limits) const {
  if (!is_liftable(w, branch_)) throw InputError("braid " + w.to_string() + " is not liftable");
  const FreeAutomorphism a = artin_automorphism(w, limits);
  const std::size_t m = cycle_words_.size();
  IntMatrix cols(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    const IntVector v = loop_vector(a.apply(cycle_words_[k], limits), 1);
    for (std::size_t r = 0; r < m; ++r) cols(r, k) = v[r];
  }
  HomologyAction out;
  out.matrix = projection_ * cols * section_;
  // preimages of infinity: outer faces bounded by lifts of x_1 ... x_d
  const std::size_t d = branch_points();
  FreeWord total(d);
  for (std::size_t i = 1; i <= d; ++i) total *= FreeWord::generator(d, i);
  const FreeWord moved = a.apply(total, limits);
  std::vector<std::uint32_t> images(sheets());
  for (std::size_t s = 0; s < sheets(); ++s) {
    std::size_t end = 0;
    lift_edges(moved, s, &end);
    if (end != s) throw InputError("lift does not preserve the outer faces");
    images[s] = static_cast<std::uint32_t>(s + 1);
  }
  out.marked_points = Permutation::from_images(images);
  return out;
}

HomologyAction lift_homology_action(const BraidWord& w, const BranchData& branch) {
  return CoverModel(branch).action(w);
}

bool is_symplectic(const IntMatrix& m, const IntMatrix& j) { return m.transposed() * j * m == j; }

PencilMonodromy pencil_monodromy(const BraidedCurveSpec& spec, const BranchData& branch) {
  const CurveReport cr = verify_braided_curve(spec);
  if (!cr.valid) throw InputError("curve spec does not factor the full twist");
  const ThetaReport tr = theta_compatible(spec, branch);
  if (!tr.compatible) throw InputError("branch data is not compatible with the curve");
  const CoverModel model(branch);
  PencilMonodromy out;
  out.genus = model.genus();
  out.intersection_form = model.intersection_form();
  const std::size_t h = static_cast<std::size_t>(2 * model.genus());
  out.product = IntMatrix::identity(h);
  for (std::size_t k = 0; k < spec.factors.size(); ++k) {
    const auto& f = spec.factors[k];
    const BraidWord q = f.braid();
    if (!is_liftable(q, branch)) throw InputError("factor " + std::to_string(k + 1) + " is not liftable");
    PencilFactor pf;
    pf.index = k + 1;
    pf.exponent = f.exponent;
    pf.matrix = model.action(q).matrix;
    pf.trivial = pf.matrix.is_identity();
    if (!is_symplectic(pf.matrix, out.intersection_form)) out.all_symplectic = false;
    if (f.exponent == 1) {
      out.product = out.product * pf.matrix;
      out.tangencies.push_back(std::move(pf));
    } else {
      if (!pf.trivial) out.singular_trivial = false;
      out.singular.push_back(std::move(pf));
    }
  }
  out.product_is_identity = out.product.is_identity();
  return out;
}

}  // namespace lefschetz
