#include "center_kit/solve_center.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "center_kit/parallel.hpp"
#include "center_kit/rng.hpp"
#include "center_kit/tube.hpp"

namespace ck {

cd twist(const HalfBraiding& hb) {
  const FusionCategory& C = hb.category();
  const Expansion& M = hb.carrier;
  cd tr = 0.0;
  for (int s = 0; s < C.rank(); ++s) {
    if (M.dim(s) == 0) continue;
    const Components e = hb.components(s);
    for (int k = 0; k < M.keys(); ++k) {
      const Word w = C.normalize(M.words[k]);
      if (!(w == C.normalize({s}))) continue;
      auto it = e.find({k, k});
      if (it != e.end()) tr += trace(it->second);
    }
  }
  return tr / qdim(hb);
}

namespace {

struct Piece {
  std::vector<Mat> V, W;  // range and left inverse per fiber
  IndObject support;
};

std::vector<Mat> sandwich(const Piece& p, const IndMorphism& f, const Piece& q) {
  std::vector<Mat> out;
  for (size_t s = 0; s < f.blocks.size(); ++s) out.push_back(p.W[s] * f.blocks[s] * q.V[s]);
  return out;
}

// Eigenvalue clusters of a random element of the algebra, across all fibers.
std::vector<Piece> split(const std::vector<IndMorphism>& basis, const IndObject& obj, Mode mode, Rng& rng,
                         double gap) {
  const int n = static_cast<int>(obj.mult.size());
  IndMorphism h = IndMorphism::zero(obj, obj);
  for (const auto& b : basis) h = h + b * rng.complex_normal();
  if (mode == Mode::Unitary) h = h + h.dagger();
  std::vector<cd> reps;
  std::vector<Piece> pieces;
  for (int s = 0; s < n; ++s) {
    const int m = obj(s);
    if (m == 0) continue;
    Mat vecs, inv;
    Vec vals;
    if (mode == Mode::Unitary) {
      Eigen::SelfAdjointEigenSolver<Mat> es(h.blocks[s]);
      vecs = es.eigenvectors();
      vals = es.eigenvalues().cast<cd>();
      inv = vecs.adjoint();
    } else {
      Eigen::ComplexEigenSolver<Mat> es(h.blocks[s]);
      vecs = es.eigenvectors();
      vals = es.eigenvalues();
      inv = vecs.inverse();
    }
    for (int i = 0; i < m; ++i) {
      size_t r = 0;
      while (r < reps.size() && std::abs(reps[r] - vals(i)) >= gap) ++r;
      if (r == reps.size()) {
        reps.push_back(vals(i));
        Piece p;
        p.support = IndObject{std::vector<int>(n, 0)};
        p.V.assign(n, Mat());
        p.W.assign(n, Mat());
        for (int t = 0; t < n; ++t) {
          p.V[t] = Mat::Zero(obj(t), 0);
          p.W[t] = Mat::Zero(0, obj(t));
        }
        pieces.push_back(std::move(p));
      }
      Piece& p = pieces[r];
      p.V[s].conservativeResize(Eigen::NoChange, p.V[s].cols() + 1);
      p.V[s].col(p.V[s].cols() - 1) = vecs.col(i);
      p.W[s].conservativeResize(p.W[s].rows() + 1, Eigen::NoChange);
      p.W[s].row(p.W[s].rows() - 1) = inv.row(i);
      ++p.support.mult[s];
    }
  }
  return pieces;
}

// Rank of {p b p : b in basis}.
int corner_dim(const std::vector<IndMorphism>& basis, const Piece& p, const Piece& q) {
  std::vector<Vec> cols;
  for (const auto& b : basis) {
    const auto blocks = sandwich(p, b, q);
    std::vector<cd> v;
    for (const auto& m : blocks)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) v.push_back(m(i, j));
    cols.push_back(Eigen::Map<Vec>(v.data(), static_cast<Eigen::Index>(v.size())));
  }
  if (cols.empty() || cols[0].size() == 0) return 0;
  Mat A(cols[0].size(), static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) A.col(static_cast<Eigen::Index>(k)) = cols[k];
  const Vec sv = Eigen::BDCSVD<Mat>(A).singularValues().cast<cd>();
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (std::abs(sv(k)) > 1e-8) ++r;
  return r;
}

HalfBraiding restrict(const HalfBraiding& P, const Piece& p, Mode mode) {
  const FusionCategory& C = P.category();
  const Expansion M = plain_expand(C, p.support);
  IndMorphism V = IndMorphism::zero(p.support, P.carrier.object());
  IndMorphism W = IndMorphism::zero(P.carrier.object(), p.support);
  for (int s = 0; s < C.rank(); ++s) {
    V.blocks[s] = p.V[s];
    W.blocks[s] = p.W[s];
  }
  const IndMorphism tau = compose(compose(W, epsilon(P)), Z_morphism(M, P.carrier, V));
  return psi({M, tau, mode});
}

}  // namespace

CenterReport solve_center(const FusionCategory& C, Mode mode, std::uint64_t seed, bool cross_check) {
  const int n = C.rank();
  IndObject all = IndObject::zero(C);
  for (int a = 0; a < n; ++a) all.mult[a] = 1;
  const Expansion X = plain_expand(C, all);
  const HalfBraiding P = free_half_braiding(X, mode);
  const IndObject obj = P.carrier.object();
  const std::vector<IndMorphism> A = intertwiners(P, P).basis;

  CenterReport rep;
  rep.algebra_dim = static_cast<int>(A.size());
  constexpr double gap = 1e-6;
  Rng rng(seed, 0x63656e);
  std::vector<Piece> pieces;
  for (rep.attempts = 1; rep.attempts <= 8; ++rep.attempts) {
    pieces = split(A, obj, mode, rng, gap);
    bool minimal = true;
    for (const auto& p : pieces)
      if (corner_dim(A, p, p) != 1) minimal = false;
    if (minimal) break;
    pieces.clear();
  }
  if (pieces.empty()) {
    std::ostringstream os;
    os << "could not resolve End of the free half-braiding into minimal idempotents (eigenvalue gap " << gap << ", "
       << rep.attempts - 1 << " attempts)";
    throw Error(codes::kDecomposition, os.str());
  }

  // Group pieces into isomorphism classes: p ~ q iff pAq != 0.
  std::vector<int> cls(pieces.size(), -1);
  std::vector<int> reps;
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (size_t r = 0; r < reps.size() && cls[i] < 0; ++r)
      if (pieces[reps[r]].support == pieces[i].support && corner_dim(A, pieces[reps[r]], pieces[i]) > 0)
        cls[i] = static_cast<int>(r);
    if (cls[i] < 0) {
      cls[i] = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
    }
  }

  rep.simples.resize(reps.size());
  parallel_for(static_cast<int>(reps.size()), [&](int r) {
    CenterSimple& cs = rep.simples[r];
    cs.hb = restrict(P, pieces[reps[r]], mode);
    cs.support = pieces[reps[r]].support;
    cs.qdim = qdim(cs.hb);
    cs.twist = twist(cs.hb);
    cs.multiplicity = static_cast<int>(std::count(cls.begin(), cls.end(), r));
    cs.end_dim = static_cast<int>(intertwiners(cs.hb, cs.hb).basis.size());
    cs.unitary_residual = unitarity_residual(cs.hb);
    cs.braid_residual = check_half_braiding(cs.hb).braid;
    const ModuleCheck mc = check_module(phi(cs.hb));
    cs.module_residual = std::max(mc.unit, mc.assoc);
  });

  auto arg = [](cd z) {
    double t = std::arg(z);
    if (t < -1e-9) t += 2 * std::numbers::pi;
    return std::round(t * 1e6);
  };
  std::stable_sort(rep.simples.begin(), rep.simples.end(), [&](const CenterSimple& x, const CenterSimple& y) {
    const double qx = std::round(x.qdim * 1e6), qy = std::round(y.qdim * 1e6);
    if (qx != qy) return qx < qy;
    if (x.support.mult != y.support.mult) return x.support.mult < y.support.mult;
    return arg(x.twist) < arg(y.twist);
  });

  for (const auto& s : rep.simples) rep.dim_sum += s.qdim * s.qdim;
  rep.global_dim_sq = C.global_dim() * C.global_dim();

  for (size_t i = 0; i < rep.simples.size(); ++i)
    for (size_t j = 0; j < rep.simples.size(); ++j)
      if (i != j && rep.simples[i].support == rep.simples[j].support)
        rep.orthogonality = std::max(
            rep.orthogonality, static_cast<double>(intertwiners(rep.simples[i].hb, rep.simples[j].hb).basis.size()));

  if (cross_check) {
    TubeAlgebra T(C);
    rep.tube_dim = T.dim();
    rep.tube_center_dim = static_cast<int>(T.center().cols());
    rep.tube_associativity = T.associativity_residual();
    std::vector<int> mine;
    for (const auto& s : rep.simples) mine.push_back(s.multiplicity);
    std::sort(mine.begin(), mine.end());
    rep.tube_blocks_match = T.block_sizes(seed) == mine;
  }
  return rep;
}

}  // namespace ck
