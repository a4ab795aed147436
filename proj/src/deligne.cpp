#include "center_kit/deligne.hpp"

namespace ck {

namespace {

int position(const std::vector<FChannel>& b, const FChannel& x) {
  for (size_t k = 0; k < b.size(); ++k)
    if (b[k].mid == x.mid && b[k].i == x.i && b[k].j == x.j) return static_cast<int>(k);
  throw Error(codes::kShape, "channel not in F basis");
}

}  // namespace

FusionCategory monoidal_opposite(const FusionCategory& C) {
  const int n = C.rank();
  std::vector<int> fusion(n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) fusion[(a * n + b) * n + c] = C.N(b, a, c);
  // A left tree of C^mp is a right tree of C with reversed letters, and conversely.
  std::map<FKey, Mat> F;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const Mat& G = C.F(c, b, a, d);
          if (G.size() == 0) continue;
          const auto GL = C.left_basis(c, b, a, d);
          const auto GR = C.right_basis(c, b, a, d);
          Mat M(G.rows(), G.cols());
          // mp left (e, alpha, beta) is C right (e, alpha, beta); mp right (f, mu, nu) is C left.
          for (size_t i = 0; i < GR.size(); ++i)
            for (size_t j = 0; j < GL.size(); ++j) M(i, j) = std::conj(G(j, i));
          F[{a, b, c, d}] = M;
        }
  return FusionCategory(C.name() + "_mp", C.labels(), C.unit(), C.duals(), C.dims(), fusion, F);
}

FusionCategory deligne_product(const FusionCategory& A, const FusionCategory& B) {
  const int na = A.rank(), nb = B.rank(), n = na * nb;
  std::vector<std::string> labels;
  std::vector<int> dual(n);
  std::vector<double> dims(n);
  for (int l = 0; l < na; ++l)
    for (int r = 0; r < nb; ++r) {
      const int p = l * nb + r;
      labels.push_back(A.label_name(l) + "|" + B.label_name(r));
      dual[p] = A.dual(l) * nb + B.dual(r);
      dims[p] = A.dim(l) * B.dim(r);
    }
  std::vector<int> fusion(n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        fusion[(a * n + b) * n + c] =
            A.N(a / nb, b / nb, c / nb) * B.N(a % nb, b % nb, c % nb);
  auto Nb = [&](int x, int y, int z) { return B.N(x % nb, y % nb, z % nb); };

  FusionCategory shell(A.name() + "_x_" + B.name(), labels, A.unit() * nb + B.unit(), dual, dims, fusion,
                       [&] {
                         std::map<FKey, Mat> F;
                         for (int a = 0; a < n; ++a)
                           for (int b = 0; b < n; ++b)
                             for (int c = 0; c < n; ++c)
                               for (int d = 0; d < n; ++d) {
                                 const Mat& FA = A.F(a / nb, b / nb, c / nb, d / nb);
                                 const Mat& FB = B.F(a % nb, b % nb, c % nb, d % nb);
                                 if (FA.size() == 0 || FB.size() == 0) continue;
                                 const auto AL = A.left_basis(a / nb, b / nb, c / nb, d / nb);
                                 const auto AR = A.right_basis(a / nb, b / nb, c / nb, d / nb);
                                 const auto BL = B.left_basis(a % nb, b % nb, c % nb, d % nb);
                                 const auto BR = B.right_basis(a % nb, b % nb, c % nb, d % nb);
                                 // Enumerate the product bases in their canonical order.
                                 std::vector<std::pair<int, int>> L, R;
                                 for (int e = 0; e < n; ++e) {
                                   const int n1 = Nb(a, b, e), n2 = Nb(e, c, d);
                                   const int m1 = A.N(a / nb, b / nb, e / nb) * n1;
                                   const int m2 = A.N(e / nb, c / nb, d / nb) * n2;
                                   for (int al = 0; al < m1; ++al)
                                     for (int be = 0; be < m2; ++be)
                                       L.push_back({position(AL, {e / nb, al / n1, be / n2}),
                                                    position(BL, {e % nb, al % n1, be % n2})});
                                 }
                                 for (int f = 0; f < n; ++f) {
                                   const int n1 = Nb(b, c, f), n2 = Nb(a, f, d);
                                   const int m1 = A.N(b / nb, c / nb, f / nb) * n1;
                                   const int m2 = A.N(a / nb, f / nb, d / nb) * n2;
                                   for (int mu = 0; mu < m1; ++mu)
                                     for (int nu = 0; nu < m2; ++nu)
                                       R.push_back({position(AR, {f / nb, mu / n1, nu / n2}),
                                                    position(BR, {f % nb, mu % n1, nu % n2})});
                                 }
                                 Mat M(static_cast<Eigen::Index>(L.size()), static_cast<Eigen::Index>(R.size()));
                                 for (size_t i = 0; i < L.size(); ++i)
                                   for (size_t j = 0; j < R.size(); ++j)
                                     M(i, j) = FA(L[i].first, R[j].first) * FB(L[i].second, R[j].second);
                                 F[{a, b, c, d}] = M;
                               }
                         return F;
                       }());
  return shell;
}

MultiplicationFunctor::MultiplicationFunctor(const FusionCategory& C, const FusionCategory& P) : C_(C), P_(P) {
  if (P.rank() != C.rank() * C.rank()) throw Error(codes::kCategory, "product category does not match");
}

Word MultiplicationFunctor::on_object(const Word& w0) const {
  const Word w = P_.normalize(w0);
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(split_label(C_, *it).left);
  for (Label p : w) out.push_back(split_label(C_, p).right);
  return C_.normalize(out);
}

Morphism MultiplicationFunctor::tree_image(const Word& w, int s, int t) const {
  const Tree& T = P_.trees(w).roots[s][t];
  if (w.empty()) return Morphism::scalar(C_, 1.0);
  // Left factor: right-comb tree of the reversed word, built from the root inward.
  const auto first = split_label(C_, w[0]);
  Morphism L = id(C_, {first.left}), R = id(C_, {first.right});
  for (size_t k = 1; k < w.size(); ++k) {
    const auto prev = split_label(C_, T.e[k - 1]);
    const auto cur = split_label(C_, T.e[k]);
    const auto x = split_label(C_, w[k]);
    const int nr = C_.N(prev.right, x.right, cur.right);
    const int m = T.m[k];
    L = compose(tensor(id(C_, {x.left}), L), Morphism::vertex(C_, x.left, prev.left, cur.left, m / nr));
    R = compose(tensor(R, id(C_, {x.right})), Morphism::vertex(C_, prev.right, x.right, cur.right, m % nr));
  }
  return tensor(L, R);
}

Morphism MultiplicationFunctor::on_morphism(const Morphism& f) const {
  if (f.category_ptr() != &P_) throw Error(codes::kCategory, "morphism is not over the product category");
  const Word dom = on_object(f.dom()), cod = on_object(f.cod());
  Morphism out(C_, dom, cod);
  const TreeBasis& TD = P_.trees(f.dom());
  const TreeBasis& TK = P_.trees(f.cod());
  for (int s = 0; s < P_.rank(); ++s) {
    const Mat& M = f.block(s);
    if (M.size() == 0) continue;
    std::vector<Morphism> A, B;
    for (int i = 0; i < TK.size(s); ++i) A.push_back(tree_image(f.cod(), s, i));
    for (int j = 0; j < TD.size(s); ++j) B.push_back(tree_image(f.dom(), s, j).dagger());
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j)
        if (M(i, j) != cd(0.0)) out += compose(A[i], B[j]) * M(i, j);
  }
  return out;
}

}  // namespace ck
