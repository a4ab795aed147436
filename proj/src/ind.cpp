#include "center_kit/ind.hpp"

#include <algorithm>

namespace ck {

int IndObject::total() const {
  int t = 0;
  for (int m : mult) t += m;
  return t;
}

IndMorphism IndMorphism::zero(const IndObject& dom, const IndObject& cod) {
  if (dom.mult.size() != cod.mult.size()) throw Error(codes::kShape, "ind-objects over different label sets");
  IndMorphism f{dom, cod, {}};
  for (size_t a = 0; a < dom.mult.size(); ++a) f.blocks.push_back(Mat::Zero(cod.mult[a], dom.mult[a]));
  return f;
}

IndMorphism IndMorphism::identity(const IndObject& x) {
  IndMorphism f = zero(x, x);
  for (auto& b : f.blocks) b.setIdentity();
  return f;
}

IndMorphism IndMorphism::dagger() const {
  IndMorphism f{cod, dom, {}};
  for (const auto& b : blocks) f.blocks.push_back(b.adjoint());
  return f;
}

IndMorphism IndMorphism::operator+(const IndMorphism& o) const {
  if (!(dom == o.dom) || !(cod == o.cod)) throw Error(codes::kShape, "sum of ind-morphisms of different shapes");
  IndMorphism f = *this;
  for (size_t a = 0; a < blocks.size(); ++a) f.blocks[a] += o.blocks[a];
  return f;
}

IndMorphism IndMorphism::operator-(const IndMorphism& o) const { return *this + o * cd(-1.0); }

IndMorphism IndMorphism::operator*(cd z) const {
  IndMorphism f = *this;
  for (auto& b : f.blocks) b *= z;
  return f;
}

IndMorphism compose(const IndMorphism& g, const IndMorphism& f) {
  if (!(g.dom == f.cod)) throw Error(codes::kCompose, "ind-morphism codomain does not match domain");
  IndMorphism h{f.dom, g.cod, {}};
  for (size_t a = 0; a < f.blocks.size(); ++a) h.blocks.push_back(g.blocks[a] * f.blocks[a]);
  return h;
}

IndMorphism dagger_ind(const IndMorphism& f) { return f.dagger(); }

IndObject direct_sum(const IndObject& a, const IndObject& b) {
  IndObject x = a;
  for (size_t i = 0; i < x.mult.size(); ++i) x.mult[i] += b.mult[i];
  return x;
}

IndMorphism direct_sum(const IndMorphism& f, const IndMorphism& g) {
  IndMorphism h{direct_sum(f.dom, g.dom), direct_sum(f.cod, g.cod), {}};
  for (size_t a = 0; a < f.blocks.size(); ++a) h.blocks.push_back(block_diag({f.blocks[a], g.blocks[a]}));
  return h;
}

double ind_norm(const IndMorphism& f) {
  double n = 0;
  for (const auto& b : f.blocks) n = std::max(n, op_norm(b));
  return n;
}

double max_diff(const IndMorphism& f, const IndMorphism& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod)) throw Error(codes::kShape, "max_diff of different shapes");
  double d = 0;
  for (size_t a = 0; a < f.blocks.size(); ++a) d = std::max(d, max_abs(Mat(f.blocks[a] - g.blocks[a])));
  return d;
}

double max_abs(const IndMorphism& f) {
  double d = 0;
  for (const auto& b : f.blocks) d = std::max(d, max_abs(b));
  return d;
}

IndObject tensor_ind(const FusionCategory& C, const IndObject& v1, const IndObject& v2) {
  IndObject x = IndObject::zero(C);
  for (int a = 0; a < C.rank(); ++a)
    for (int b = 0; b < C.rank(); ++b)
      for (int c = 0; c < C.rank(); ++c) x.mult[a] += C.N(b, c, a) * v1(b) * v2(c);
  return x;
}

cd hilb_inner_product(const FusionCategory& C, Label a, Label b, Label c, const Vec& xi, const Vec& eta) {
  if (xi.size() != eta.size()) throw Error(codes::kShape, "slot vectors of different lengths");
  return C.dim(a) / (C.dim(b) * C.dim(c)) * xi.dot(eta);
}

int Expansion::rows(Label s, int k) const { return cat->tree_count(words[k], s); }

IndObject Expansion::object() const {
  IndObject x = IndObject::zero(*cat);
  for (int s = 0; s < cat->rank(); ++s) x.mult[s] = dim(s);
  return x;
}

int Expansion::find(const std::vector<int>& tag) const {
  for (int k = 0; k < keys(); ++k)
    if (tags[k] == tag) return k;
  return -1;
}

Morphism Expansion::basis_vector(Label s, int r, int k) const {
  Word d = s == cat->unit() ? Word{} : Word{s};
  Morphism m(*cat, d, words[k]);
  m.block(s) = V[s].block(offset[s][k], r, rows(s, k), 1);
  return m;
}

namespace {

Expansion skeleton(const FusionCategory& C, std::vector<Word> words, std::vector<std::vector<int>> tags) {
  Expansion E;
  E.cat = &C;
  E.words = std::move(words);
  for (auto& w : E.words) w = C.normalize(w);
  E.tags = std::move(tags);
  E.offset.assign(C.rank(), {});
  E.V.assign(C.rank(), Mat());
  for (int s = 0; s < C.rank(); ++s) {
    int off = 0;
    for (const auto& w : E.words) {
      E.offset[s].push_back(off);
      off += C.tree_count(w, s);
    }
    E.V[s] = Mat::Identity(off, off);
  }
  return E;
}

int total_rows(const Expansion& E, Label s) {
  int n = 0;
  for (int k = 0; k < E.keys(); ++k) n += E.rows(s, k);
  return n;
}

std::vector<int> concat_tags(int a, const std::vector<int>& t) {
  std::vector<int> out{a};
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

}  // namespace

Expansion plain_expand(const FusionCategory& C, const IndObject& X) {
  std::vector<Word> words;
  std::vector<std::vector<int>> tags;
  for (int x = 0; x < C.rank(); ++x)
    for (int i = 0; i < X(x); ++i) {
      words.push_back(x == C.unit() ? Word{} : Word{x});
      tags.push_back({x, i});
    }
  return skeleton(C, words, tags);
}

Expansion word_expand(const FusionCategory& C, const Word& w) { return skeleton(C, {w}, {{}}); }

Expansion sandwich_expand(const Word& w1, const Expansion& E, const Word& w2) {
  const FusionCategory& C = *E.cat;
  std::vector<Word> words;
  for (const auto& w : E.words) words.push_back(C.concat(w1, w, w2));
  return skeleton(C, words, E.tags);
}

Expansion z_expand(const Expansion& E) {
  const FusionCategory& C = *E.cat;
  const int n = C.rank();
  std::vector<Word> words;
  std::vector<std::vector<int>> tags;
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < E.keys(); ++k) {
      words.push_back(C.concat({C.dual(a)}, E.words[k], {a}));
      tags.push_back(concat_tags(a, E.tags[k]));
    }
  Expansion Z = skeleton(C, words, tags);
  // Lift of each E-fiber vector through id_abar (x) - (x) id_a.
  for (int s = 0; s < n; ++s) {
    Mat V = Mat::Zero(total_rows(Z, s), Z.V[s].cols());
    int col = 0;
    for (int a = 0; a < n; ++a) {
      const Word ab{C.dual(a)}, aw{a};
      for (int y = 0; y < n; ++y) {
        const Word wy = y == C.unit() ? Word{} : Word{y};
        const int nt = C.tree_count(C.concat(ab, wy, aw), s);
        if (nt == 0) continue;
        for (int r = 0; r < E.dim(y); ++r) {
          std::vector<std::pair<int, Morphism>> lifted;
          for (int k = 0; k < E.keys(); ++k) {
            if (E.rows(y, k) == 0) continue;
            const Morphism bv = E.basis_vector(y, r, k);
            if (max_abs(bv) == 0) continue;
            lifted.emplace_back(k, tensor(id(C, ab), bv, id(C, aw)));
          }
          for (int t = 0; t < nt; ++t) {
            for (const auto& [k, lift] : lifted) {
              const int zk = a * E.keys() + k;
              const Mat& b = lift.block(s);
              V.block(Z.offset[s][zk], col, b.rows(), 1) = b.col(t);
            }
            ++col;
          }
        }
      }
    }
    if (col != V.cols()) throw Error(codes::kShape, "centralizer expansion is not full");
    Z.V[s] = V;
  }
  return Z;
}

Expansion tensor_expand(const Expansion& E1, const Expansion& E2) {
  const FusionCategory& C = *E1.cat;
  if (E2.cat != E1.cat) throw Error(codes::kCategory, "tensor of expansions over different categories");
  const int n = C.rank();
  std::vector<Word> words;
  std::vector<std::vector<int>> tags;
  for (int k1 = 0; k1 < E1.keys(); ++k1)
    for (int k2 = 0; k2 < E2.keys(); ++k2) {
      words.push_back(C.concat(E1.words[k1], E2.words[k2]));
      tags.push_back({k1, k2});
    }
  Expansion T = skeleton(C, words, tags);
  for (int s = 0; s < n; ++s) {
    Mat V = Mat::Zero(total_rows(T, s), T.V[s].cols());
    int col = 0;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int nv = C.N(b, c, s);
        if (nv == 0) continue;
        for (int i = 0; i < E1.dim(b); ++i)
          for (int j = 0; j < E2.dim(c); ++j) {
            std::vector<Morphism> vi, vj;
            for (int k1 = 0; k1 < E1.keys(); ++k1) vi.push_back(E1.basis_vector(b, i, k1));
            for (int k2 = 0; k2 < E2.keys(); ++k2) vj.push_back(E2.basis_vector(c, j, k2));
            for (int mu = 0; mu < nv; ++mu) {
              const Morphism v = Morphism::vertex(C, b, c, s, mu);
              for (int k1 = 0; k1 < E1.keys(); ++k1) {
                if (vi[k1].block(b).size() == 0 || max_abs(vi[k1]) == 0) continue;
                for (int k2 = 0; k2 < E2.keys(); ++k2) {
                  if (vj[k2].block(c).size() == 0 || max_abs(vj[k2]) == 0) continue;
                  const Morphism m = compose(tensor(vi[k1], vj[k2]), v);
                  const int tk = k1 * E2.keys() + k2;
                  V.block(T.offset[s][tk], col, T.rows(s, tk), 1) = m.block(s);
                }
              }
              ++col;
            }
          }
      }
    if (col != V.cols()) throw Error(codes::kShape, "tensor expansion is not full");
    T.V[s] = V;
  }
  return T;
}

Expansion direct_sum(const Expansion& A, const Expansion& B) {
  const FusionCategory& C = *A.cat;
  std::vector<Word> words = A.words;
  words.insert(words.end(), B.words.begin(), B.words.end());
  std::vector<std::vector<int>> tags;
  for (const auto& t : A.tags) tags.push_back(concat_tags(0, t));
  for (const auto& t : B.tags) tags.push_back(concat_tags(1, t));
  Expansion S = skeleton(C, words, tags);
  for (int s = 0; s < C.rank(); ++s) S.V[s] = block_diag({A.V[s], B.V[s]});
  return S;
}

IndMorphism realize(const Expansion& dom, const Expansion& cod, const Components& comp) {
  const FusionCategory& C = *dom.cat;
  IndMorphism f = IndMorphism::zero(dom.object(), cod.object());
  for (int s = 0; s < C.rank(); ++s) {
    if (dom.dim(s) == 0 || cod.dim(s) == 0) continue;
    Mat T = Mat::Zero(cod.V[s].rows(), dom.V[s].rows());
    for (const auto& [kk, m] : comp) {
      const auto [k, kp] = kk;
      if (m.dom() != dom.words[k] || m.cod() != cod.words[kp])
        throw Error(codes::kShape, "component " + C.word_string(m.dom()) + " -> " + C.word_string(m.cod()) +
                                       " does not match keys " + C.word_string(dom.words[k]) + " -> " +
                                       C.word_string(cod.words[kp]));
      const Mat& b = m.block(s);
      if (b.size() == 0) continue;
      T.block(cod.offset[s][kp], dom.offset[s][k], b.rows(), b.cols()) += b;
    }
    f.blocks[s] = cod.V[s].adjoint() * T * dom.V[s];
  }
  return f;
}

IndMorphism realize(const Expansion& dom, const Expansion& cod,
                    const std::function<std::vector<std::pair<int, Morphism>>(int)>& fn) {
  Components comp;
  for (int k = 0; k < dom.keys(); ++k)
    for (auto& [kp, m] : fn(k)) {
      auto key = std::make_pair(k, kp);
      auto it = comp.find(key);
      if (it == comp.end())
        comp.emplace(key, std::move(m));
      else
        it->second += m;
    }
  return realize(dom, cod, comp);
}

Components components(const Expansion& dom, const Expansion& cod, const IndMorphism& f, double drop) {
  const FusionCategory& C = *dom.cat;
  std::vector<Mat> T(C.rank());
  for (int s = 0; s < C.rank(); ++s) T[s] = cod.V[s] * f.blocks[s] * dom.V[s].adjoint();
  Components out;
  for (int k = 0; k < dom.keys(); ++k)
    for (int kp = 0; kp < cod.keys(); ++kp) {
      Morphism m(C, dom.words[k], cod.words[kp]);
      double mx = 0;
      for (int s = 0; s < C.rank(); ++s) {
        Mat& b = m.block(s);
        if (b.size() == 0) continue;
        b = T[s].block(cod.offset[s][kp], dom.offset[s][k], b.rows(), b.cols());
        mx = std::max(mx, max_abs(b));
      }
      if (mx > drop || drop < 0) out.emplace(std::make_pair(k, kp), std::move(m));
    }
  return out;
}

IndMorphism rebase(const Expansion& from, const Expansion& to) {
  if (from.words != to.words) throw Error(codes::kShape, "rebase between expansions with different keys");
  IndMorphism f = IndMorphism::zero(from.object(), to.object());
  for (int s = 0; s < from.cat->rank(); ++s) f.blocks[s] = to.V[s].adjoint() * from.V[s];
  return f;
}

IndMorphism tensor_ind_morphism(const Expansion& d1, const Expansion& c1, const IndMorphism& f,
                                const Expansion& d2, const Expansion& c2, const IndMorphism& g) {
  const Components cf = components(d1, c1, f), cg = components(d2, c2, g);
  Components out;
  for (const auto& [k1, m1] : cf)
    for (const auto& [k2, m2] : cg)
      out.emplace(std::make_pair(k1.first * d2.keys() + k2.first, k1.second * c2.keys() + k2.second),
                  tensor(m1, m2));
  return realize(tensor_expand(d1, d2), tensor_expand(c1, c2), out);
}

}  // namespace ck
