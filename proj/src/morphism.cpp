#include "center_kit/morphism.hpp"

#include <cmath>

namespace ck {

Morphism::Morphism(const FusionCategory& C, Word dom, Word cod)
    : cat_(&C), dom_(C.normalize(dom)), cod_(C.normalize(cod)) {
  const TreeBasis& D = C.trees(dom_);
  const TreeBasis& K = C.trees(cod_);
  blocks_.reserve(C.rank());
  for (int s = 0; s < C.rank(); ++s) blocks_.push_back(Mat::Zero(K.size(s), D.size(s)));
}

Morphism Morphism::identity(const FusionCategory& C, const Word& w) {
  Morphism m(C, w, w);
  for (auto& b : m.blocks_) b.setIdentity();
  return m;
}

Morphism Morphism::tree(const FusionCategory& C, const Word& w, int s, int t) {
  Word d = s == C.unit() ? Word{} : Word{s};
  Morphism m(C, d, w);
  m.blocks_[s](t, 0) = 1.0;
  return m;
}

Morphism Morphism::vertex(const FusionCategory& C, Label a, Label b, Label c, int mu) {
  if (mu < 0 || mu >= C.N(a, b, c)) throw Error(codes::kShape, "vertex does not exist");
  const Word w = C.normalize({a, b});
  Tree t;
  if (w.size() == 2) {
    t.e = {a, c};
    t.m = {0, mu};
  } else if (w.size() == 1) {
    t.e = {c};
    t.m = {0};
  }
  return tree(C, w, c, C.trees(w).index(c, t));
}

Morphism Morphism::scalar(const FusionCategory& C, cd z) {
  Morphism m(C, {}, {});
  m.blocks_[C.unit()](0, 0) = z;
  return m;
}

int Morphism::size() const {
  int n = 0;
  for (const auto& b : blocks_) n += static_cast<int>(b.size());
  return n;
}

Vec Morphism::coefficients() const {
  Vec v(size());
  Eigen::Index k = 0;
  for (const auto& b : blocks_)
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j) v(k++) = b(i, j);
  return v;
}

void Morphism::set_coefficients(const Vec& v) {
  if (v.size() != size()) throw Error(codes::kShape, "coefficient vector has wrong length");
  Eigen::Index k = 0;
  for (auto& b : blocks_)
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j) b(i, j) = v(k++);
}

cd Morphism::scalar_value() const {
  const Mat& b = blocks_[cat_->unit()];
  if (b.rows() != 1 || b.cols() != 1) throw Error(codes::kShape, "morphism is not a scalar");
  return b(0, 0);
}

Morphism Morphism::dagger() const {
  Morphism m;
  m.cat_ = cat_;
  m.dom_ = cod_;
  m.cod_ = dom_;
  for (const auto& b : blocks_) m.blocks_.push_back(b.adjoint());
  return m;
}

void Morphism::check_same(const Morphism& o) const {
  if (cat_ != o.cat_) throw Error(codes::kCategory, "morphisms over different categories");
  if (dom_ != o.dom_ || cod_ != o.cod_) throw Error(codes::kShape, "morphisms have different shapes");
}

Morphism Morphism::operator+(const Morphism& o) const {
  Morphism m = *this;
  m += o;
  return m;
}

Morphism& Morphism::operator+=(const Morphism& o) {
  check_same(o);
  for (size_t s = 0; s < blocks_.size(); ++s) blocks_[s] += o.blocks_[s];
  return *this;
}

Morphism Morphism::operator-(const Morphism& o) const { return *this + o * cd(-1.0); }

Morphism Morphism::operator*(cd z) const {
  Morphism m = *this;
  for (auto& b : m.blocks_) b *= z;
  return m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.category_ptr() != f.category_ptr()) throw Error(codes::kCategory, "compose across categories");
  const FusionCategory& C = f.category();
  if (g.dom() != f.cod())
    throw Error(codes::kCompose,
                "codomain " + C.word_string(f.cod()) + " does not match domain " + C.word_string(g.dom()));
  Morphism m(C, f.dom(), g.cod());
  for (int s = 0; s < C.rank(); ++s) m.block(s) = g.block(s) * f.block(s);
  return m;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  if (g.category_ptr() != f.category_ptr()) throw Error(codes::kCategory, "tensor across categories");
  const FusionCategory& C = f.category();
  if (g.dom().empty() && g.cod().empty()) return f * g.scalar_value();
  if (f.dom().empty() && f.cod().empty()) return g * f.scalar_value();
  const TensorChange& D = C.tensor_change(f.dom(), g.dom());
  const TensorChange& K = C.tensor_change(f.cod(), g.cod());
  Morphism m(C, C.concat(f.dom(), g.dom()), C.concat(f.cod(), g.cod()));
  for (int s = 0; s < C.rank(); ++s) {
    const auto& ds = D.split[s];
    const auto& ks = K.split[s];
    if (ds.empty() || ks.empty()) continue;
    Mat M = Mat::Zero(static_cast<Eigen::Index>(ks.size()), static_cast<Eigen::Index>(ds.size()));
    for (size_t i = 0; i < ks.size(); ++i)
      for (size_t j = 0; j < ds.size(); ++j) {
        const auto& a = ks[i];
        const auto& b = ds[j];
        if (a.s1 != b.s1 || a.s2 != b.s2 || a.v != b.v) continue;
        M(i, j) = f.block(a.s1)(a.t1, b.t1) * g.block(a.s2)(a.t2, b.t2);
      }
    m.block(s) = K.U[s] * M * D.U[s].adjoint();
  }
  return m;
}

Morphism tensor(const Morphism& f, const Morphism& g, const Morphism& h) { return tensor(tensor(f, g), h); }

Morphism dagger(const Morphism& f) { return f.dagger(); }

Morphism id(const FusionCategory& C, const Word& w) { return Morphism::identity(C, w); }

namespace {

Morphism raw_cup(const FusionCategory& C, Label a) {
  if (a == C.unit()) return Morphism::scalar(C, 1.0);
  return Morphism::vertex(C, C.dual(a), a, C.unit()) * std::sqrt(C.dim(a));
}

Morphism raw_cap(const FusionCategory& C, Label a) {
  if (a == C.unit()) return Morphism::scalar(C, 1.0);
  return Morphism::vertex(C, a, C.dual(a), C.unit()) * std::sqrt(C.dim(a));
}

void check_label(const FusionCategory& C, Label a) {
  if (a < 0 || a >= C.rank()) throw Error(codes::kLabelUnknown, "label index out of range");
}

}  // namespace

cd FusionCategory::cap_phase(Label a) const {
  std::call_once(cache_->cap_once, [this] { compute_cap_phases(); });
  return cache_->cap_phase[a];
}

void FusionCategory::compute_cap_phases() const {
  std::vector<cd> p(rank(), 1.0);
  for (int a = 0; a < rank(); ++a) {
    if (a == unit_) continue;
    const Word wa{a};
    Morphism z = compose(tensor(raw_cap(*this, a).dagger(), Morphism::identity(*this, wa)),
                         tensor(Morphism::identity(*this, wa), raw_cup(*this, a)));
    p[a] = 1.0 / std::conj(z.block(a)(0, 0));
  }
  cache_->cap_phase = std::move(p);
}

// Labels with a > abar take their pair from abar so that dualizing twice is the identity.
Morphism cup(const FusionCategory& C, Label a) {
  check_label(C, a);
  if (a > C.dual(a)) return cap(C, C.dual(a));
  return raw_cup(C, a);
}

Morphism cap(const FusionCategory& C, Label a) {
  check_label(C, a);
  if (a > C.dual(a)) return cup(C, C.dual(a));
  return raw_cap(C, a) * C.cap_phase(a);
}

Morphism cup(const FusionCategory& C, const Word& u0) {
  const Word u = C.normalize(u0);
  if (u.empty()) return Morphism::scalar(C, 1.0);
  const Label last = u.back();
  if (u.size() == 1) return cup(C, last);
  const Word rest(u.begin(), u.end() - 1);
  return compose(tensor(id(C, {C.dual(last)}), cup(C, rest), id(C, {last})), cup(C, last));
}

Morphism cap(const FusionCategory& C, const Word& u0) {
  const Word u = C.normalize(u0);
  if (u.empty()) return Morphism::scalar(C, 1.0);
  const Label first = u.front();
  if (u.size() == 1) return cap(C, first);
  const Word rest(u.begin() + 1, u.end());
  return compose(tensor(id(C, {first}), cap(C, rest), id(C, {C.dual(first)})), cap(C, first));
}

namespace {

Word strip_prefix(const FusionCategory& C, const Word& w, const Word& u) {
  if (w.size() < u.size() || !std::equal(u.begin(), u.end(), w.begin()))
    throw Error(codes::kShape, C.word_string(u) + " is not a left factor of " + C.word_string(w));
  return Word(w.begin() + static_cast<long>(u.size()), w.end());
}

Word strip_suffix(const FusionCategory& C, const Word& w, const Word& u) {
  if (w.size() < u.size() || !std::equal(u.rbegin(), u.rend(), w.rbegin()))
    throw Error(codes::kShape, C.word_string(u) + " is not a right factor of " + C.word_string(w));
  return Word(w.begin(), w.end() - static_cast<long>(u.size()));
}

}  // namespace

Morphism frobenius_left(const Morphism& f, const Word& u0) {
  const FusionCategory& C = f.category();
  const Word u = C.normalize(u0);
  const Word u1 = strip_prefix(C, f.dom(), u);
  return compose(tensor(id(C, C.bar(u)), f), tensor(cup(C, u), id(C, u1)));
}

Morphism frobenius_left_inverse(const Morphism& g, const Word& u0) {
  const FusionCategory& C = g.category();
  const Word u = C.normalize(u0);
  const Word u2 = strip_prefix(C, g.cod(), C.bar(u));
  return compose(tensor(cap(C, u).dagger(), id(C, u2)), tensor(id(C, u), g));
}

Morphism frobenius_right(const Morphism& f, const Word& u0) {
  const FusionCategory& C = f.category();
  const Word u = C.normalize(u0);
  const Word u1 = strip_suffix(C, f.dom(), u);
  return compose(tensor(f, id(C, C.bar(u))), tensor(id(C, u1), cap(C, u)));
}

Morphism frobenius_right_inverse(const Morphism& g, const Word& u0) {
  const FusionCategory& C = g.category();
  const Word u = C.normalize(u0);
  const Word u2 = strip_suffix(C, g.cod(), C.bar(u));
  return compose(tensor(id(C, u2), cup(C, u).dagger()), tensor(g, id(C, u)));
}

Morphism dual_morphism(const Morphism& f) {
  const FusionCategory& C = f.category();
  const Word b1 = C.bar(f.dom()), b2 = C.bar(f.cod());
  return compose(compose(tensor(id(C, b1), cap(C, f.cod()).dagger()), tensor(id(C, b1), f, id(C, b2))),
                 tensor(cup(C, f.dom()), id(C, b2)));
}

std::vector<Morphism> onb(const FusionCategory& C, Label b, const Word& w) {
  check_label(C, b);
  std::vector<Morphism> out;
  const TreeBasis& T = C.trees(w);
  for (int t = 0; t < T.size(b); ++t) out.push_back(Morphism::tree(C, w, b, t));
  return out;
}

cd trace(const Morphism& f) {
  if (f.dom() != f.cod()) throw Error(codes::kShape, "trace of a non-endomorphism");
  const FusionCategory& C = f.category();
  cd t = 0;
  for (int s = 0; s < C.rank(); ++s) t += C.dim(s) * f.block(s).trace();
  return t;
}

cd trace_inner(const Morphism& f, const Morphism& g) { return trace(compose(g.dagger(), f)); }

double norm(const Morphism& f) {
  double n = 0;
  for (const auto& b : f.blocks()) n = std::max(n, op_norm(b));
  return n;
}

double max_diff(const Morphism& f, const Morphism& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw Error(codes::kShape, "max_diff of different shapes");
  double d = 0;
  for (size_t s = 0; s < f.blocks().size(); ++s) d = std::max(d, max_abs(Mat(f.block(s) - g.block(s))));
  return d;
}

double max_abs(const Morphism& f) {
  double d = 0;
  for (const auto& b : f.blocks()) d = std::max(d, max_abs(b));
  return d;
}

}  // namespace ck
