#include "center_kit/fusion_category.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ck {

int TreeBasis::index(int s, const Tree& t) const {
  auto it = lookup[s].find(t);
  if (it == lookup[s].end()) throw Error(codes::kShape, "tree not in basis");
  return it->second;
}

FusionCategory::FusionCategory(std::string name, std::vector<std::string> labels, int unit, std::vector<int> dual,
                               std::vector<double> dims, std::vector<int> fusion, std::map<FKey, Mat> F)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      unit_(unit),
      dual_(std::move(dual)),
      dims_(std::move(dims)),
      fusion_(std::move(fusion)),
      F_(std::move(F)),
      cache_(std::make_shared<Cache>()) {
  check_structure();
}

Label FusionCategory::label(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) throw Error(codes::kLabelUnknown, "unknown label '" + name + "'");
  return static_cast<Label>(it - labels_.begin());
}

double FusionCategory::global_dim() const {
  double s = 0;
  for (double d : dims_) s += d * d;
  return s;
}

void FusionCategory::check_structure() {
  const int n = rank();
  if (n == 0) throw Error(codes::kFusionInvalid, "empty label set");
  if (unit_ < 0 || unit_ >= n) throw Error(codes::kUnitMissing, "unit label not in label set");
  if (static_cast<int>(dual_.size()) != n) throw Error(codes::kDualNotInvolutive, "dual map has wrong size");
  if (static_cast<int>(dims_.size()) != n) throw Error(codes::kDimInvalid, "dimension list has wrong size");
  if (static_cast<int>(fusion_.size()) != n * n * n) throw Error(codes::kFusionInvalid, "fusion table has wrong size");
  for (int a = 0; a < n; ++a) {
    if (dual_[a] < 0 || dual_[a] >= n) throw Error(codes::kDualNotInvolutive, "dual of " + labels_[a] + " out of range");
    if (dual_[dual_[a]] != a) throw Error(codes::kDualNotInvolutive, "dual is not an involution at " + labels_[a]);
  }
  if (dual_[unit_] != unit_) throw Error(codes::kDualNotInvolutive, "dual of the unit is not the unit");
  for (int a = 0; a < n; ++a) {
    if (!(dims_[a] > 0)) throw Error(codes::kDimInvalid, "nonpositive dimension for " + labels_[a]);
    if (std::abs(dims_[a] - dims_[dual_[a]]) > 1e-9 * dims_[a])
      throw Error(codes::kDimInvalid, "d_a differs from d_abar for " + labels_[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      int delta = a == c ? 1 : 0;
      if (N(a, unit_, c) != delta || N(unit_, a, c) != delta)
        throw Error(codes::kFusionInvalid, "unit does not fuse trivially with " + labels_[a]);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (N(a, b, c) < 0) throw Error(codes::kFusionInvalid, "negative multiplicity");
        if (N(a, b, c) != N(dual_[b], dual_[a], dual_[c]))
          throw Error(codes::kFusionInvalid, "N[a][b][c] != N[bbar][abar][cbar] at (" + labels_[a] + "," + labels_[b] +
                                                 "," + labels_[c] + ")");
        if (N(a, b, c) > 1) multiplicity_free_ = false;
      }
  for (int a = 0; a < n; ++a)
    if (N(a, dual_[a], unit_) != 1) throw Error(codes::kFusionInvalid, "a abar does not contain the unit once");

  pointed_ = true;
  for (int a = 0; a < n && pointed_; ++a) {
    if (std::abs(dims_[a] - 1.0) > 1e-12) pointed_ = false;
    for (int b = 0; b < n && pointed_; ++b) {
      int s = 0;
      for (int c = 0; c < n; ++c) s += N(a, b, c);
      if (s != 1) pointed_ = false;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const auto L = left_basis(a, b, c, d);
          const auto R = right_basis(a, b, c, d);
          if (L.size() != R.size())
            throw Error(codes::kFusionInvalid, "associativity of the fusion rules fails at (" + labels_[a] + "," +
                                                   labels_[b] + "," + labels_[c] + ";" + labels_[d] + ")");
          const FKey key{a, b, c, d};
          auto it = F_.find(key);
          if (L.empty()) {
            if (it != F_.end()) F_.erase(it);
            continue;
          }
          const auto sz = static_cast<Eigen::Index>(L.size());
          const bool trivial = a == unit_ || b == unit_ || c == unit_;
          if (it == F_.end()) {
            if (trivial || pointed_) {
              F_[key] = Mat::Identity(sz, sz);
              continue;
            }
            throw Error(codes::kFMissing, "missing F entry for (" + labels_[a] + "," + labels_[b] + "," + labels_[c] +
                                              ";" + labels_[d] + ")");
          }
          if (it->second.rows() != sz || it->second.cols() != sz)
            throw Error(codes::kFShape, "F block has wrong shape at (" + labels_[a] + "," + labels_[b] + "," +
                                            labels_[c] + ";" + labels_[d] + ")");
          if (trivial && (it->second - Mat::Identity(sz, sz)).cwiseAbs().maxCoeff() > 1e-12)
            throw Error(codes::kFShape, "F entries involving the unit must be trivial");
        }
}

const Mat& FusionCategory::F(Label a, Label b, Label c, Label d) const {
  auto it = F_.find(FKey{a, b, c, d});
  if (it == F_.end()) {
    static const Mat empty(0, 0);
    return empty;
  }
  return it->second;
}

std::vector<FChannel> FusionCategory::left_basis(Label a, Label b, Label c, Label d) const {
  std::vector<FChannel> out;
  for (int e = 0; e < rank(); ++e)
    for (int al = 0; al < N(a, b, e); ++al)
      for (int be = 0; be < N(e, c, d); ++be) out.push_back({e, al, be});
  return out;
}

std::vector<FChannel> FusionCategory::right_basis(Label a, Label b, Label c, Label d) const {
  std::vector<FChannel> out;
  for (int f = 0; f < rank(); ++f)
    for (int mu = 0; mu < N(b, c, f); ++mu)
      for (int nu = 0; nu < N(a, f, d); ++nu) out.push_back({f, mu, nu});
  return out;
}

Word FusionCategory::normalize(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (Label x : w) {
    if (x < 0 || x >= rank()) throw Error(codes::kLabelUnknown, "label index out of range");
    if (x != unit_) out.push_back(x);
  }
  return out;
}

Word FusionCategory::bar(const Word& w) const {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = dual_[x];
  return normalize(out);
}

Word FusionCategory::concat(const Word& a, const Word& b) const {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalize(out);
}

Word FusionCategory::concat(const Word& a, const Word& b, const Word& c) const { return concat(concat(a, b), c); }

std::string FusionCategory::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "." : "") << labels_[w[i]];
  return os.str();
}

namespace {

void extend_trees(const FusionCategory& C, const Word& w, size_t k, Tree& cur, std::vector<std::vector<Tree>>& out) {
  if (k == w.size()) {
    out[cur.e.back()].push_back(cur);
    return;
  }
  const int prev = cur.e.back();
  for (int s = 0; s < C.rank(); ++s)
    for (int m = 0; m < C.N(prev, w[k], s); ++m) {
      cur.e.push_back(s);
      cur.m.push_back(m);
      extend_trees(C, w, k + 1, cur, out);
      cur.e.pop_back();
      cur.m.pop_back();
    }
}

}  // namespace

const TreeBasis& FusionCategory::trees(const Word& w0) const {
  const Word w = normalize(w0);
  {
    std::lock_guard<std::mutex> g(cache_->mu);
    auto it = cache_->trees.find(w);
    if (it != cache_->trees.end()) return *it->second;
  }
  auto tb = std::make_unique<TreeBasis>();
  tb->word = w;
  tb->roots.assign(rank(), {});
  tb->lookup.assign(rank(), {});
  if (w.empty()) {
    tb->roots[unit_].push_back(Tree{});
  } else {
    Tree cur;
    cur.e.push_back(w[0]);
    cur.m.push_back(0);
    extend_trees(*this, w, 1, cur, tb->roots);
  }
  for (int s = 0; s < rank(); ++s)
    for (int i = 0; i < static_cast<int>(tb->roots[s].size()); ++i) tb->lookup[s][tb->roots[s][i]] = i;
  std::lock_guard<std::mutex> g(cache_->mu);
  auto [it, inserted] = cache_->trees.emplace(w, std::move(tb));
  return *it->second;
}

namespace {

std::array<int, 5> split_key(const SplitIndex& x) { return {x.s1, x.s2, x.t1, x.t2, x.v}; }

}  // namespace

const TensorChange& FusionCategory::tensor_change(const Word& a0, const Word& b0) const {
  const Word w1 = normalize(a0), w2 = normalize(b0);
  const auto key = std::make_pair(w1, w2);
  {
    std::lock_guard<std::mutex> g(cache_->mu);
    auto it = cache_->changes.find(key);
    if (it != cache_->changes.end()) return *it->second;
  }
  const int n = rank();
  const TreeBasis& T1 = trees(w1);
  const TreeBasis& T2 = trees(w2);
  const Word w = concat(w1, w2);
  const TreeBasis& T = trees(w);
  auto tc = std::make_unique<TensorChange>();
  tc->split.assign(n, {});
  tc->U.assign(n, Mat());
  for (int s = 0; s < n; ++s)
    for (int s1 = 0; s1 < n; ++s1)
      for (int s2 = 0; s2 < n; ++s2) {
        const int nv = N(s1, s2, s);
        if (nv == 0) continue;
        for (int t1 = 0; t1 < T1.size(s1); ++t1)
          for (int t2 = 0; t2 < T2.size(s2); ++t2)
            for (int v = 0; v < nv; ++v) tc->split[s].push_back({s1, s2, t1, t2, v});
      }

  const TensorChange* sub = nullptr;
  Word w2p;
  if (!w1.empty() && w2.size() >= 2) {
    w2p.assign(w2.begin(), w2.end() - 1);
    sub = &tensor_change(w1, w2p);
  }
  std::vector<std::map<std::array<int, 5>, int>> sub_index;
  if (sub) {
    sub_index.assign(n, {});
    for (int e = 0; e < n; ++e)
      for (int i = 0; i < static_cast<int>(sub->split[e].size()); ++i) sub_index[e][split_key(sub->split[e][i])] = i;
  }
  const TreeBasis* T2p = sub ? &trees(w2p) : nullptr;
  const TreeBasis* T12p = sub ? &trees(concat(w1, w2p)) : nullptr;

  for (int s = 0; s < n; ++s) {
    const auto& sp = tc->split[s];
    Mat U = Mat::Zero(T.size(s), static_cast<Eigen::Index>(sp.size()));
    for (int col = 0; col < static_cast<int>(sp.size()); ++col) {
      const SplitIndex& x = sp[col];
      const Tree& t1 = T1.roots[x.s1][x.t1];
      const Tree& t2 = T2.roots[x.s2][x.t2];
      if (w2.empty()) {
        U(T.index(s, t1), col) = 1.0;
      } else if (w1.empty()) {
        U(T.index(s, t2), col) = 1.0;
      } else if (w2.size() == 1) {
        Tree t = t1;
        t.e.push_back(s);
        t.m.push_back(x.v);
        U(T.index(s, t), col) = 1.0;
      } else {
        Tree t2p = t2;
        t2p.e.pop_back();
        t2p.m.pop_back();
        const int ep = t2p.e.back();
        const int v2 = t2.m.back();
        const int xl = w2.back();
        const auto Lb = left_basis(x.s1, ep, xl, s);
        const auto Rb = right_basis(x.s1, ep, xl, s);
        int j = -1;
        for (int r = 0; r < static_cast<int>(Rb.size()); ++r)
          if (Rb[r].mid == x.s2 && Rb[r].i == v2 && Rb[r].j == x.v) j = r;
        const Mat& Fm = F(x.s1, ep, xl, s);
        const int t2p_idx = T2p->index(ep, t2p);
        for (int i = 0; i < static_cast<int>(Lb.size()); ++i) {
          const cd coef = std::conj(Fm(i, j));
          if (coef == cd(0.0)) continue;
          const int e = Lb[i].mid;
          const int subcol = sub_index[e].at({x.s1, ep, x.t1, t2p_idx, Lb[i].i});
          const Mat& Us = sub->U[e];
          for (int r = 0; r < Us.rows(); ++r) {
            const cd val = Us(r, subcol);
            if (val == cd(0.0)) continue;
            Tree t = T12p->roots[e][r];
            t.e.push_back(s);
            t.m.push_back(Lb[i].j);
            U(T.index(s, t), col) += coef * val;
          }
        }
      }
    }
    tc->U[s] = std::move(U);
  }
  std::lock_guard<std::mutex> g(cache_->mu);
  auto [it, inserted] = cache_->changes.emplace(key, std::move(tc));
  return *it->second;
}

}  // namespace ck
