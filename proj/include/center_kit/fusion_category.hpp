#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "center_kit/errors.hpp"
#include "center_kit/linalg.hpp"

namespace ck {

using Label = int;
using Word = std::vector<Label>;

// Left-comb fusion tree of a word w_0 ... w_{n-1}.
// e[k] is the channel after fusing the first k+1 letters; m[k] (k >= 1) is the
// multiplicity index of the vertex (e[k-1], w[k]) -> e[k].
struct Tree {
  std::vector<int> e;
  std::vector<int> m;
  auto operator<=>(const Tree&) const = default;
  bool operator==(const Tree&) const = default;
};

struct TreeBasis {
  Word word;
  std::vector<std::vector<Tree>> roots;
  std::vector<std::map<Tree, int>> lookup;
  int size(int s) const { return static_cast<int>(roots[s].size()); }
  int index(int s, const Tree& t) const;
};

// Basis element (t1 (x) t2) o v of C(s, W1 W2), v a vertex s1 s2 -> s.
struct SplitIndex {
  int s1, s2, t1, t2, v;
};

struct TensorChange {
  std::vector<std::vector<SplitIndex>> split;
  std::vector<Mat> U;  // U[s]: comb coordinates of each split basis vector (columns)
};

// Basis entry (mid, i, j) of an F-block; for the left basis mid = e, i = alpha, j = beta,
// for the right basis mid = f, i = mu, j = nu.
struct FChannel {
  int mid, i, j;
};

using FKey = std::array<int, 4>;

class FusionCategory {
 public:
  FusionCategory(std::string name, std::vector<std::string> labels, int unit, std::vector<int> dual,
                 std::vector<double> dims, std::vector<int> fusion, std::map<FKey, Mat> F);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label_name(Label a) const { return labels_.at(a); }
  Label label(const std::string& name) const;
  Label unit() const { return unit_; }
  Label dual(Label a) const { return dual_[a]; }
  double dim(Label a) const { return dims_[a]; }
  double global_dim() const;
  int N(Label a, Label b, Label c) const { return fusion_[(a * rank() + b) * rank() + c]; }
  const std::vector<int>& fusion_table() const { return fusion_; }
  const std::vector<double>& dims() const { return dims_; }
  const std::vector<int>& duals() const { return dual_; }
  bool pointed() const { return pointed_; }
  bool multiplicity_free() const { return multiplicity_free_; }

  // F-block for (a,b,c;d): rows index the left basis, columns the right basis.
  const Mat& F(Label a, Label b, Label c, Label d) const;
  const std::map<FKey, Mat>& F_blocks() const { return F_; }
  std::vector<FChannel> left_basis(Label a, Label b, Label c, Label d) const;
  std::vector<FChannel> right_basis(Label a, Label b, Label c, Label d) const;

  Word normalize(const Word& w) const;
  Word bar(const Word& w) const;
  Word concat(const Word& a, const Word& b) const;
  Word concat(const Word& a, const Word& b, const Word& c) const;

  const TreeBasis& trees(const Word& w) const;
  int tree_count(const Word& w, Label s) const { return trees(w).size(s); }
  const TensorChange& tensor_change(const Word& w1, const Word& w2) const;

  // Phase p_a with cap(a) = p_a sqrt(d_a) times the normalized vertex (a, abar) -> 1.
  cd cap_phase(Label a) const;

  std::string word_string(const Word& w) const;

 private:
  void check_structure();
  void compute_cap_phases() const;

  std::string name_;
  std::vector<std::string> labels_;
  Label unit_;
  std::vector<int> dual_;
  std::vector<double> dims_;
  std::vector<int> fusion_;
  std::map<FKey, Mat> F_;
  bool pointed_ = false;
  bool multiplicity_free_ = true;

  struct Cache {
    std::mutex mu;
    std::map<Word, std::unique_ptr<TreeBasis>> trees;
    std::map<std::pair<Word, Word>, std::unique_ptr<TensorChange>> changes;
    std::once_flag cap_once;
    std::vector<cd> cap_phase;
  };
  std::shared_ptr<Cache> cache_;
};

FusionCategory vec_z(int n);
FusionCategory fibonacci();
FusionCategory ising();
FusionCategory builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace ck
