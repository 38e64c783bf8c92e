#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace twocat {

// Raised when data is well formed but violates an axiom or a hypothesis.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(std::string axiom, std::string detail);
  const std::string& axiom() const { return axiom_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string axiom_;
  std::string detail_;
};

// Raised for malformed input: bad JSON, dangling identifiers, duplicates.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t pair_key(int a, int b) {
  return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

// Binary operation table on cell indices; dense when small, hashed otherwise.
class PairTable {
 public:
  void reset(std::size_t rows, std::size_t cols);
  int get(int a, int b) const;
  void set(int a, int b, int v);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  bool dense_ = true;
  std::vector<int> data_;
  std::unordered_map<std::uint64_t, int> sparse_;
};

struct OneCell {
  std::string id;
  int src = -1;
  int tgt = -1;
};

// A 2-cell src ⇒ tgt between parallel 1-cells.
struct TwoCell {
  std::string id;
  int src = -1;
  int tgt = -1;
};

class TwoCategoryBuilder;

// Finite strict 2-category with explicit composition tables. Cells are
// addressed by dense indices; identifiers are kept for I/O and ordering.
class TwoCategory {
 public:
  int num_objects() const { return int(objects_.size()); }
  int num_one_cells() const { return int(ones_.size()); }
  int num_two_cells() const { return int(twos_.size()); }

  const std::string& object(int x) const { return objects_[x]; }
  const OneCell& one(int f) const { return ones_[f]; }
  const TwoCell& two(int a) const { return twos_[a]; }

  int id1(int x) const { return id1_[x]; }
  int id2(int f) const { return id2_[f]; }
  bool is_id1(int f) const { return id1_[ones_[f].src] == f; }
  bool is_id2(int a) const { return id2_[twos_[a].src] == a; }

  // 0-cell source/target of a 2-cell.
  int src0(int a) const { return ones_[twos_[a].src].src; }
  int tgt0(int a) const { return ones_[twos_[a].src].tgt; }

  // g∘f, b·a (a first), k∗a, a∗h. Return -1 when not composable.
  int compose(int g, int f) const;
  int vcompose(int b, int a) const;
  int whisker_l(int k, int a) const;
  int whisker_r(int a, int h) const;
  // Horizontal composite b∗a = (b∗tgt a)·(src b∗a).
  int hcompose(int b, int a) const;

  const std::vector<int>& hom(int x, int y) const;
  const std::vector<int>& hom2(int f, int g) const;
  const std::vector<int>& out_one(int x) const { return out1_[x]; }
  const std::vector<int>& in_one(int y) const { return in1_[y]; }
  // 2-cells with the given source (resp. target) 1-cell.
  const std::vector<int>& two_from(int f) const { return from2_[f]; }
  const std::vector<int>& two_into(int g) const { return into2_[g]; }

  // Inverse of a 2-cell, or -1.
  int inverse2(int a) const { return inv2_[a]; }
  bool invertible2(int a) const { return inv2_[a] >= 0; }

  int find_object(std::string_view id) const;
  int find_one(std::string_view id) const;
  int find_two(std::string_view id) const;

  // Optional provenance shown in JSON output.
  std::string construction;

 private:
  friend class TwoCategoryBuilder;
  void index();

  std::vector<std::string> objects_;
  std::vector<OneCell> ones_;
  std::vector<TwoCell> twos_;
  std::vector<int> id1_, id2_, inv2_;
  PairTable comp1_, vcomp_, wl_, wr_;
  std::vector<std::vector<int>> hom_;
  std::vector<std::vector<int>> out1_, in1_, from2_, into2_;
  std::unordered_map<std::uint64_t, std::vector<int>> hom2_;
  std::unordered_map<std::string, int> obj_ix_, one_ix_, two_ix_;
};

using TwoCatPtr = std::shared_ptr<const TwoCategory>;

class TwoCategoryBuilder {
 public:
  int add_object(std::string id);
  int add_one_cell(std::string id, int src, int tgt);
  int add_two_cell(std::string id, int src, int tgt);
  void set_id1(int x, int f);
  void set_id2(int f, int a);

  // Freeze the cell lists and allocate tables (implicit on first set_*).
  void begin_tables() { ensure_tables(); }
  void set_compose(int g, int f, int r);
  void set_vcompose(int b, int a, int r);
  void set_whisker_l(int k, int a, int r);
  void set_whisker_r(int a, int h, int r);

  int num_objects() const { return int(c_.objects_.size()); }
  int num_one_cells() const { return int(c_.ones_.size()); }
  int num_two_cells() const { return int(c_.twos_.size()); }
  const OneCell& one(int f) const { return c_.ones_[f]; }
  const TwoCell& two(int a) const { return c_.twos_[a]; }

  // Fill every table entry over composable pairs from callbacks.
  void fill(const std::function<int(int, int)>& comp1,
            const std::function<int(int, int)>& vcomp,
            const std::function<int(int, int)>& wl,
            const std::function<int(int, int)>& wr);

  // Structural checks (identities, typing of table entries, totality),
  // then indexing. Axioms are checked separately by validate().
  TwoCategory finish();

 private:
  void ensure_tables();
  TwoCategory c_;
  bool tables_ready_ = false;
};

// Exhaustive axiom check; throws AxiomError naming the first failure.
void validate(const TwoCategory& c);

TwoCategory op_dual(const TwoCategory& c);
TwoCategory co_dual(const TwoCategory& c);
TwoCategory coop_dual(const TwoCategory& c);

// Same identifiers in the same order with the same tables.
bool identical(const TwoCategory& a, const TwoCategory& b);

std::string describe_one(const TwoCategory& c, int f);
std::string describe_two(const TwoCategory& c, int a);

}  // namespace twocat
