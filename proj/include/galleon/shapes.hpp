#pragma once

// Canonical unlabeled galled-tree shapes, generated exhaustively for small n.
// Serves as the brute-force oracle for both count tables: shapes are counted
// directly for the unlabeled table and weighted by n! / |Aut| for the labeled
// one.

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "galleon/bigint.hpp"

namespace galleon {

inline constexpr int kMaxShapeLeaves = 10;

class GalledShape {
 public:
  enum class Variant { leaf, binary, gall };

  static GalledShape leaf();
  // Children are put into canonical order.
  static GalledShape binary(GalledShape a, GalledShape b);
  // Arms are listed from the gall's top node down to the reticulation node.
  // Both must be nonempty; the orientation is canonicalized by a mirror swap.
  static GalledShape gall(std::vector<GalledShape> left_arm, std::vector<GalledShape> right_arm,
                          GalledShape reticulation_child);

  Variant variant() const { return node_->variant; }
  const GalledShape& left() const;   // binary only
  const GalledShape& right() const;  // binary only
  const std::vector<GalledShape>& left_arm() const;   // gall only
  const std::vector<GalledShape>& right_arm() const;  // gall only
  const GalledShape& reticulation_child() const;      // gall only

  int leaf_count() const { return node_->leaves; }
  int gall_count() const { return node_->galls; }
  const Integer& automorphism_size() const { return node_->aut; }
  const std::string& serialize() const { return node_->text; }

  friend bool operator==(const GalledShape& a, const GalledShape& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }
  friend std::strong_ordering operator<=>(const GalledShape& a, const GalledShape& b) {
    return a.node_->text <=> b.node_->text;
  }

 private:
  struct Node {
    Variant variant = Variant::leaf;
    std::vector<GalledShape> first;   // binary: {left, right}; gall: left arm
    std::vector<GalledShape> second;  // gall: right arm
    std::vector<GalledShape> retic;   // gall: {reticulation child}
    int leaves = 1;
    int galls = 0;
    Integer aut = 1;
    std::string text = "L";
  };

  explicit GalledShape(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

int count_galls(const GalledShape& s);
Integer automorphism_size(const GalledShape& s);
std::string canonical_serialize(const GalledShape& s);
// Accepts any orientation and canonicalizes; malformed text is a ParseError.
GalledShape parse_shape(const std::string& text);

// All canonical shapes with n leaves, sorted by serialization. Memoized;
// n > kMaxShapeLeaves is a ResourceError.
const std::vector<GalledShape>& generate_unlabeled(int n);

struct ShapeStats {
  std::vector<Integer> unlabeled;  // number of shapes with g galls
  std::vector<Integer> labeled;    // sum of n! / |Aut| over those shapes
};

// Histograms indexed by gall count 0..max_galls(n), computed in parallel.
ShapeStats shape_stats(int n);

}  // namespace galleon
