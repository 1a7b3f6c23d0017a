#include "galleon/shapes.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "galleon/count_table.hpp"
#include "galleon/errors.hpp"

namespace galleon {

namespace {

std::string join_arm(const std::vector<GalledShape>& arm) {
  std::string s = "[";
  for (std::size_t i = 0; i < arm.size(); ++i) {
    if (i) s += ',';
    s += arm[i].serialize();
  }
  return s + "]";
}

// Orientation is decided on the serialized arms, the same order used for
// every other comparison. Note "[L,L]" < "[L]" here.
bool arm_less(const std::vector<GalledShape>& a, const std::vector<GalledShape>& b) {
  return join_arm(a) < join_arm(b);
}

bool arm_equal(const std::vector<GalledShape>& a, const std::vector<GalledShape>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  GalledShape parse() {
    GalledShape result = shape();
    if (pos_ != s_.size()) fail("trailing characters");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("shape parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GalledShape shape() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    switch (s_[pos_]) {
      case 'L': ++pos_; return GalledShape::leaf();
      case '(': {
        ++pos_;
        GalledShape a = shape();
        expect(',');
        GalledShape b = shape();
        expect(')');
        return GalledShape::binary(std::move(a), std::move(b));
      }
      case '<': {
        ++pos_;
        auto left = arm();
        expect(';');
        auto right = arm();
        expect(';');
        GalledShape child = shape();
        expect('>');
        return GalledShape::gall(std::move(left), std::move(right), std::move(child));
      }
      default: fail(std::string("unexpected character '") + s_[pos_] + "'");
    }
  }

  std::vector<GalledShape> arm() {
    expect('[');
    std::vector<GalledShape> items;
    if (pos_ < s_.size() && s_[pos_] == ']') fail("empty gall arm");
    items.push_back(shape());
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      items.push_back(shape());
    }
    expect(']');
    return items;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// sequences[m]: every ordered nonempty sequence of shapes with m leaves in total.
struct Cache {
  std::mutex mutex;
  std::vector<std::vector<GalledShape>> shapes{{}};  // index 0 unused
  std::vector<std::vector<std::vector<GalledShape>>> sequences{{}};
};

Cache& cache() {
  static Cache c;
  return c;
}

void build_sequences(Cache& c, int m) {
  std::vector<std::vector<GalledShape>> out;
  for (int first = 1; first <= m; ++first) {
    for (const auto& head : c.shapes[static_cast<std::size_t>(first)]) {
      if (first == m) {
        out.push_back({head});
        continue;
      }
      for (const auto& tail : c.sequences[static_cast<std::size_t>(m - first)]) {
        std::vector<GalledShape> seq;
        seq.reserve(tail.size() + 1);
        seq.push_back(head);
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.push_back(std::move(seq));
      }
    }
  }
  c.sequences.push_back(std::move(out));
}

void build_shapes(Cache& c, int n) {
  std::vector<GalledShape> out;
  if (n == 1) {
    out.push_back(GalledShape::leaf());
  } else {
    for (int a = 1; a <= n / 2; ++a) {
      const auto& sa = c.shapes[static_cast<std::size_t>(a)];
      const auto& sb = c.shapes[static_cast<std::size_t>(n - a)];
      for (std::size_t i = 0; i < sa.size(); ++i)
        for (std::size_t j = (a == n - a ? i : 0); j < sb.size(); ++j)
          out.push_back(GalledShape::binary(sa[i], sb[j]));
    }
    for (int child = 1; child <= n - 2; ++child) {
      const int arms = n - child;
      for (int l = 1; l < arms; ++l) {
        for (const auto& left : c.sequences[static_cast<std::size_t>(l)]) {
          for (const auto& right : c.sequences[static_cast<std::size_t>(arms - l)]) {
            if (arm_less(right, left)) continue;  // the mirror image is generated instead
            for (const auto& r : c.shapes[static_cast<std::size_t>(child)])
              out.push_back(GalledShape::gall(left, right, r));
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ConsistencyError("shape generation produced a duplicate at n = " + std::to_string(n));
  c.shapes.push_back(std::move(out));
}

}  // namespace

GalledShape GalledShape::leaf() {
  static const GalledShape l(std::make_shared<const Node>());
  return l;
}

GalledShape GalledShape::binary(GalledShape a, GalledShape b) {
  if (b < a) std::swap(a, b);
  auto node = std::make_shared<Node>();
  node->variant = Variant::binary;
  node->leaves = a.leaf_count() + b.leaf_count();
  node->galls = a.gall_count() + b.gall_count();
  node->aut = a.automorphism_size() * b.automorphism_size();
  if (a == b) node->aut *= 2;
  node->text = "(" + a.serialize() + "," + b.serialize() + ")";
  node->first = {std::move(a), std::move(b)};
  return GalledShape(std::move(node));
}

GalledShape GalledShape::gall(std::vector<GalledShape> left_arm, std::vector<GalledShape> right_arm,
                              GalledShape reticulation_child) {
  if (left_arm.empty() || right_arm.empty())
    throw DomainError("gall arms must be nonempty (time-consistency)");
  if (arm_less(right_arm, left_arm)) std::swap(left_arm, right_arm);
  auto node = std::make_shared<Node>();
  node->variant = Variant::gall;
  node->leaves = reticulation_child.leaf_count();
  node->galls = reticulation_child.gall_count() + 1;
  node->aut = reticulation_child.automorphism_size();
  for (const auto* arm : {&left_arm, &right_arm}) {
    for (const auto& s : *arm) {
      node->leaves += s.leaf_count();
      node->galls += s.gall_count();
      node->aut *= s.automorphism_size();
    }
  }
  if (arm_equal(left_arm, right_arm)) node->aut *= 2;
  node->text = "<" + join_arm(left_arm) + ";" + join_arm(right_arm) + ";" +
               reticulation_child.serialize() + ">";
  node->first = std::move(left_arm);
  node->second = std::move(right_arm);
  node->retic = {std::move(reticulation_child)};
  return GalledShape(std::move(node));
}

const GalledShape& GalledShape::left() const {
  if (variant() != Variant::binary) throw UsageError("left(): not a binary node");
  return node_->first[0];
}

const GalledShape& GalledShape::right() const {
  if (variant() != Variant::binary) throw UsageError("right(): not a binary node");
  return node_->first[1];
}

const std::vector<GalledShape>& GalledShape::left_arm() const {
  if (variant() != Variant::gall) throw UsageError("left_arm(): not a gall");
  return node_->first;
}

const std::vector<GalledShape>& GalledShape::right_arm() const {
  if (variant() != Variant::gall) throw UsageError("right_arm(): not a gall");
  return node_->second;
}

const GalledShape& GalledShape::reticulation_child() const {
  if (variant() != Variant::gall) throw UsageError("reticulation_child(): not a gall");
  return node_->retic[0];
}

int count_galls(const GalledShape& s) { return s.gall_count(); }

Integer automorphism_size(const GalledShape& s) { return s.automorphism_size(); }

std::string canonical_serialize(const GalledShape& s) { return s.serialize(); }

GalledShape parse_shape(const std::string& text) { return Parser(text).parse(); }

const std::vector<GalledShape>& generate_unlabeled(int n) {
  if (n < 1) throw DomainError("generate_unlabeled: n must be at least 1");
  if (n > kMaxShapeLeaves)
    throw ResourceError("generate_unlabeled: n = " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(kMaxShapeLeaves));
  Cache& c = cache();
  std::lock_guard lock(c.mutex);
  while (static_cast<int>(c.shapes.size()) <= n) {
    const int m = static_cast<int>(c.shapes.size());
    build_shapes(c, m);
    build_sequences(c, m);
  }
  return c.shapes[static_cast<std::size_t>(n)];
}

ShapeStats shape_stats(int n) {
  const auto& shapes = generate_unlabeled(n);
  const int width = max_galls(n) + 1;
  const Integer nfact = factorial(static_cast<unsigned>(n));
  std::vector<Integer> labels(shapes.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), nfact.get_mpz_t(), shapes[i].automorphism_size().get_mpz_t());
    labels[i] = std::move(q);
  }
  ShapeStats stats{std::vector<Integer>(static_cast<std::size_t>(width), 0),
                   std::vector<Integer>(static_cast<std::size_t>(width), 0)};
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto g = static_cast<std::size_t>(shapes[i].gall_count());
    if (g >= stats.unlabeled.size()) throw ConsistencyError("shape exceeds the gall bound");
    stats.unlabeled[g] += 1;
    stats.labeled[g] += labels[i];
  }
  return stats;
}

}  // namespace galleon
