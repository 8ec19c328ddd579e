#ifndef DST_FRAME_HPP
#define DST_FRAME_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dst {

// A subset of a frame encoded as a bitmask: bit i set means element i is a
// member.  0 is the empty set, 2^n - 1 the whole frame.
using Mask = std::uint32_t;

inline constexpr std::size_t kMaxFrameElements = 16;

// Finite frame of discernment: an ordered list of distinct element names.
// Immutable after construction; copies share storage.  Two frames compare
// equal iff they list the same names in the same order, and every binary
// operation in the library requires its operands to live on equal frames.
//
// Element names are nonempty words over [A-Za-z0-9_].  At most 16 elements,
// so every dense power-set array has at most 65536 entries.
class Frame {
 public:
  explicit Frame(std::vector<std::string> names);

  std::size_t size() const { return data_->names.size(); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  Mask universe() const { return static_cast<Mask>(subset_count() - 1); }
  const std::vector<std::string>& elements() const { return data_->names; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Subset text form: '{' followed by whitespace-separated member names and
  // '}'.  Emission lists members in frame order; "{}" is the empty set.
  std::string subset_text(Mask bits) const;
  Mask parse_subset(std::string_view text) const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }
  friend bool operator!=(const Frame& a, const Frame& b) { return !(a == b); }

 private:
  struct Data {
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

// Throws FrameMismatch unless the two frames are equal.
void require_same_frame(const Frame& a, const Frame& b);

// A bitmask tied to its frame, so that mixing subsets of different frames is
// caught at run time rather than silently producing nonsense.
class Subset {
 public:
  Subset(Frame frame, Mask bits);

  const Frame& frame() const { return frame_; }
  Mask bits() const { return bits_; }
  std::string text() const { return frame_.subset_text(bits_); }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.bits_ == b.bits_ && a.frame_ == b.frame_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

 private:
  Frame frame_;
  Mask bits_;
};

Subset intersect(const Subset& a, const Subset& b);
Subset unite(const Subset& a, const Subset& b);
Subset complement(const Subset& a);
// true iff b is a subset of a
bool contains(const Subset& a, const Subset& b);
std::size_t cardinality(const Subset& a);

inline Subset operator&(const Subset& a, const Subset& b) { return intersect(a, b); }
inline Subset operator|(const Subset& a, const Subset& b) { return unite(a, b); }
inline Subset operator~(const Subset& a) { return complement(a); }

}  // namespace dst

#endif  // DST_FRAME_HPP
