#include "dst/frame.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "dst/errors.hpp"

namespace dst {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Frame::Frame(std::vector<std::string> names) {
  if (names.empty()) throw BadName("a frame needs at least one element");
  if (names.size() > kMaxFrameElements) {
    throw TooManyElements("frame has " + std::to_string(names.size()) + " elements, the cap is " +
                          std::to_string(kMaxFrameElements));
  }
  for (const auto& name : names) {
    if (!valid_name(name)) {
      throw BadName("bad element name '" + name + "' (want nonempty [A-Za-z0-9_]+)");
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) throw DuplicateElement("duplicate element '" + names[i] + "'");
    }
  }
  data_ = std::make_shared<const Data>(Data{std::move(names)});
}

std::optional<std::size_t> Frame::index_of(std::string_view name) const {
  const auto& names = data_->names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

std::string Frame::subset_text(Mask bits) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (bits & (Mask{1} << i)) {
      if (!first) out += ' ';
      out += elements()[i];
      first = false;
    }
  }
  out += '}';
  return out;
}

Mask Frame::parse_subset(std::string_view text) const {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos || text[begin] != '{' || text[end] != '}') {
    throw ParseError("subset must be written as '{ name ... }', got '" + std::string(text) + "'");
  }
  std::istringstream in(std::string(text.substr(begin + 1, end - begin - 1)));
  Mask bits = 0;
  std::string token;
  while (in >> token) {
    auto index = index_of(token);
    if (!index) throw ParseError("'" + token + "' is not an element of the frame");
    Mask bit = Mask{1} << *index;
    if (bits & bit) throw ParseError("element '" + token + "' listed twice in subset");
    bits |= bit;
  }
  return bits;
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (a != b) throw FrameMismatch("operands live on different frames");
}

Subset::Subset(Frame frame, Mask bits) : frame_(std::move(frame)), bits_(bits) {
  if (bits_ > frame_.universe()) {
    throw OutOfRange("subset mask " + std::to_string(bits_) + " outside the frame's power set");
  }
}

Subset intersect(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
  return Subset(a.frame(), a.bits() & b.bits());
}

Subset unite(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
  return Subset(a.frame(), a.bits() | b.bits());
}

Subset complement(const Subset& a) {
  return Subset(a.frame(), static_cast<Mask>(~a.bits()) & a.frame().universe());
}

bool contains(const Subset& a, const Subset& b) {
  require_same_frame(a.frame(), b.frame());
  return (a.bits() & b.bits()) == b.bits();
}

std::size_t cardinality(const Subset& a) { return std::popcount(a.bits()); }

}  // namespace dst
