#include "dst/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "dst/errors.hpp"

namespace dst {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::string at_line(std::size_t number, const std::string& what) {
  return "line " + std::to_string(number) + ": " + what;
}

struct ParsedFile {
  Frame frame;
  std::vector<std::pair<Mask, Rational>> entries;
};

// Shared reader for both formats; `keyword` is "mass" or "weight".
ParsedFile parse_entries(std::istream& in, const std::string& keyword) {
  std::optional<Frame> frame;
  std::vector<std::pair<Mask, Rational>> entries;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = strip(std::move(raw));
    if (line.empty()) continue;

    if (!frame) {
      if (line.rfind("frame:", 0) != 0) {
        throw ParseError(at_line(line_number, "expected 'frame: name ...' first"));
      }
      std::istringstream names_in(line.substr(6));
      std::vector<std::string> names;
      std::string name;
      while (names_in >> name) names.push_back(std::move(name));
      frame = Frame(std::move(names));
      continue;
    }

    if (line.rfind(keyword, 0) != 0 ||
        (line.size() > keyword.size() && line[keyword.size()] != ' ' &&
         line[keyword.size()] != '\t' && line[keyword.size()] != '{')) {
      throw ParseError(at_line(line_number, "expected '" + keyword + " {...} = value'"));
    }
    const std::string rest = line.substr(keyword.size());
    const auto open = rest.find('{');
    const auto close = rest.find('}');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw ParseError(at_line(line_number, "malformed subset"));
    }
    const auto equals = rest.find('=', close);
    if (equals == std::string::npos) {
      throw ParseError(at_line(line_number, "missing '=' after the subset"));
    }
    Mask mask = 0;
    Rational value;
    try {
      mask = frame->parse_subset(rest.substr(open, close - open + 1));
      value = Rational::parse(rest.substr(equals + 1));
    } catch (const ParseError& e) {
      throw ParseError(at_line(line_number, e.what()));
    }
    for (const auto& entry : entries) {
      if (entry.first == mask) {
        throw DuplicateEntry(
            at_line(line_number, "subset " + frame->subset_text(mask) + " already listed"));
      }
    }
    entries.emplace_back(mask, std::move(value));
  }
  if (!frame) throw ParseError("no 'frame:' line found");
  return {std::move(*frame), std::move(entries)};
}

template <typename T>
T parse_text(const std::string& text, T (*parser)(std::istream&)) {
  std::istringstream in(text);
  return parser(in);
}

template <typename T>
T load_file(const std::filesystem::path& path, T (*parser)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return parser(in);
  } catch (const ValidationError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string emit_entries(const Frame& frame, const std::vector<Rational>& values,
                         const std::string& keyword) {
  std::string out = "frame:";
  for (const auto& name : frame.elements()) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (Mask s = 0; s < values.size(); ++s) {
    if (values[s].is_zero()) continue;
    out += keyword + " " + frame.subset_text(s) + " = " + values[s].str() + "\n";
  }
  return out;
}

}  // namespace

MassDistribution parse_bba(std::istream& in) {
  ParsedFile file = parse_entries(in, "mass");
  return MassDistribution(std::move(file.frame), file.entries);
}

MassDistribution parse_bba_text(const std::string& text) { return parse_text(text, parse_bba); }

MassDistribution load_bba(const std::filesystem::path& path) { return load_file(path, parse_bba); }

std::string emit_bba(const MassDistribution& m) {
  return emit_entries(m.frame(), m.values(), "mass");
}

WeightVector parse_wgt(std::istream& in) {
  ParsedFile file = parse_entries(in, "weight");
  for (const auto& entry : file.entries) {
    if (entry.first == file.frame.universe()) {
      throw ParseError("the whole frame cannot carry weight");
    }
  }
  return WeightVector(std::move(file.frame), file.entries);
}

WeightVector parse_wgt_text(const std::string& text) { return parse_text(text, parse_wgt); }

WeightVector load_wgt(const std::filesystem::path& path) { return load_file(path, parse_wgt); }

std::string emit_wgt(const WeightVector& w) {
  return emit_entries(w.frame(), w.values(), "weight");
}

}  // namespace dst
