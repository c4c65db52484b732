#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>

#include "commgraph/error.hpp"
#include "commgraph/ingest.hpp"

namespace commgraph {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string_view> next() {
    if (!std::getline(in_, line_)) return std::nullopt;
    ++number_;
    return trim(line_);
  }

  std::size_t number() const { return number_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

std::vector<std::size_t> parse_numbers(LineReader& reader, std::string_view text) {
  std::vector<std::size_t> out;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p != end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::size_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t')) {
      reader.fail("expected a non-negative base-10 integer");
    }
    out.push_back(value);
    p = next;
  }
  return out;
}

// Skips leading blank and '#' lines, then requires `magic`, then `<key> <value>`.
std::size_t read_header(LineReader& reader, std::string_view magic, std::string_view key) {
  std::optional<std::string_view> line;
  while ((line = reader.next()) && (line->empty() || line->front() == '#')) {
  }
  if (!line) reader.fail("missing header '" + std::string(magic) + "'");
  if (*line != magic) reader.fail("expected header '" + std::string(magic) + "'");
  line = reader.next();
  if (!line || !line->starts_with(key) || line->size() <= key.size() || (*line)[key.size()] != ' ') {
    reader.fail("expected '" + std::string(key) + " <value>'");
  }
  const auto values = parse_numbers(reader, line->substr(key.size()));
  if (values.size() != 1 || values[0] == 0) reader.fail(std::string(key) + " must be one positive integer");
  return values[0];
}

void require_only_blank_lines(LineReader& reader) {
  while (auto line = reader.next()) {
    if (!line->empty()) reader.fail("unexpected trailing content");
  }
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer writer) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path.string() + "'");
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

void write_cayley(const FiniteGroup& G, std::ostream& out) {
  out << "commgraph-cayley 1\norder " << G.order() << '\n';
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto row = G.row(static_cast<Element>(g));
    for (std::size_t h = 0; h < row.size(); ++h) {
      if (h) out << ' ';
      out << row[h];
    }
    out << '\n';
  }
}

FiniteGroup parse_cayley(std::istream& in, std::size_t order_cap) {
  LineReader reader(in);
  const std::size_t order = read_header(reader, "commgraph-cayley 1", "order");
  if (order > order_cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(order_cap));
  }
  std::vector<Element> table;
  table.reserve(order * order);
  for (std::size_t g = 0; g < order; ++g) {
    auto line = reader.next();
    if (!line) reader.fail("expected " + std::to_string(order) + " table rows, found " + std::to_string(g));
    const auto row = parse_numbers(reader, *line);
    if (row.size() != order) {
      reader.fail("row " + std::to_string(g) + " has " + std::to_string(row.size()) + " entries, expected " +
                  std::to_string(order));
    }
    for (auto v : row) {
      if (v >= order) {
        throw Error(ErrorKind::NotAGroup, "line " + std::to_string(reader.number()) + ": entry " + std::to_string(v) +
                                              " is out of range for order " + std::to_string(order));
      }
      table.push_back(static_cast<Element>(v));
    }
  }
  require_only_blank_lines(reader);
  return FiniteGroup::from_table(order, std::move(table), {}, order_cap);
}

void write_cayley_file(const FiniteGroup& G, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_cayley(G, out); });
}

FiniteGroup read_cayley_file(const std::filesystem::path& path, std::size_t order_cap) {
  auto in = open_input(path);
  return parse_cayley(in, order_cap);
}

void write_perms(const PermGenSet& gens, std::ostream& out) {
  out << "commgraph-perms 1\ndegree " << gens.degree << '\n';
  for (const auto& g : gens.generators) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) out << ' ';
      out << g[i];
    }
    out << '\n';
  }
}

PermGenSet parse_perms(std::istream& in) {
  LineReader reader(in);
  PermGenSet gens;
  gens.degree = read_header(reader, "commgraph-perms 1", "degree");
  while (auto line = reader.next()) {
    if (line->empty()) continue;
    const auto images = parse_numbers(reader, *line);
    if (images.size() != gens.degree) {
      reader.fail("generator has " + std::to_string(images.size()) + " images, expected " +
                  std::to_string(gens.degree));
    }
    Permutation p(images.begin(), images.end());
    std::vector<std::uint8_t> hit(gens.degree);
    for (auto image : p) {
      if (image >= gens.degree || hit[image]) reader.fail("generator is not a permutation");
      hit[image] = 1;
    }
    gens.generators.push_back(std::move(p));
  }
  if (gens.generators.empty()) reader.fail("no generators");
  return gens;
}

PermGenSet read_perms_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_perms(in);
}

}  // namespace commgraph
