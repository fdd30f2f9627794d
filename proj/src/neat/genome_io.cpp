#include "cogtrade/neat/genome_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "cogtrade/error.hpp"
#include "cogtrade/number_format.hpp"

namespace cogtrade::neat {

namespace {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Input: return "input";
    case NodeKind::Bias: return "bias";
    case NodeKind::Output: return "output";
    case NodeKind::Hidden: return "hidden";
  }
  return "hidden";
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

void write_genome(const Genome& g, std::ostream& out) {
  out << "genome " << g.num_inputs << ' ' << g.num_outputs << '\n';
  if (g.fitness) out << "fitness " << format_double(*g.fitness) << '\n';
  for (const auto& n : g.nodes) out << "node " << n.id << ' ' << kind_name(n.kind) << '\n';
  for (const auto& c : g.connections) {
    out << "conn " << c.innovation << ' ' << c.from << ' ' << c.to << ' '
        << format_double(c.weight) << ' ' << (c.enabled ? 1 : 0) << '\n';
  }
}

std::string genome_to_text(const Genome& g) {
  std::ostringstream out;
  write_genome(g, out);
  return out.str();
}

void save_genome(const Genome& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  write_genome(g, out);
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

Genome read_genome(std::istream& in) {
  Genome g;
  bool have_header = false;
  std::string raw;
  std::size_t line_no = 0;
  auto bad = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::MalformedGenome, msg, line_no);
  };
  auto integer = [&](std::string_view f) {
    auto v = parse_int64(f);
    if (!v) throw bad("expected an integer, got '" + std::string(f) + "'");
    return *v;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto f = fields(line);
    if (f[0] == "genome") {
      if (have_header || f.size() != 3) throw bad("bad genome header");
      const auto i = integer(f[1]);
      const auto o = integer(f[2]);
      if (i <= 0 || o <= 0) throw bad("input and output counts must be positive");
      g.num_inputs = static_cast<std::size_t>(i);
      g.num_outputs = static_cast<std::size_t>(o);
      have_header = true;
      continue;
    }
    if (!have_header) throw bad("missing genome header");
    if (f[0] == "fitness") {
      const auto v = f.size() == 2 ? parse_double(f[1]) : std::nullopt;
      if (!v) throw bad("bad fitness line");
      g.fitness = *v;
    } else if (f[0] == "node") {
      if (f.size() != 3) throw bad("node lines have two fields");
      NodeKind kind;
      if (f[2] == "input") {
        kind = NodeKind::Input;
      } else if (f[2] == "bias") {
        kind = NodeKind::Bias;
      } else if (f[2] == "output") {
        kind = NodeKind::Output;
      } else if (f[2] == "hidden") {
        kind = NodeKind::Hidden;
      } else {
        throw bad("unknown node kind '" + std::string(f[2]) + "'");
      }
      const int id = static_cast<int>(integer(f[1]));
      if (g.has_node(id)) throw bad("duplicate node id");
      g.add_node({id, kind});
    } else if (f[0] == "conn") {
      if (f.size() != 6) throw bad("conn lines have five fields");
      const auto w = parse_double(f[4]);
      if (!w) throw bad("bad weight");
      if (f[5] != "0" && f[5] != "1") throw bad("enabled flag must be 0 or 1");
      g.add_connection({integer(f[1]), static_cast<int>(integer(f[2])),
                        static_cast<int>(integer(f[3])), *w, f[5] == "1"});
    } else {
      throw bad("unknown record '" + std::string(f[0]) + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::MalformedGenome, "empty genome file");
  validate(g);
  return g;
}

Genome genome_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_genome(in);
}

Genome load_genome(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return read_genome(in);
}

}  // namespace cogtrade::neat
