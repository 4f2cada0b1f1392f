#include <fstream>
#include <sstream>
#include <stdexcept>

#include "orbitcensus/group.hpp"

namespace orbitcensus {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t)
    if (t != "/") out.push_back(t);
  return out;
}

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint32_t parse_entry(const std::string& tok, const Field* f) {
  std::uint32_t code = 0;
  std::uint32_t powp = 1;
  std::size_t pos = 0;
  std::uint32_t digits = 0;
  while (pos < tok.size()) {
    std::size_t comma = tok.find(',', pos);
    std::string part = tok.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    long v = std::stol(part);
    code += f->from_int(v) * powp;
    powp *= f->characteristic();
    ++digits;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (digits != 1 && digits != f->degree())
    throw std::runtime_error("generator file: bad entry tuple: " + tok);
  return code;
}

}  // namespace

GeneratorFile load_generators(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (blank_or_comment(line)) continue;
    header = tokenize(line);
    break;
  }
  if (header.size() != 5 || header[0] != "field" || header[3] != "dim")
    throw std::runtime_error(
        "generator file: expected header `field p k / dim n`");
  std::uint32_t p = static_cast<std::uint32_t>(std::stoul(header[1]));
  std::uint32_t k = static_cast<std::uint32_t>(std::stoul(header[2]));
  std::uint32_t n = static_cast<std::uint32_t>(std::stoul(header[4]));
  if (n == 0) throw std::runtime_error("generator file: dim must be >= 1");
  const Field* f = Field::get(p, k);
  GeneratorFile gf;
  gf.mod = Module{f, n, nullptr};

  std::vector<std::vector<std::uint32_t>> rows;
  auto flush = [&]() {
    if (rows.empty()) return;
    if (rows.size() != n)
      throw std::runtime_error("generator file: matrix with wrong row count");
    Mat m(f, n, n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    if (m.det() == 0)
      throw std::runtime_error("generator file: singular generator");
    gf.generators.emplace_back(std::move(m));
    rows.clear();
  };

  while (std::getline(in, line)) {
    if (blank_or_comment(line)) {
      flush();
      continue;
    }
    std::vector<std::string> toks = tokenize(line);
    if (toks.size() != n)
      throw std::runtime_error("generator file: row with wrong entry count");
    std::vector<std::uint32_t> row;
    for (const std::string& t : toks) row.push_back(parse_entry(t, f));
    rows.push_back(std::move(row));
  }
  flush();
  if (gf.generators.empty())
    throw std::runtime_error("generator file: no matrices");
  return gf;
}

GeneratorFile load_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file: " + path);
  return load_generators(in);
}

void save_generators(std::ostream& out, const Module& mod,
                     const std::vector<GroupElement>& gens) {
  if (mod.ext)
    throw std::invalid_argument("save_generators: matrix modules only");
  out << "field " << mod.ground->characteristic() << ' '
      << mod.ground->degree() << " / dim " << mod.dim << "\n";
  for (const GroupElement& g : gens) {
    out << "\n";
    const Mat& m = g.matrix();
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
      for (std::uint32_t j = 0; j < m.cols(); ++j) {
        if (j) out << ' ';
        out << mod.ground->to_string(m.at(i, j));
      }
      out << "\n";
    }
  }
}

}  // namespace orbitcensus
