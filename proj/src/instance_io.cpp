#include "outbranch/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace outbranch {

namespace {

[[noreturn]] void fail(int line, const std::string &msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(const std::string &s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok)
    out.push_back(tok);
  return out;
}

long long to_int(const std::string &tok, int line, const char *what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    fail(line, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

} // namespace

const char *problem_name(Problem p) { return p == Problem::lob ? "lob" : "iob"; }

InstanceFile parse_instance(std::istream &in) {
  InstanceFile f;
  std::string raw;
  int line = 0;
  bool header = false;
  long long n = 0, m = 0, root = 0;
  std::vector<Arc> arcs;
  std::set<std::pair<long long, long long>> seen;
  int header_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r')
      raw.pop_back();
    auto tok = split(raw);
    if (tok.empty())
      continue;
    if (tok[0] == "c") {
      auto pos = raw.find('c');
      std::string rest = raw.substr(pos + 1);
      if (!rest.empty() && rest[0] == ' ')
        rest.erase(0, 1);
      f.comments.push_back(rest);
      continue;
    }
    if (tok[0] == "p") {
      if (header)
        fail(line, "second header line");
      if (tok.size() != 6)
        fail(line, "header needs 'p <lob|iob> <n> <m> <root> <k>'");
      if (tok[1] == "lob")
        f.problem = Problem::lob;
      else if (tok[1] == "iob")
        f.problem = Problem::iob;
      else
        fail(line, "unknown problem '" + tok[1] + "'");
      n = to_int(tok[2], line, "vertex count");
      m = to_int(tok[3], line, "arc count");
      root = to_int(tok[4], line, "root");
      long long k = to_int(tok[5], line, "k");
      if (n < 1 || n > (1LL << 30))
        fail(line, "vertex count must be positive");
      if (m < 0)
        fail(line, "negative arc count");
      if (root < 0 || root >= n)
        fail(line, "root out of range");
      if (k < 0 || k > (1LL << 30))
        fail(line, "k must be nonnegative");
      f.k = static_cast<int>(k);
      header = true;
      header_line = line;
      continue;
    }
    if (tok[0] == "a") {
      if (!header)
        fail(line, "arc before header");
      if (tok.size() != 3)
        fail(line, "arc needs 'a <u> <v>'");
      long long u = to_int(tok[1], line, "tail"), v = to_int(tok[2], line, "head");
      if (u < 0 || u >= n || v < 0 || v >= n)
        fail(line, "arc endpoint out of range");
      if (u == v)
        fail(line, "loop at " + std::to_string(u));
      if (v == root) {
        if (f.problem == Problem::lob)
          fail(line, "arc enters the root");
        f.warnings.push_back("line " + std::to_string(line) + ": dropped arc " +
                             std::to_string(u) + "->" + std::to_string(v) + " into the root");
        arcs.push_back({kNoVertex, kNoVertex});
        continue;
      }
      if (!seen.insert({u, v}).second)
        fail(line, "duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
      arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
      continue;
    }
    fail(line, "unknown line type '" + tok[0] + "'");
  }
  if (!header)
    fail(line + 1, "missing header");
  if (static_cast<long long>(arcs.size()) != m)
    fail(header_line, "header declares " + std::to_string(m) + " arcs, found " +
                          std::to_string(arcs.size()));
  std::erase_if(arcs, [](const Arc &a) { return a.tail == kNoVertex; });
  f.graph = RootedDigraph(static_cast<VertexId>(n), static_cast<VertexId>(root), arcs);
  return f;
}

InstanceFile parse_instance_string(const std::string &text) {
  std::istringstream is(text);
  return parse_instance(is);
}

InstanceFile load_instance(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  try {
    return parse_instance(in);
  } catch (const InputError &e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_instance(std::ostream &out, const InstanceFile &f) {
  for (const std::string &c : f.comments)
    out << (c.empty() ? "c" : "c " + c) << '\n';
  const RootedDigraph &d = f.graph;
  out << "p " << problem_name(f.problem) << ' ' << d.size() << ' ' << d.arc_count() << ' '
      << d.root() << ' ' << f.k << '\n';
  for (const Arc &a : d.arcs())
    out << "a " << a.tail << ' ' << a.head << '\n';
}

std::string instance_to_string(const InstanceFile &f) {
  std::ostringstream os;
  write_instance(os, f);
  return os.str();
}

void save_instance(const std::string &path, const InstanceFile &f) {
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write '" + path + "'");
  write_instance(out, f);
}

std::string to_dot(const RootedDigraph &d, const LobAnalysis *analysis) {
  std::vector<const char *> color(d.size(), nullptr);
  if (analysis) {
    const ContractedGraph &cg = analysis->contracted;
    auto paint = [&](VertexId c, const char *col) {
      for (VertexId v : cg.bags[c].members)
        if (v < d.size())
          color[v] = col;
    };
    for (const auto &p : analysis->hard.paths)
      for (std::size_t i = 1; i + 1 < p.size(); ++i)
        paint(p[i], "lightblue");
    for (VertexId c : analysis->isolated)
      paint(c, "palegreen");
    for (VertexId c : analysis->special)
      paint(c, "salmon");
  }
  std::ostringstream os;
  os << "digraph D {\n";
  for (VertexId v = 0; v < d.size(); ++v) {
    os << "  " << v;
    if (v == d.root())
      os << " [shape=doublecircle" << (color[v] ? std::string(", style=filled, fillcolor=") + color[v] : "")
         << "]";
    else if (color[v])
      os << " [style=filled, fillcolor=" << color[v] << "]";
    os << ";\n";
  }
  for (const Arc &a : d.arcs())
    os << "  " << a.tail << " -> " << a.head << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace outbranch
