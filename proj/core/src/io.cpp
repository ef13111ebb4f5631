#include "turan3/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace turan3 {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::runtime_error("hg3 parse error at line " + std::to_string(line) + ": " + what);
}

bool content_line(const std::string& s) {
    for (char ch : s) {
        if (ch == '#') return false;
        if (!isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;
}

} // namespace

void write_hg3(const Hypergraph3& h, std::ostream& out) {
    out << "hg3 n=" << h.n() << " m=" << h.size() << "\n";
    for (const Triple& t : h.edges())
        out << int(t.a) << ' ' << int(t.b) << ' ' << int(t.c) << "\n";
}

std::string to_hg3(const Hypergraph3& h) {
    std::ostringstream os;
    write_hg3(h, os);
    return os.str();
}

Hypergraph3 read_hg3(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!content_line(line)) continue;
        std::istringstream hs(line);
        std::string tag, nf, mf;
        hs >> tag >> nf >> mf;
        if (tag != "hg3" || nf.rfind("n=", 0) != 0 || mf.rfind("m=", 0) != 0)
            fail(lineno, "expected header 'hg3 n=<N> m=<M>'");
        try {
            n = std::stoi(nf.substr(2));
            m = std::stoi(mf.substr(2));
        } catch (const std::exception&) {
            fail(lineno, "bad header numbers");
        }
        break;
    }
    if (n < 0) fail(lineno, "missing header");
    if (n < 1 || n > kMaxVertices) fail(lineno, "n out of range 1..32");
    if (m < 0 || m > triple_count(n)) fail(lineno, "m out of range");

    Hypergraph3 g(n);
    std::vector<Triple> es;
    es.reserve(m);
    int prev_rank = -1;
    while (static_cast<int>(es.size()) < m && std::getline(in, line)) {
        ++lineno;
        if (!content_line(line)) continue;
        std::istringstream ls(line);
        int u, v, w;
        if (!(ls >> u >> v >> w)) fail(lineno, "expected 'u v w'");
        std::string rest;
        if (ls >> rest) fail(lineno, "trailing tokens");
        if (!(0 <= u && u < v && v < w && w < n)) fail(lineno, "need 0 <= u < v < w < n");
        int r = rank_triple(u, v, w);
        if (r <= prev_rank) fail(lineno, "edges not in strictly increasing colex order");
        prev_rank = r;
        es.push_back(Triple{static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v),
                            static_cast<std::uint8_t>(w)});
    }
    if (static_cast<int>(es.size()) != m) fail(lineno, "fewer edges than declared");
    return Hypergraph3(n, es);
}

Hypergraph3 parse_hg3(const std::string& text) {
    std::istringstream is(text);
    return read_hg3(is);
}

Hypergraph3 load_hg3_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_hg3(in);
}

void save_hg3_file(const Hypergraph3& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_hg3(h, out);
}

} // namespace turan3
