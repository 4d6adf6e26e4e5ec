#include "dichroma/io.hpp"

#include <fstream>
#include <sstream>

namespace dichroma::io {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
    return f;
}

} // namespace

DigraphFile read_digraph(std::istream& in) {
    int n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw Error(ErrorKind::ParseError, "expected header line 'n m'");
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw Error(ErrorKind::ParseError, "expected arc line " + std::to_string(i));
        arcs.push_back({u, v});
    }
    DigraphFile out;
    out.d = Digraph(n, std::move(arcs));

    std::string word;
    if (in >> word) {
        if (word != "rotation")
            throw Error(ErrorKind::ParseError, "unexpected trailing content: " + word);
        std::string line;
        std::getline(in, line); // rest of the marker line
        std::vector<std::vector<VertexId>> nbrs(n);
        for (int v = 0; v < n; ++v) {
            if (!std::getline(in, line))
                throw Error(ErrorKind::ParseError, "rotation block truncated");
            std::istringstream ls(line);
            int w;
            while (ls >> w) nbrs[v].push_back(w);
        }
        PlaneEmbedding emb = embedding_from_neighbour_lists(n, nbrs);
        // the rotation block must describe exactly the underlying graph
        if (emb.edge_count() != static_cast<int>(out.d.undirected_edges().size()))
            throw Error(ErrorKind::ParseError, "rotation block does not match the arc list");
        for (const Edge& e : emb.edges)
            if (out.d.undirected_edge_index(e.u, e.v) == -1)
                throw Error(ErrorKind::ParseError, "rotation block does not match the arc list");
        out.emb = std::move(emb);
    }
    return out;
}

DigraphFile read_digraph_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_digraph(f);
}

void write_digraph(std::ostream& out, const Digraph& d, const PlaneEmbedding* emb) {
    out << d.vertex_count() << " " << d.arc_count() << "\n";
    for (const Arc& a : d.arcs()) out << a.tail << " " << a.head << "\n";
    if (emb) {
        out << "rotation\n";
        for (VertexId v = 0; v < emb->n; ++v) {
            for (size_t i = 0; i < emb->rotation[v].size(); ++i)
                out << (i ? " " : "") << emb->dart_head(emb->rotation[v][i]);
            out << "\n";
        }
    }
}

Colouring read_colouring(std::istream& in, int n) {
    Colouring c(n);
    int v, col;
    while (in >> v >> col) {
        if (v < 0 || v >= n)
            throw Error(ErrorKind::ParseError, "colouring vertex out of range");
        if (col != 1 && col != 2)
            throw Error(ErrorKind::ParseError, "colour must be 1 or 2");
        c.set(v, col);
    }
    if (!in.eof())
        throw Error(ErrorKind::ParseError, "malformed colouring line");
    return c;
}

Colouring read_colouring_file(const std::string& path, int n) {
    auto f = open_or_throw(path);
    return read_colouring(f, n);
}

void write_colouring(std::ostream& out, const Colouring& c) {
    for (VertexId v = 0; v < c.size(); ++v)
        if (c.assigned(v)) out << v << " " << c.get(v) << "\n";
}

namespace {

constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

} // namespace

std::vector<PlaneEmbedding> read_planar_code(std::istream& in) {
    std::string header(15, '\0');
    in.read(header.data(), 15);
    if (in.gcount() != 15 || header != kPlanarCodeHeader)
        throw Error(ErrorKind::ParseError, "missing planar_code header");
    std::vector<PlaneEmbedding> out;
    for (;;) {
        int c = in.get();
        if (c == EOF) break;
        int n = c;
        if (n <= 0) throw Error(ErrorKind::ParseError, "bad vertex count byte");
        std::vector<std::vector<VertexId>> nbrs(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                int b = in.get();
                if (b == EOF) throw Error(ErrorKind::ParseError, "planar_code truncated");
                if (b == 0) break;
                if (b > n) throw Error(ErrorKind::ParseError, "neighbour byte out of range");
                nbrs[v].push_back(b - 1);
            }
        }
        out.push_back(embedding_from_neighbour_lists(n, nbrs));
    }
    return out;
}

std::vector<PlaneEmbedding> read_planar_code_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_planar_code(f);
}

void write_planar_code(std::ostream& out, const std::vector<PlaneEmbedding>& graphs) {
    out.write(kPlanarCodeHeader, 15);
    for (const PlaneEmbedding& e : graphs) {
        if (e.n > 255)
            throw Error(ErrorKind::TooLarge, "planar_code writer limited to n <= 255");
        out.put(static_cast<char>(e.n));
        for (VertexId v = 0; v < e.n; ++v) {
            for (Dart d : e.rotation[v]) out.put(static_cast<char>(e.dart_head(d) + 1));
            out.put(0);
        }
    }
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "n = " << n << "\n";
    os << "m = " << m << "\n";
    os << "digirth = " << digirth << "\n";
    os << "mode = " << mode << "\n";
    os << "blocks = " << blocks << "\n";
    os << "separators_used = " << separators_used << "\n";
    os << "tutte_queries = " << tutte_queries << "\n";
    os << "branch_two_colour = " << branch_two_colour << "\n";
    os << "branch_one_colour = " << branch_one_colour << "\n";
    os << "branch_apex = " << branch_apex << "\n";
    os << "branch_b_choice = " << branch_b_choice << "\n";
    os << "fallback_engaged = " << (fallback_engaged ? 1 : 0) << "\n";
    os << "seed = " << seed << "\n";
    os << "colouring = " << colouring << "\n";
    os << "verification = " << verification << "\n";
    os << "time_wall_ms = " << time_wall_ms << "\n";
    return os.str();
}

} // namespace dichroma::io
