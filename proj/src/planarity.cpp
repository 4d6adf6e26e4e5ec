#include <algorithm>
#include <sstream>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include "dichroma/embedding.hpp"

namespace dichroma {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

} // namespace

PlaneEmbedding compute_embedding_undirected(int n, const std::vector<Edge>& edges) {
    BoostGraph g(n);
    for (size_t i = 0; i < edges.size(); ++i)
        boost::add_edge(edges[i].u, edges[i].v, static_cast<int>(i), g);

    std::vector<std::vector<BoostEdge>> emb(n);
    std::vector<BoostEdge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g,
        boost::boyer_myrvold_params::embedding = emb.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (!planar) {
        std::ostringstream msg;
        msg << "graph is not planar; Kuratowski subgraph edges:";
        for (const BoostEdge& e : kuratowski)
            msg << " " << boost::source(e, g) << "-" << boost::target(e, g);
        throw Error(ErrorKind::NotPlanar, msg.str());
    }

    auto index = boost::get(boost::edge_index, g);
    std::vector<std::vector<Dart>> rotation(n);
    for (VertexId v = 0; v < n; ++v)
        for (const BoostEdge& be : emb[v]) {
            int e = index[be];
            rotation[v].push_back(2 * e + (edges[e].u == v ? 0 : 1));
        }
    return make_embedding(n, edges, std::move(rotation));
}

PlaneEmbedding compute_embedding(const Digraph& d) {
    return compute_embedding_undirected(d.vertex_count(), d.undirected_edges());
}

} // namespace dichroma
