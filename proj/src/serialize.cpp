#include "perfdiv/serialize.hpp"

#include "perfdiv/graph6.hpp"

namespace perfdiv {

nlohmann::json to_json(VertexSet s)
{
    return s.to_vector();
}

nlohmann::json to_json(const Witness& w)
{
    return {{"kind", w.kind}, {"vertices", w.vertices}};
}

nlohmann::json to_json(const PartitionCertificate& p)
{
    return {
        {"kind", p.kind == PartitionCertificate::Kind::PD ? "PD" : "TwoPerfect"},
        {"A", to_json(p.a)},
        {"B", to_json(p.b)},
    };
}

nlohmann::json to_json(const ColoringCertificate& c)
{
    return {{"colors", c.colors}, {"palette", c.palette}};
}

namespace {

    nlohmann::json node_json(const ModularTree& t, int id)
    {
        const ModularTree::Node& node = t.nodes[id];
        nlohmann::json j;
        switch (node.kind) {
        case ModularTree::Kind::leaf:
            j["kind"] = "leaf";
            j["vertex"] = node.vertex;
            return j;
        case ModularTree::Kind::prime:
            j["kind"] = "prime";
            break;
        case ModularTree::Kind::series:
            j["kind"] = "series";
            break;
        case ModularTree::Kind::parallel:
            j["kind"] = "parallel";
            break;
        }
        j["quotient"] = emit_graph6(node.quotient);
        j["block"] = to_json(node.block);
        nlohmann::json children = nlohmann::json::array();
        for (int c : node.children)
            children.push_back(node_json(t, c));
        j["children"] = std::move(children);
        return j;
    }

} // namespace

nlohmann::json to_json(const ModularTree& t)
{
    return node_json(t, t.root);
}

} // namespace perfdiv
