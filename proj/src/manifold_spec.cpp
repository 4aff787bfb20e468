#include "wrt/manifold_spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wrt {

namespace {

PlumbingGraph single_vertex(std::int64_t framing) {
    PlumbingGraph g;
    g.vertices.push_back({0, framing});
    return g;
}

PlumbingGraph sigma235_star() {
    // Star presentation of the Poincare sphere matching the E8 orientation.
    return seifert_graph(1, {{2, 1}, {3, 1}, {5, 1}});
}

} // namespace

PlumbingGraph parse_manifold(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("manifold: empty spec");
    if (spec == "s3") return {};
    if (spec == "s1xs2") return single_vertex(0);
    if (spec == "poincare") return poincare_sphere();
    if (spec == "sigma235") return sigma235_star();
    if (spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("manifold: cannot read " + spec.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        return plumbing_from_json(buf.str());
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("manifold: unknown shorthand '" + spec + "'");
    std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (head == "lens") {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("lens: expected lens:p,q");
        return lens_graph(std::stoull(rest.substr(0, comma)), std::stoull(rest.substr(comma + 1)));
    }
    if (head == "seifert") {
        auto semi = rest.find(';');
        std::int64_t e0 = std::stoll(semi == std::string::npos ? rest : rest.substr(0, semi));
        std::vector<std::pair<std::uint64_t, std::uint64_t>> fibers;
        if (semi != std::string::npos) {
            std::istringstream fs(rest.substr(semi + 1));
            std::string tok;
            while (std::getline(fs, tok, ',')) {
                auto slash = tok.find('/');
                if (slash == std::string::npos)
                    throw std::invalid_argument("seifert: fiber must be a/b");
                fibers.emplace_back(std::stoull(tok.substr(0, slash)),
                                    std::stoull(tok.substr(slash + 1)));
            }
        }
        return seifert_graph(e0, fibers);
    }
    throw std::invalid_argument("manifold: unknown shorthand '" + spec + "'");
}

IntMat parse_linking_input(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot read " + spec.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        nlohmann::json j = nlohmann::json::parse(buf.str());
        if (j.contains("matrix")) {
            const auto& rows = j["matrix"];
            IntMat b(rows.size(), rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != rows.size())
                    throw std::invalid_argument("matrix input must be square");
                for (std::size_t c = 0; c < rows.size(); ++c)
                    b.at(i, c) = mpz_class(rows[i][c].get<long>());
            }
            if (!b.is_symmetric()) throw std::invalid_argument("matrix input must be symmetric");
            return b;
        }
        PlumbingGraph g = plumbing_from_json(buf.str());
        return linking_matrix(g).matrix;
    }
    return linking_matrix(parse_manifold(spec)).matrix;
}

std::string builtin_manifolds_json() {
    nlohmann::json j;
    auto add = [&](const std::string& name, const PlumbingGraph& g) {
        j[name] = nlohmann::json::parse(plumbing_to_json(g));
    };
    add("s3", {});
    add("s1xs2", single_vertex(0));
    add("lens_2_1", lens_graph(2, 1));
    add("lens_3_1", lens_graph(3, 1));
    add("lens_5_1", lens_graph(5, 1));
    add("lens_5_2", lens_graph(5, 2));
    add("lens_7_1", lens_graph(7, 1));
    add("poincare", poincare_sphere());
    add("sigma235_star", sigma235_star());
    return j.dump(2);
}

} // namespace wrt
