#include "pp/periodic_graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "pp/bits.hpp"

namespace pp {

namespace {

void check_endpoint(int n, int v, const std::string& what) {
    if (v < 0 || v >= n)
        throw graph_error(what + ": vertex " + std::to_string(v) + " out of range (n = " +
                          std::to_string(n) + ")");
}

std::vector<Edge> normalize_snapshot(int n, int idx, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        check_endpoint(n, edges[i].first, "snapshot " + std::to_string(idx));
        check_endpoint(n, edges[i].second, "snapshot " + std::to_string(idx));
        if (i > 0 && edges[i] == edges[i - 1])
            throw graph_error("duplicate edge " + std::to_string(edges[i].first) + " " +
                              std::to_string(edges[i].second) + " in snapshot " +
                              std::to_string(idx));
    }
    return edges;
}

}  // namespace

StaticGraph::StaticGraph(int n_in, std::vector<Edge> edges_in) : n(n_in) {
    if (n < 1) throw graph_error("vertex count must be positive");
    edges = normalize_snapshot(n, 0, std::move(edges_in));
}

PeriodicGraph::PeriodicGraph(int n, int p, std::vector<std::vector<Edge>> snapshots)
    : n_(n), p_(p) {
    if (n_ < 1) throw graph_error("vertex count must be positive");
    if (p_ < 1) throw graph_error("period must be positive");
    if (snapshots.size() != static_cast<std::size_t>(p_))
        throw graph_error("expected " + std::to_string(p_) + " snapshots, got " +
                          std::to_string(snapshots.size()));
    snaps_.reserve(snapshots.size());
    for (int i = 0; i < p_; ++i)
        snaps_.push_back(normalize_snapshot(n_, i, std::move(snapshots[static_cast<std::size_t>(i)])));

    // Playability: every vertex needs a move in every snapshot.
    for (int i = 0; i < p_; ++i) {
        std::vector<char> has_out(static_cast<std::size_t>(n_), 0);
        for (const Edge& e : snaps_[static_cast<std::size_t>(i)]) has_out[static_cast<std::size_t>(e.first)] = 1;
        for (int v = 0; v < n_; ++v)
            if (!has_out[static_cast<std::size_t>(v)])
                throw graph_error("unplayable: vertex " + std::to_string(v) +
                                  " has no outgoing edge in snapshot " + std::to_string(i));
    }
}

bool PeriodicGraph::has_edge(int i, int u, int v) const {
    const auto& es = snaps_[static_cast<std::size_t>(i)];
    return std::binary_search(es.begin(), es.end(), Edge{u, v});
}

std::size_t PeriodicGraph::edge_count() const {
    std::size_t m = 0;
    for (const auto& es : snaps_) m += es.size();
    return m;
}

std::string PeriodicGraph::serialize() const {
    std::ostringstream out;
    out << "ptg 1\n";
    out << "n " << n_ << "\n";
    out << "p " << p_ << "\n";
    for (int i = 0; i < p_; ++i) {
        out << "s " << i << "\n";
        for (const Edge& e : snaps_[static_cast<std::size_t>(i)])
            out << "e " << e.first << " " << e.second << "\n";
    }
    return out.str();
}

namespace {

struct Tokenizer {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Next non-empty line, split on whitespace, comments stripped.
    bool next(std::vector<std::string_view>& tokens) {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            tokens.clear();
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
                if (i > start) tokens.push_back(line.substr(start, i - start));
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

int parse_int(std::string_view tok, int line_no, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error(line_no, "expected integer for " + what + ", got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

PeriodicGraph parse_ptg(std::string_view text) {
    Tokenizer tz{text};
    std::vector<std::string_view> tok;

    if (!tz.next(tok)) throw parse_error(1, "empty input, expected header 'ptg 1'");
    if (tok.size() != 2 || tok[0] != "ptg")
        throw parse_error(tz.line_no, "expected header 'ptg 1'");
    if (tok[1] != "1")
        throw parse_error(tz.line_no, "unsupported version '" + std::string(tok[1]) + "'");

    if (!tz.next(tok) || tok.size() != 2 || tok[0] != "n")
        throw parse_error(tz.line_no, "expected 'n <vertices>'");
    int n = parse_int(tok[1], tz.line_no, "vertex count");
    if (n < 1) throw parse_error(tz.line_no, "vertex count must be positive");

    if (!tz.next(tok) || tok.size() != 2 || tok[0] != "p")
        throw parse_error(tz.line_no, "expected 'p <period>'");
    int p = parse_int(tok[1], tz.line_no, "period");
    if (p < 1) throw parse_error(tz.line_no, "period must be positive");

    std::vector<std::vector<Edge>> snaps(static_cast<std::size_t>(p));
    std::vector<std::set<Edge>> seen(static_cast<std::size_t>(p));
    int cur = -1;  // current snapshot index

    auto check_vertex = [&](int v) {
        if (v < 0 || v >= n)
            throw parse_error(tz.line_no,
                              "vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
    };
    auto add_edge = [&](int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (!seen[static_cast<std::size_t>(cur)].insert({u, v}).second)
            throw parse_error(tz.line_no, "duplicate edge " + std::to_string(u) + " " +
                                              std::to_string(v) + " in snapshot " + std::to_string(cur));
        snaps[static_cast<std::size_t>(cur)].push_back({u, v});
    };

    while (tz.next(tok)) {
        if (tok[0] == "s") {
            if (tok.size() != 2) throw parse_error(tz.line_no, "expected 's <index>'");
            int idx = parse_int(tok[1], tz.line_no, "snapshot index");
            if (idx >= 0 && idx <= cur)
                throw parse_error(tz.line_no, "duplicate snapshot header 's " + std::to_string(idx) + "'");
            if (idx != cur + 1 || idx >= p)
                throw parse_error(tz.line_no, "expected snapshot header 's " + std::to_string(cur + 1) +
                                                  "' (period " + std::to_string(p) + ")");
            cur = idx;
        } else if (tok[0] == "e") {
            if (cur < 0) throw parse_error(tz.line_no, "edge before first snapshot header");
            if (tok.size() != 3) throw parse_error(tz.line_no, "expected 'e <u> <v>'");
            add_edge(parse_int(tok[1], tz.line_no, "edge endpoint"),
                     parse_int(tok[2], tz.line_no, "edge endpoint"));
        } else if (tok[0] == "u") {
            if (cur < 0) throw parse_error(tz.line_no, "edge before first snapshot header");
            if (tok.size() != 3) throw parse_error(tz.line_no, "expected 'u <a> <b>'");
            int a = parse_int(tok[1], tz.line_no, "edge endpoint");
            int b = parse_int(tok[2], tz.line_no, "edge endpoint");
            if (a == b) throw parse_error(tz.line_no, "'u' requires distinct endpoints");
            add_edge(a, b);
            add_edge(b, a);
        } else if (tok[0] == "reflexive") {
            if (cur < 0) throw parse_error(tz.line_no, "directive before first snapshot header");
            if (tok.size() != 1) throw parse_error(tz.line_no, "unexpected tokens after 'reflexive'");
            for (int v = 0; v < n; ++v)
                if (seen[static_cast<std::size_t>(cur)].insert({v, v}).second)
                    snaps[static_cast<std::size_t>(cur)].push_back({v, v});
        } else {
            throw parse_error(tz.line_no, "unknown directive '" + std::string(tok[0]) + "'");
        }
    }

    if (cur + 1 < p)
        throw parse_error(tz.line_no, "missing snapshot " + std::to_string(cur + 1) + " (period " +
                                          std::to_string(p) + ")");

    return PeriodicGraph(n, p, std::move(snaps));
}

StaticGraph footprint(const PeriodicGraph& g) {
    std::set<Edge> all;
    for (int i = 0; i < g.period(); ++i)
        for (const Edge& e : g.snapshot(i)) all.insert(e);
    return StaticGraph(g.vertex_count(), std::vector<Edge>(all.begin(), all.end()));
}

GraphClass classify(const PeriodicGraph& g) {
    const int n = g.vertex_count();
    const int p = g.period();

    GraphClass c;
    c.reflexive = true;
    c.symmetric = true;
    c.sourceless = true;
    for (int i = 0; i < p && c.reflexive; ++i)
        for (int v = 0; v < n; ++v)
            if (!g.has_edge(i, v, v)) {
                c.reflexive = false;
                break;
            }
    for (int i = 0; i < p && c.symmetric; ++i)
        for (const Edge& e : g.snapshot(i))
            if (!g.has_edge(i, e.second, e.first)) {
                c.symmetric = false;
                break;
            }
    for (int i = 0; i < p && c.sourceless; ++i) {
        std::vector<char> has_in(static_cast<std::size_t>(n), 0);
        for (const Edge& e : g.snapshot(i)) has_in[static_cast<std::size_t>(e.second)] = 1;
        for (int v = 0; v < n; ++v)
            if (!has_in[static_cast<std::size_t>(v)]) {
                c.sourceless = false;
                break;
            }
    }

    // Temporal connectivity: from every (start time, vertex), a journey of at
    // least one edge must reach every other vertex at some time. Walk the
    // time-unrolled digraph on (slice, vertex) states; one edge per round.
    std::vector<std::vector<int>> out(static_cast<std::size_t>(p * n));
    for (int i = 0; i < p; ++i)
        for (const Edge& e : g.snapshot(i))
            out[static_cast<std::size_t>(i * n + e.first)].push_back(e.second);

    c.temporally_connected = true;
    std::vector<int> stack;
    for (int t = 0; t < p && c.temporally_connected; ++t) {
        for (int u = 0; u < n && c.temporally_connected; ++u) {
            DynBitset visited(static_cast<std::size_t>(p * n));
            DynBitset reached(static_cast<std::size_t>(n));
            std::size_t reached_count = 0;
            stack.clear();
            // Seed with the successors of (t,u): journeys need >= 1 edge.
            for (int w : out[static_cast<std::size_t>(t * n + u)]) {
                int node = ((t + 1) % p) * n + w;
                if (!visited.test(static_cast<std::size_t>(node))) {
                    visited.set(static_cast<std::size_t>(node));
                    stack.push_back(node);
                }
            }
            while (!stack.empty()) {
                int node = stack.back();
                stack.pop_back();
                int s = node / n, x = node % n;
                if (!reached.test(static_cast<std::size_t>(x))) {
                    reached.set(static_cast<std::size_t>(x));
                    if (++reached_count == static_cast<std::size_t>(n)) break;
                }
                for (int w : out[static_cast<std::size_t>(s * n + x)]) {
                    int nxt = ((s + 1) % p) * n + w;
                    if (!visited.test(static_cast<std::size_t>(nxt))) {
                        visited.set(static_cast<std::size_t>(nxt));
                        stack.push_back(nxt);
                    }
                }
            }
            for (int v = 0; v < n; ++v)
                if (v != u && !reached.test(static_cast<std::size_t>(v))) {
                    c.temporally_connected = false;
                    break;
                }
        }
    }
    return c;
}

PeriodicGraph encode_standard(const StaticGraph& g, bool allow_wait, int copies) {
    if (copies < 1) throw graph_error("period must be positive");
    std::set<Edge> es;
    for (const Edge& e : g.edges) {
        es.insert({e.first, e.second});
        es.insert({e.second, e.first});
    }
    if (allow_wait)
        for (int v = 0; v < g.n; ++v) es.insert({v, v});
    std::vector<Edge> snap(es.begin(), es.end());
    std::vector<std::vector<Edge>> snaps(static_cast<std::size_t>(copies), snap);
    return PeriodicGraph(g.n, copies, std::move(snaps));
}

namespace {

// splitmix64; fixed here so generated instances are identical across
// platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace

PeriodicGraph gen_random(int n, int p, int extra_out_degree, std::uint64_t seed, GenFlags flags) {
    if (n < 1) throw graph_error("vertex count must be positive");
    if (p < 1) throw graph_error("period must be positive");
    if (extra_out_degree < 0) throw graph_error("extra out-degree must be non-negative");

    SplitMix64 rng{seed};
    std::vector<std::vector<Edge>> snaps(static_cast<std::size_t>(p));
    std::vector<char> is_out(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < p; ++t) {
        std::set<Edge> es;
        for (int v = 0; v < n; ++v) {
            std::fill(is_out.begin(), is_out.end(), 0);
            int degree = 0;
            int w = rng.below(n);
            es.insert({v, w});
            is_out[static_cast<std::size_t>(w)] = 1;
            ++degree;
            for (int j = 0; j < extra_out_degree && degree < n; ++j) {
                int x = rng.below(n);
                while (is_out[static_cast<std::size_t>(x)]) x = rng.below(n);
                es.insert({v, x});
                is_out[static_cast<std::size_t>(x)] = 1;
                ++degree;
            }
        }
        if (flags.symmetric) {
            std::set<Edge> closed = es;
            for (const Edge& e : es) closed.insert({e.second, e.first});
            es = std::move(closed);
        }
        if (flags.reflexive)
            for (int v = 0; v < n; ++v) es.insert({v, v});
        snaps[static_cast<std::size_t>(t)].assign(es.begin(), es.end());
    }
    return PeriodicGraph(n, p, std::move(snaps));
}

}  // namespace pp
