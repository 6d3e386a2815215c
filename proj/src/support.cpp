#include "radsupp/support.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace radsupp {

Multidegree::Multidegree(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw Error("multidegree must be non-empty");
  if (members_.front() < 1) throw Error("multidegree labels are 1-based");
}

bool Multidegree::contains(int label) const {
  return std::binary_search(members_.begin(), members_.end(), label);
}

Support::Support(int n, std::vector<Multidegree> sets) : n_(n), sets_(std::move(sets)) {
  if (n_ < 1) throw Error("support needs n >= 1");
  if (sets_.empty()) throw Error("support needs at least one multidegree");
  for (const auto& a : sets_) {
    if (a.size() == 0) throw Error("support contains an empty multidegree");
    if (a.max_label() > n_)
      throw Error("label " + std::to_string(a.max_label()) + " exceeds n = " + std::to_string(n_));
  }
}

Support Support::select(const std::vector<std::size_t>& indices) const {
  std::vector<Multidegree> picked;
  picked.reserve(indices.size());
  for (auto i : indices) picked.push_back(sets_.at(i));
  return Support(n_, std::move(picked));
}

std::string Support::to_text() const {
  std::ostringstream out;
  for (std::size_t v = 0; v < sets_.size(); ++v) {
    if (v) out << "; ";
    const auto& mem = sets_[v].members();
    for (std::size_t t = 0; t < mem.size(); ++t) out << (t ? " " : "") << mem[t];
  }
  return out.str();
}

Support parse_support_text(std::string_view text, std::optional<int> n) {
  std::vector<Multidegree> sets;
  std::vector<int> current;
  std::size_t set_start = 0;
  int max_label = 0;

  auto close_set = [&](std::size_t pos) {
    if (current.empty()) throw ParseError("empty multidegree", set_start);
    std::vector<int> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("repeated label inside a multidegree", set_start);
    sets.emplace_back(std::move(current));
    current.clear();
    set_start = pos + 1;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ';') {
      close_set(i);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw ParseError("label too large", start);
        ++i;
      }
      if (value < 1) throw ParseError("labels are 1-based", start);
      if (n && value > *n)
        throw ParseError("label " + std::to_string(value) + " outside [1," + std::to_string(*n) + "]",
                         start);
      current.push_back(static_cast<int>(value));
      max_label = std::max(max_label, static_cast<int>(value));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  close_set(text.size());
  return Support(n.value_or(max_label), std::move(sets));
}

Support parse_support_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("sets"))
    throw ParseError("expected an object with keys \"n\" and \"sets\"", 0);
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer", 0);
  int n = doc["n"].get<int>();
  if (n < 1) throw ParseError("\"n\" must be positive", 0);
  if (!doc["sets"].is_array() || doc["sets"].empty())
    throw ParseError("\"sets\" must be a non-empty array", 0);
  std::vector<Multidegree> sets;
  std::size_t idx = 0;
  for (const auto& s : doc["sets"]) {
    if (!s.is_array() || s.empty())
      throw ParseError("set " + std::to_string(idx) + " is empty or not an array", 0);
    std::vector<int> labels;
    for (const auto& x : s) {
      if (!x.is_number_integer()) throw ParseError("set " + std::to_string(idx) + ": non-integer label", 0);
      int label = x.get<int>();
      if (label < 1 || label > n)
        throw ParseError("set " + std::to_string(idx) + ": label " + std::to_string(label) +
                             " outside [1," + std::to_string(n) + "]",
                         0);
      if (std::find(labels.begin(), labels.end(), label) != labels.end())
        throw ParseError("set " + std::to_string(idx) + ": repeated label", 0);
      labels.push_back(label);
    }
    sets.emplace_back(std::move(labels));
    ++idx;
  }
  return Support(n, std::move(sets));
}

Support parse_support(std::string_view text, std::optional<int> n) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_support_json(text);
  return parse_support_text(text, n);
}

// ---------------------------------------------------------------------------

LabeledMultigraph::LabeledMultigraph(int vertex_count, std::vector<LabeledEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  between_.assign(vertex_count_, std::vector<std::vector<int>>(vertex_count_));
  for (auto& e : edges_) {
    if (e.v == e.w) throw Error("labelled graph cannot have loops");
    if (e.v > e.w) std::swap(e.v, e.w);
    if (e.v < 0 || e.w >= vertex_count_) throw Error("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error("duplicate labelled edge");
  for (const auto& e : edges_) {
    between_[e.v][e.w].push_back(e.label);
    between_[e.w][e.v].push_back(e.label);
  }
  for (auto& row : between_)
    for (auto& cell : row) std::sort(cell.begin(), cell.end());
}

bool LabeledMultigraph::has_edge(int v, int w, int label) const {
  if (v < 0 || w < 0 || v >= vertex_count_ || w >= vertex_count_) return false;
  const auto& cell = between_[v][w];
  return std::binary_search(cell.begin(), cell.end(), label);
}

std::vector<int> LabeledMultigraph::labels_between(int v, int w) const { return between_.at(v).at(w); }

LabeledMultigraph build_graph(const Support& support) {
  std::vector<LabeledEdge> edges;
  const int s = static_cast<int>(support.size());
  for (int v = 0; v < s; ++v)
    for (int w = v + 1; w < s; ++w)
      for (int j : support[v].members())
        if (support[w].contains(j)) edges.push_back({v, w, j});
  return LabeledMultigraph(s, std::move(edges));
}

// ---------------------------------------------------------------------------

bool LabeledCycle::has_distinct_labels() const {
  std::vector<int> l = labels;
  std::sort(l.begin(), l.end());
  return std::adjacent_find(l.begin(), l.end()) == l.end();
}

bool LabeledCycle::has_constant_labels() const {
  return std::all_of(labels.begin(), labels.end(), [&](int j) { return j == labels.front(); });
}

namespace {

LabeledCycle rotated(const LabeledCycle& c, std::size_t r) {
  LabeledCycle out;
  const std::size_t k = c.length();
  for (std::size_t t = 0; t < k; ++t) {
    out.vertices.push_back(c.vertices[(r + t) % k]);
    out.labels.push_back(c.labels[(r + t) % k]);
  }
  return out;
}

LabeledCycle reversed(const LabeledCycle& c) {
  // v1, vk, ..., v2 with labels jk, ..., j1
  LabeledCycle out;
  const std::size_t k = c.length();
  out.vertices.push_back(c.vertices[0]);
  for (std::size_t t = k - 1; t >= 1; --t) out.vertices.push_back(c.vertices[t]);
  for (std::size_t t = k; t-- > 0;) out.labels.push_back(c.labels[t]);
  return out;
}

}  // namespace

LabeledCycle LabeledCycle::canonical() const {
  if (vertices.empty()) return *this;
  auto lowest = std::min_element(vertices.begin(), vertices.end()) - vertices.begin();
  LabeledCycle fwd = rotated(*this, static_cast<std::size_t>(lowest));
  LabeledCycle bwd = reversed(fwd);
  auto key = [](const LabeledCycle& c) { return std::tie(c.vertices, c.labels); };
  return key(bwd) < key(fwd) ? bwd : fwd;
}

bool LabeledCycle::is_cycle_of(const LabeledMultigraph& graph) const {
  const std::size_t k = vertices.size();
  if (k < 2 || labels.size() != k) return false;
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t t = 0; t < k; ++t)
    if (!graph.has_edge(vertices[t], vertices[(t + 1) % k], labels[t])) return false;
  // a 2-cycle must use two different parallel edges
  if (k == 2 && labels[0] == labels[1]) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SupportVerdict is_radical_support(const Support& support) {
  const int n = support.n();
  const int s = static_cast<int>(support.size());
  // nodes 0..n-1 are labels 1..n, nodes n..n+s-1 are generators
  UnionFind uf(n + s);
  std::vector<std::vector<int>> adj(n + s);
  std::vector<char> active(n + s, 0);
  IncidenceForest forest;

  for (int v = 0; v < s; ++v) {
    const int gv = n + v;
    active[gv] = 1;
    for (int j : support[v].members()) {
      const int lj = j - 1;
      active[lj] = 1;
      if (uf.find(lj) != uf.find(gv)) {
        uf.unite(lj, gv);
        adj[lj].push_back(gv);
        adj[gv].push_back(lj);
        forest.incidences.emplace_back(j, v);
        continue;
      }
      // Closing incidence: the forest path gv -> ... -> lj plus (lj, gv) is
      // an alternating cycle generator, label, generator, ..., label.
      std::vector<int> prev(n + s, -1);
      std::queue<int> queue;
      queue.push(gv);
      prev[gv] = gv;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        if (x == lj) break;
        for (int y : adj[x])
          if (prev[y] < 0) {
            prev[y] = x;
            queue.push(y);
          }
      }
      std::vector<int> path;
      for (int x = lj; x != gv; x = prev[x]) path.push_back(x);
      path.push_back(gv);
      std::reverse(path.begin(), path.end());  // gv, l1, g2, l2, ..., gk, lj

      LabeledCycle cycle;
      for (std::size_t t = 0; t < path.size(); t += 2) {
        cycle.vertices.push_back(path[t] - n);
        cycle.labels.push_back(path[t + 1] + 1);
      }
      SupportVerdict verdict;
      verdict.is_radical_support = false;
      verdict.cycle = tighten_cycle(support, cycle);
      return verdict;
    }
  }

  std::set<int> roots;
  for (int x = 0; x < n + s; ++x)
    if (active[x]) roots.insert(uf.find(x));
  forest.components = static_cast<int>(roots.size());
  SupportVerdict verdict;
  verdict.is_radical_support = true;
  verdict.forest = std::move(forest);
  return verdict;
}

std::vector<LabeledCycle> enumerate_cycles(const LabeledMultigraph& graph, int max_len) {
  if (max_len < 2) throw Error("enumerate_cycles needs max_len >= 2");
  const int count = graph.vertex_count();
  std::set<LabeledCycle> found;
  std::vector<int> path;
  std::vector<char> on_path(count, 0);

  auto emit_labelings = [&]() {
    const std::size_t k = path.size();
    std::vector<std::vector<int>> choices(k);
    for (std::size_t t = 0; t < k; ++t) choices[t] = graph.labels_between(path[t], path[(t + 1) % k]);
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      LabeledCycle c;
      c.vertices = path;
      for (std::size_t t = 0; t < k; ++t) c.labels.push_back(choices[t][pick[t]]);
      if (k > 2 || c.labels[0] != c.labels[1]) found.insert(c.canonical());
      std::size_t t = 0;
      while (t < k && ++pick[t] == choices[t].size()) pick[t++] = 0;
      if (t == k) break;
    }
  };

  auto dfs = [&](auto&& self, int start) -> void {
    const int last = path.back();
    if (path.size() >= 2 && !graph.labels_between(last, start).empty()) emit_labelings();
    if (static_cast<int>(path.size()) == max_len) return;
    for (int next = start + 1; next < count; ++next) {
      if (on_path[next] || graph.labels_between(last, next).empty()) continue;
      on_path[next] = 1;
      path.push_back(next);
      self(self, start);
      path.pop_back();
      on_path[next] = 0;
    }
  };

  for (int start = 0; start < count; ++start) {
    path.assign(1, start);
    on_path[start] = 1;
    dfs(dfs, start);
    on_path[start] = 0;
  }
  return {found.begin(), found.end()};
}

LabeledCycle reduce_to_distinct_labels(const LabeledMultigraph& graph, const LabeledCycle& cycle) {
  if (!cycle.is_cycle_of(graph)) throw Error("reduce_to_distinct_labels: not a cycle of the graph");
  if (cycle.has_constant_labels()) throw Error("reduce_to_distinct_labels: cycle labels are constant");

  LabeledCycle c = cycle;
  while (!c.has_distinct_labels()) {
    const std::size_t k = c.length();
    // a repeated label L followed by a different label
    std::size_t a = k;
    for (std::size_t t = 0; t < k && a == k; ++t) {
      const int label = c.labels[t];
      if (std::count(c.labels.begin(), c.labels.end(), label) > 1 && c.labels[(t + 1) % k] != label)
        a = t;
    }
    c = rotated(c, a);  // v0 -L-> v1 -j1-> v2 ..., j1 != L
    const int label = c.labels[0];
    std::size_t p = 2;
    while (c.labels[p] != label) ++p;  // another L on edge (v_p, v_{p+1}), 2 <= p <= k-1
    if (!graph.has_edge(c.vertices[1], c.vertices[p], label))
      throw Error("reduce_to_distinct_labels: shortcut edge missing from graph");
    LabeledCycle shorter;
    shorter.vertices.assign(c.vertices.begin() + 1, c.vertices.begin() + static_cast<long>(p) + 1);
    shorter.labels.assign(c.labels.begin() + 1, c.labels.begin() + static_cast<long>(p));
    shorter.labels.push_back(label);
    c = std::move(shorter);
  }
  return c.canonical();
}

LabeledCycle tighten_cycle(const Support& support, const LabeledCycle& cycle) {
  if (!cycle.has_distinct_labels()) throw Error("tighten_cycle: labels must be distinct");
  LabeledCycle c = cycle;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t k = c.length();
    for (std::size_t a = 0; a < k && !changed; ++a) {
      LabeledCycle r = rotated(c, a);
      // edges 0 and k-1 touch r.vertices[0]; look for any other cycle label in A_{v0}
      for (std::size_t b = 1; b + 1 < k; ++b) {
        if (!support[static_cast<std::size_t>(r.vertices[0])].contains(r.labels[b])) continue;
        LabeledCycle shorter;
        shorter.vertices.assign(r.vertices.begin(), r.vertices.begin() + static_cast<long>(b) + 1);
        shorter.labels.assign(r.labels.begin(), r.labels.begin() + static_cast<long>(b) + 1);
        c = std::move(shorter);
        changed = true;
        break;
      }
    }
  }
  return c.canonical();
}

std::vector<int> min_ring_dims(const Support& support) {
  std::vector<int> m(static_cast<std::size_t>(support.n()), 0);
  for (const auto& a : support.sets())
    for (int j : a.members()) ++m[static_cast<std::size_t>(j - 1)];
  for (auto& x : m) x = std::max(x, 1);
  return m;
}

}  // namespace radsupp
