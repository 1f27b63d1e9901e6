#include "mumford/canonical.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mumford {

namespace {

// Encodes the stratum with vertices taken in the given order and legs
// renumbered accordingly. The encoding determines the stratum up to
// isomorphism-respecting relabeling, so it doubles as the canonical key.
std::string encode_under_order(const DecoratedStratum& s, const std::vector<int>& order) {
  size_t V = s.vertices.size();
  std::vector<int> pos(V);
  for (size_t i = 0; i < V; ++i) pos[order[i]] = static_cast<int>(i);

  std::map<int, int> partner_vertex;  // node leg -> original partner vertex
  {
    std::map<int, int> leg_vertex;
    for (size_t v = 0; v < V; ++v)
      for (int l : s.vertices[v].legs) leg_vertex[l] = static_cast<int>(v);
    for (const auto& [a, b] : s.edges) {
      partner_vertex[a] = leg_vertex[b];
      partner_vertex[b] = leg_vertex[a];
    }
  }

  // New leg ids, assigned per vertex in canonical leg order: marked legs by
  // label first, then node legs by canonical partner position.
  std::map<int, int> new_leg;
  std::vector<std::vector<std::pair<std::pair<int, int>, int>>> leg_desc(V);
  for (size_t i = 0; i < V; ++i) {
    int ov = order[i];
    for (int l : s.vertices[ov].legs) {
      if (auto m = s.marking_of_leg(l))
        leg_desc[i].push_back({{0, *m}, l});
      else
        leg_desc[i].push_back({{1, pos[partner_vertex.at(l)]}, l});
    }
    std::sort(leg_desc[i].begin(), leg_desc[i].end());
  }
  int next = 0;
  for (size_t i = 0; i < V; ++i)
    for (auto& [desc, l] : leg_desc[i]) new_leg[l] = next++;

  std::ostringstream os;
  for (size_t i = 0; i < V; ++i) {
    int ov = order[i];
    os << "V" << s.vertices[ov].genus << "[";
    for (const auto& [desc, l] : leg_desc[i]) {
      (void)l;
      if (desc.first == 0)
        os << "m" << desc.second << ",";
      else
        os << "n" << desc.second << ",";
    }
    os << "]";
    // Decorations with legs renumbered, sorted for a canonical multiset.
    std::vector<DecorationFactor> dec = s.decorations[ov];
    for (auto& f : dec) {
      if (auto* p = std::get_if<PsiPow>(&f)) p->leg = new_leg.at(p->leg);
      if (auto* m = std::get_if<MumfordFactor>(&f)) m->leg = new_leg.at(m->leg);
    }
    std::sort(dec.begin(), dec.end(), factor_less);
    os << "{";
    for (const auto& f : dec) os << factor_to_string(f) << ",";
    os << "};";
  }
  return os.str();
}

// Invariant used only to restrict the permutation search.
std::string vertex_invariant(const DecoratedStratum& s, int v) {
  std::ostringstream os;
  os << "g" << s.vertices[v].genus << "L" << s.vertices[v].legs.size() << "M";
  std::vector<int> marks;
  for (int l : s.vertices[v].legs)
    if (auto m = s.marking_of_leg(l)) marks.push_back(*m);
  std::sort(marks.begin(), marks.end());
  for (int m : marks) os << m << ",";
  os << "D";
  std::vector<std::string> shapes;
  for (const auto& f : s.decorations[v]) {
    DecorationFactor g = f;
    // Blank out leg ids; keep marked-vs-node distinction.
    auto blank = [&](int leg) {
      auto m = s.marking_of_leg(leg);
      return m ? *m : -1;
    };
    if (auto* p = std::get_if<PsiPow>(&g)) p->leg = blank(p->leg);
    if (auto* m = std::get_if<MumfordFactor>(&g)) m->leg = blank(m->leg);
    shapes.push_back(factor_to_string(g));
  }
  std::sort(shapes.begin(), shapes.end());
  for (const auto& sh : shapes) os << sh << ",";
  return os.str();
}

DecoratedStratum rebuild_under_order(const DecoratedStratum& s, const std::vector<int>& order) {
  size_t V = s.vertices.size();
  std::vector<int> pos(V);
  for (size_t i = 0; i < V; ++i) pos[order[i]] = static_cast<int>(i);

  std::map<int, int> partner_vertex;
  {
    std::map<int, int> leg_vertex;
    for (size_t v = 0; v < V; ++v)
      for (int l : s.vertices[v].legs) leg_vertex[l] = static_cast<int>(v);
    for (const auto& [a, b] : s.edges) {
      partner_vertex[a] = leg_vertex[b];
      partner_vertex[b] = leg_vertex[a];
    }
  }
  std::map<int, int> new_leg;
  int next = 0;
  for (size_t i = 0; i < V; ++i) {
    int ov = order[i];
    std::vector<std::pair<std::pair<int, int>, int>> desc;
    for (int l : s.vertices[ov].legs) {
      if (auto m = s.marking_of_leg(l))
        desc.push_back({{0, *m}, l});
      else
        desc.push_back({{1, pos[partner_vertex.at(l)]}, l});
    }
    std::sort(desc.begin(), desc.end());
    for (auto& [d, l] : desc) {
      (void)d;
      new_leg[l] = next++;
    }
  }

  DecoratedStratum r;
  r.vertices.resize(V);
  r.decorations.resize(V);
  for (size_t i = 0; i < V; ++i) {
    int ov = order[i];
    r.vertices[i].genus = s.vertices[ov].genus;
    for (int l : s.vertices[ov].legs) r.vertices[i].legs.push_back(new_leg.at(l));
    std::sort(r.vertices[i].legs.begin(), r.vertices[i].legs.end());
    r.decorations[i] = s.decorations[ov];
    for (auto& f : r.decorations[i]) {
      if (auto* p = std::get_if<PsiPow>(&f)) p->leg = new_leg.at(p->leg);
      if (auto* m = std::get_if<MumfordFactor>(&f)) m->leg = new_leg.at(m->leg);
    }
    std::sort(r.decorations[i].begin(), r.decorations[i].end(), factor_less);
  }
  for (const auto& [a, b] : s.edges) {
    int na = new_leg.at(a), nb = new_leg.at(b);
    r.edges.emplace_back(std::min(na, nb), std::max(na, nb));
  }
  std::sort(r.edges.begin(), r.edges.end());
  for (const auto& [label, leg] : s.markings) r.markings[label] = new_leg.at(leg);
  return r;
}

std::mutex memo_mutex;
std::unordered_map<std::string, CanonicalForm> memo;

}  // namespace

CanonicalForm canonical_form(const DecoratedStratum& s) {
  size_t V = s.vertices.size();
  if (V > 8) throw std::invalid_argument("canonical_form: more than 8 vertices");

  std::vector<int> identity(V);
  for (size_t i = 0; i < V; ++i) identity[i] = static_cast<int>(i);
  std::string raw = encode_under_order(s, identity);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(raw);
    if (it != memo.end()) return it->second;
  }

  // Group vertices by invariant; only permutations within groups can be
  // isomorphisms.
  std::vector<std::pair<std::string, int>> tagged;
  for (size_t v = 0; v < V; ++v) tagged.push_back({vertex_invariant(s, static_cast<int>(v)), static_cast<int>(v)});
  std::sort(tagged.begin(), tagged.end());
  std::vector<std::vector<int>> groups;
  for (size_t i = 0; i < V; ++i) {
    if (i == 0 || tagged[i].first != tagged[i - 1].first) groups.emplace_back();
    groups.back().push_back(tagged[i].second);
  }

  std::string best;
  long best_count = 0;
  std::vector<int> best_order;
  std::vector<std::vector<int>> perms(groups.size());
  for (size_t gi = 0; gi < groups.size(); ++gi) perms[gi] = groups[gi];

  // Odometer over per-group permutations.
  std::vector<int> order;
  auto assemble = [&]() {
    order.clear();
    for (const auto& p : perms)
      for (int v : p) order.push_back(v);
  };
  size_t gi = 0;
  // Reset all groups to sorted order (they already are).
  while (true) {
    assemble();
    std::string enc = encode_under_order(s, order);
    if (best.empty() || enc < best) {
      best = enc;
      best_count = 1;
      best_order = order;
    } else if (enc == best) {
      ++best_count;
    }
    // Advance odometer.
    gi = 0;
    while (gi < perms.size() && !std::next_permutation(perms[gi].begin(), perms[gi].end())) {
      std::sort(perms[gi].begin(), perms[gi].end());
      ++gi;
    }
    if (gi == perms.size()) break;
  }

  CanonicalForm result{best, best_count, rebuild_under_order(s, best_order)};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(raw, result);
  }
  return result;
}

}  // namespace mumford
