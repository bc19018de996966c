#include "rover/canonical.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rover/errors.hpp"

namespace rover {

namespace {

// One cylinder of the decomposition: the domain cylinder (root, addr) maps
// onto the range cylinder at raddr (within a fixed range root) with the tail
// acted on by word.
struct Item {
  int droot;
  Address addr;
  Address raddr;
  GrigWord word;
};

bool settled(const GrigWord& w) { return w.size() <= 1; }

// Split items until every tail is a single nucleus letter or empty.
void split_to_nucleus(std::vector<Item>& items, int depth_cap) {
  for (int round = 0;; ++round) {
    bool any = false;
    std::vector<Item> next;
    next.reserve(items.size());
    for (Item& it : items) {
      if (settled(it.word)) {
        next.push_back(std::move(it));
        continue;
      }
      any = true;
      for (char bit : {'0', '1'}) {
        auto [out, res] = word_eval(it.word, std::string(1, bit));
        next.push_back(Item{it.droot, it.addr + bit, it.raddr + out, word_reduce(res)});
      }
    }
    items = std::move(next);
    if (!any) return;
    require(round < depth_cap, Errc::contraction_cap_exceeded,
            "canonical form failed to contract");
  }
}

char tail_char(const GrigWord& w) { return w.empty() ? 'e' : w.letters[0]; }

// Merge sibling pairs whose combined action is again a nucleus letter:
// (e,e)->e, (e,b)->d, (s,c)->b, (s,d)->c aligned, (e,e)->s crossed.  The
// coarsest such decomposition is unique, so greedy merging canonicalizes.
void coarsen(std::vector<Item>& items) {
  std::map<std::pair<int, Address>, std::pair<Address, char>> by_addr;
  for (const Item& it : items) by_addr[{it.droot, it.addr}] = {it.raddr, tail_char(it.word)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = by_addr.begin(); it != by_addr.end(); ++it) {
      const auto& [droot, addr] = it->first;
      if (addr.empty() || addr.back() != '0') continue;
      Address sib = addr.substr(0, addr.size() - 1) + '1';
      auto jt = by_addr.find({droot, sib});
      if (jt == by_addr.end()) continue;
      const auto& [v0, c0] = it->second;
      const auto& [v1, c1] = jt->second;
      if (v0.empty() || v1.empty()) continue;
      Address p0 = v0.substr(0, v0.size() - 1);
      if (p0 != v1.substr(0, v1.size() - 1)) continue;
      char merged = 0;
      if (v0.back() == '0' && v1.back() == '1') {
        if (c0 == 'e' && c1 == 'e') merged = 'e';
        else if (c0 == 'e' && c1 == 'b') merged = 'd';
        else if (c0 == 's' && c1 == 'c') merged = 'b';
        else if (c0 == 's' && c1 == 'd') merged = 'c';
      } else if (v0.back() == '1' && v1.back() == '0' && c0 == 'e' && c1 == 'e') {
        merged = 's';
      }
      if (!merged) continue;
      Address parent = addr.substr(0, addr.size() - 1);
      by_addr.erase(jt);
      by_addr.erase(it);
      by_addr[{droot, parent}] = {p0, merged};
      changed = true;
      break;
    }
  }
  std::vector<Item> out;
  out.reserve(by_addr.size());
  for (const auto& [k, v] : by_addr) {
    GrigWord w;
    if (v.second != 'e') w = GrigWord::letter(v.second);
    out.push_back(Item{k.first, k.second, v.first, std::move(w)});
  }
  items = std::move(out);
}

std::string encode(const std::vector<Item>& items) {
  std::string s;
  for (const Item& it : items) {
    s += std::to_string(it.droot);
    s += ',';
    s += it.addr;
    s += '>';
    s += it.raddr;
    s += ':';
    s += tail_char(it.word);
    s += ';';
  }
  return s;
}

std::vector<std::vector<Item>> items_by_range_root(const GroupoidElement& g) {
  std::vector<std::vector<Item>> per_root(g.range_roots());
  int n = g.inner_size();
  for (int j = 0; j < n; ++j) {
    auto [dr, a] = leaf_location(g.f1, j);
    auto [rr, v] = leaf_location(g.f2, g.alpha(j));
    per_root[rr].push_back(Item{dr, a, v, GrigWord::from_klein(g.labels[j])});
  }
  return per_root;
}

}  // namespace

std::string element_key(const GroupoidElement& g, int depth_cap) {
  auto per_root = items_by_range_root(g);
  std::string key = "E" + std::to_string(g.domain_roots()) + "|" +
                    std::to_string(g.range_roots()) + "|";
  for (int r = 0; r < static_cast<int>(per_root.size()); ++r) {
    std::vector<Item>& items = per_root[r];
    split_to_nucleus(items, depth_cap);
    coarsen(items);
    key += "[" + encode(items) + "]";
  }
  return key;
}

std::string coset_key(const GroupoidElement& g, int depth_cap) {
  auto per_root = items_by_range_root(g);
  std::vector<std::string> pieces;
  pieces.reserve(per_root.size());
  for (std::vector<Item>& items : per_root) {
    std::string best;
    for (Klein twist : {Klein::E, Klein::B, Klein::C, Klein::D}) {
      std::vector<Item> twisted;
      twisted.reserve(items.size());
      GrigWord tw = GrigWord::from_klein(twist);
      for (const Item& it : items) {
        auto [out, res] = word_eval(tw, it.raddr);
        twisted.push_back(Item{it.droot, it.addr, out, word_reduce(res.concat(it.word))});
      }
      split_to_nucleus(twisted, depth_cap);
      coarsen(twisted);
      std::string enc = encode(twisted);
      if (best.empty() || enc < best) best = std::move(enc);
    }
    pieces.push_back(std::move(best));
  }
  std::sort(pieces.begin(), pieces.end());
  std::string key = "C" + std::to_string(g.domain_roots()) + "|" +
                    std::to_string(g.range_roots()) + "|";
  for (const std::string& p : pieces) key += "[" + p + "]";
  return key;
}

}  // namespace rover
