#include "ecc/signsolve.hpp"

#include <algorithm>
#include <deque>

namespace ecc {

int SignAssignment::at(const BitString& v) const {
  auto it = value.find(v);
  if (it == value.end())
    throw IncompleteAssignment("no sign for " + v.str());
  return it->second;
}

bool SignAssignment::satisfies(const SignConstraint& c) const {
  return (at(c.s) ^ at(c.t)) == c.rhs;
}

std::vector<SignConstraint> gen_constraints(const BitString& u,
                                            const PromiseSet& promise) {
  if (promise.m != u.length())
    throw LengthMismatch("promise width differs from u");
  for (const auto& p : promise.members)
    if (p.parity() != u.parity())
      throw ParityMismatch("promise member " + p.str() + " has wrong parity");

  PromiseSet odd = parity_class(u.length(), 1);
  std::vector<SignConstraint> out;
  for (const auto& p : promise.members) {
    if (p == u || hamming(u, p) != 2) continue;
    BitString mask = u ^ p;
    int i = 0, j = 0;
    for (int k = 1; k <= mask.length(); ++k)
      if (mask.bit(k)) (i ? j : i) = k;
    for (const auto& s : odd.members) {
      BitString t = s ^ mask;
      if (!(s < t)) continue;  // each unordered pair once
      out.push_back({s, t, 1 ^ s.bit(i) ^ s.bit(j)});
    }
  }
  return out;
}

SolveResult solve_signs(int m, const std::vector<SignConstraint>& constraints) {
  PromiseSet odd = parity_class(m, 1);
  for (const auto& c : constraints) {
    if (c.s.length() != m || c.t.length() != m)
      throw LengthMismatch("constraint width differs from m");
    if (c.s.parity() != 1 || c.t.parity() != 1)
      throw ParityMismatch("constraint endpoints must be odd parity");
    if (hamming(c.s, c.t) != 2)
      throw ParseError("constraint endpoints must be at Hamming distance 2");
  }

  struct Edge { BitString to; int rhs; };
  std::map<BitString, std::vector<Edge>> adj;
  for (const auto& c : constraints) {
    adj[c.s].push_back({c.t, c.rhs});
    adj[c.t].push_back({c.s, c.rhs});
  }

  SolveResult res;
  res.assignment.m = m;
  std::map<BitString, BitString> parent;
  auto& label = res.assignment.value;

  for (const auto& root : odd.members) {
    if (label.count(root)) continue;
    label[root] = 0;  // component anchor: smallest unvisited member
    std::deque<BitString> queue{root};
    while (!queue.empty()) {
      BitString x = queue.front();
      queue.pop_front();
      auto it = adj.find(x);
      if (it == adj.end()) continue;
      for (const auto& e : it->second) {
        int want = label[x] ^ e.rhs;
        auto seen = label.find(e.to);
        if (seen == label.end()) {
          label[e.to] = want;
          parent[e.to] = x;
          queue.push_back(e.to);
        } else if (seen->second != want) {
          // Odd cycle: walk both endpoints up to the root and splice.
          auto path_to_root = [&](BitString v) {
            std::vector<BitString> path{v};
            while (parent.count(path.back())) path.push_back(parent.at(path.back()));
            return path;
          };
          std::vector<BitString> px = path_to_root(x);
          std::vector<BitString> pt = path_to_root(e.to);
          while (px.size() > 1 && pt.size() > 1 &&
                 px[px.size() - 2] == pt[pt.size() - 2]) {
            px.pop_back();
            pt.pop_back();
          }
          res.consistent = false;
          res.witness_cycle.assign(px.begin(), px.end());
          res.witness_cycle.insert(res.witness_cycle.end(), pt.rbegin() + 1,
                                   pt.rend());
          res.assignment.value.clear();
          return res;
        }
      }
    }
  }
  res.consistent = true;
  return res;
}

}  // namespace ecc
