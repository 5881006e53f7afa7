#include "support/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace oracle {

using toposbench::FinCategory;
using toposbench::logic::Op;
using toposbench::logic::TermRef;

namespace {

struct Slot {
  ObjectId c;
  Elem x;
};

std::vector<Slot> slots(const Presheaf& a) {
  std::vector<Slot> out;
  for (ObjectId c = 0; c < a.sizes().size(); ++c) {
    for (Elem x = 0; x < a.size(c); ++x) out.push_back({c, x});
  }
  return out;
}

// Advances digits (last fastest) below the given radices; false on wrap.
bool next(std::vector<Elem>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<Components> nat_trans(const Presheaf& a, const Presheaf& b) {
  const FinCategory& cat = *a.base();
  const auto pos = slots(a);
  std::vector<std::size_t> radix;
  for (const auto& s : pos) {
    if (b.size(s.c) == 0) return {};
    radix.push_back(b.size(s.c));
  }
  std::vector<Components> out;
  std::vector<Elem> digits(pos.size(), 0);
  do {
    Components m(cat.object_count());
    for (std::size_t i = 0; i < pos.size(); ++i) m[pos[i].c].push_back(digits[i]);
    bool natural = true;
    for (ArrowId f = 0; f < cat.arrow_count() && natural; ++f) {
      for (Elem x = 0; x < a.size(cat.dom(f)) && natural; ++x) {
        natural = m[cat.cod(f)][a.act(f, x)] == b.act(f, m[cat.dom(f)][x]);
      }
    }
    if (natural) out.push_back(std::move(m));
  } while (next(digits, radix));
  return out;
}

bool injective(const Components& m) {
  for (const auto& stage : m) {
    std::set<Elem> seen(stage.begin(), stage.end());
    if (seen.size() != stage.size()) return false;
  }
  return true;
}

std::vector<Part> closed_subsets(const Presheaf& a) {
  const FinCategory& cat = *a.base();
  const auto pos = slots(a);
  const std::size_t n = pos.size();
  std::vector<Part> out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    Part part(cat.object_count());
    for (ObjectId c = 0; c < cat.object_count(); ++c) part[c].assign(a.size(c), false);
    for (std::size_t i = 0; i < n; ++i) part[pos[i].c][pos[i].x] = (k >> (n - 1 - i)) & 1;
    bool closed = true;
    for (ArrowId f = 0; f < cat.arrow_count() && closed; ++f) {
      for (Elem x = 0; x < a.size(cat.dom(f)) && closed; ++x) {
        closed = !part[cat.dom(f)][x] || part[cat.cod(f)][a.act(f, x)];
      }
    }
    if (closed) out.push_back(std::move(part));
  }
  return out;
}

std::vector<std::vector<ArrowId>> cosieves(const FinCategory& cat, ObjectId c) {
  std::vector<ArrowId> out_arrows;
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    if (cat.dom(f) == c) out_arrows.push_back(f);
  }
  std::vector<std::vector<ArrowId>> out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << out_arrows.size()); ++k) {
    std::set<ArrowId> s;
    for (std::size_t i = 0; i < out_arrows.size(); ++i) {
      if ((k >> i) & 1) s.insert(out_arrows[i]);
    }
    bool closed = true;
    for (ArrowId f : s) {
      for (ArrowId g = 0; g < cat.arrow_count() && closed; ++g) {
        if (cat.dom(g) == cat.cod(f)) closed = s.count(cat.compose(g, f)) > 0;
      }
    }
    if (closed) out.emplace_back(s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PresheafRef> presheaves(const CategoryRef& base, std::size_t max_stage) {
  const FinCategory& cat = *base;
  std::vector<PresheafRef> out;
  std::vector<Elem> sizes(cat.object_count(), 0);
  const std::vector<std::size_t> size_radix(cat.object_count(), max_stage + 1);
  do {
    std::vector<ArrowId> free;
    std::vector<std::size_t> radix;
    std::vector<std::size_t> offset;
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      if (cat.is_identity(f)) continue;
      free.push_back(f);
      offset.push_back(radix.size());
      for (Elem x = 0; x < sizes[cat.dom(f)]; ++x) radix.push_back(sizes[cat.cod(f)]);
    }
    if (std::find(radix.begin(), radix.end(), 0) != radix.end()) continue;
    std::vector<Elem> digits(radix.size(), 0);
    do {
      std::vector<std::vector<Elem>> action(cat.arrow_count());
      for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
        if (cat.is_identity(f)) {
          action[f].resize(sizes[cat.dom(f)]);
          std::iota(action[f].begin(), action[f].end(), 0);
        }
      }
      for (std::size_t i = 0; i < free.size(); ++i) {
        const ArrowId f = free[i];
        action[f].assign(digits.begin() + offset[i], digits.begin() + offset[i] + sizes[cat.dom(f)]);
      }
      bool functor = true;
      for (ArrowId g = 0; g < cat.arrow_count() && functor; ++g) {
        for (ArrowId f = 0; f < cat.arrow_count() && functor; ++f) {
          if (cat.dom(g) != cat.cod(f)) continue;
          const ArrowId gf = cat.compose(g, f);
          for (Elem x = 0; x < sizes[cat.dom(f)] && functor; ++x) {
            functor = action[gf][x] == action[g][action[f][x]];
          }
        }
      }
      if (functor) {
        std::vector<std::size_t> sz(sizes.begin(), sizes.end());
        out.push_back(toposbench::make_presheaf(base, sz, std::move(action), [](ObjectId, Elem x) {
          return "x" + std::to_string(x);
        }));
      }
    } while (next(digits, radix));
  } while (next(sizes, size_radix));
  return out;
}

std::size_t monoid_count(std::size_t order) {
  if (order == 0) return 0;
  const std::size_t n = order;
  std::vector<std::size_t> cells;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) cells.push_back(i * n + j);
  }
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) table[i] = table[i * n] = static_cast<Elem>(i);
  std::vector<Elem> digits(cells.size(), 0);
  const std::vector<std::size_t> radix(cells.size(), n);
  std::set<std::vector<Elem>> classes;
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t k = 0; k < cells.size(); ++k) table[cells[k]] = digits[k];
    bool assoc = true;
    for (std::size_t a = 0; a < n && assoc; ++a) {
      for (std::size_t b = 0; b < n && assoc; ++b) {
        for (std::size_t c = 0; c < n && assoc; ++c) {
          assoc = table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]];
        }
      }
    }
    if (!assoc) continue;
    std::vector<Elem> best;
    std::vector<Elem> p = perm;
    do {
      std::vector<Elem> relabelled(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) relabelled[p[a] * n + p[b]] = p[table[a * n + b]];
      }
      if (best.empty() || relabelled < best) best = relabelled;
    } while (std::next_permutation(p.begin() + 1, p.end()));
    classes.insert(best);
  } while (next(digits, radix));
  return classes.size();
}

std::set<ArrowId> Forcing::truth(const TermRef& sentence, ObjectId c) const {
  const FinCategory& cat = *base();
  std::set<ArrowId> out;
  for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
    if (cat.dom(f) == c && forced(sentence, cat.cod(f), {})) out.insert(f);
  }
  return out;
}

bool Forcing::forced(const TermRef& t, ObjectId c,
                     std::map<std::string, std::pair<std::string, Elem>> env) const {
  const FinCategory& cat = *base();
  auto along = [&](ArrowId f) {
    auto moved = env;
    for (auto& [name, value] : moved) value.second = grounds_.at(value.first)->act(f, value.second);
    return moved;
  };
  auto every_later = [&](auto&& pred) {
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      if (cat.dom(f) == c && !pred(cat.cod(f), along(f))) return false;
    }
    return true;
  };
  const auto& a = t->args;
  switch (t->op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Eq: return env.at(a[0]->name).second == env.at(a[1]->name).second;
    case Op::Mem: return subsets_.at(a[1]->name)[c][env.at(a[0]->name).second];
    case Op::And: return forced(a[0], c, env) && forced(a[1], c, env);
    case Op::Or: return forced(a[0], c, env) || forced(a[1], c, env);
    case Op::Not:
      return every_later([&](ObjectId d, const auto& e) { return !forced(a[0], d, e); });
    case Op::Implies:
      return every_later([&](ObjectId d, const auto& e) { return !forced(a[0], d, e) || forced(a[1], d, e); });
    case Op::Iff:
      return every_later([&](ObjectId d, const auto& e) { return forced(a[0], d, e) == forced(a[1], d, e); });
    case Op::Forall: {
      const std::string& ground = t->binder_type->name;
      return every_later([&](ObjectId d, auto e) {
        for (Elem x = 0; x < grounds_.at(ground)->size(d); ++x) {
          e[t->name] = {ground, x};
          if (!forced(a[0], d, e)) return false;
        }
        return true;
      });
    }
    case Op::Exists: {
      const std::string& ground = t->binder_type->name;
      for (Elem x = 0; x < grounds_.at(ground)->size(c); ++x) {
        auto e = env;
        e[t->name] = {ground, x};
        if (forced(a[0], c, e)) return true;
      }
      return false;
    }
    default:
      throw std::logic_error("oracle::Forcing does not handle " + toposbench::logic::to_string(t));
  }
}

namespace {

std::string sentence(std::mt19937_64& rng, const std::vector<std::string>& subsets, std::size_t depth,
                     std::vector<std::string>& vars) {
  auto pick = [&](const std::vector<std::string>& v) { return v[rng() % v.size()]; };
  const std::size_t kind = depth == 0 ? rng() % 2 : rng() % 9;
  if (kind <= 1) {
    if (vars.empty() || rng() % 5 == 0) return rng() % 2 ? "true" : "false";
    if (kind == 0 || subsets.empty()) return pick(vars) + " = " + pick(vars);
    return pick(vars) + " in " + pick(subsets);
  }
  auto sub = [&] { return "(" + sentence(rng, subsets, depth - 1, vars) + ")"; };
  switch (kind) {
    case 2: return "~" + sub();
    case 3: return sub() + " /\\ " + sub();
    case 4: return sub() + " \\/ " + sub();
    case 5: return sub() + " => " + sub();
    case 6: return sub() + " <=> " + sub();
    default: {
      const std::string v = "v" + std::to_string(vars.size() + 1);
      vars.push_back(v);
      const std::string body = sub();
      vars.pop_back();
      return std::string(kind == 7 ? "forall " : "exists ") + v + ":A. " + body;
    }
  }
}

}  // namespace

std::string random_sentence(std::mt19937_64& rng, const std::vector<std::string>& subsets,
                            std::size_t depth) {
  std::vector<std::string> vars;
  return sentence(rng, subsets, depth, vars);
}

std::map<toposbench::machines::Configuration, std::size_t> bfs_distances(
    const toposbench::machines::TMSpec& tm, const toposbench::machines::Configuration& start,
    std::size_t budget, bool& exhausted) {
  using toposbench::machines::Configuration;
  std::map<Configuration, std::size_t> dist{{start, 0}};
  std::vector<Configuration> layer{start};
  for (std::size_t depth = 1; !layer.empty() && dist.size() <= budget; ++depth) {
    std::vector<Configuration> next_layer;
    for (const auto& c : layer) {
      // Materialize the window covering the tape and the head, then trim.
      const std::int64_t lo = std::min(c.head, c.cells.empty() ? c.head : c.offset);
      const std::int64_t hi =
          std::max(c.head, c.cells.empty() ? c.head : c.offset + static_cast<std::int64_t>(c.cells.size()) - 1);
      std::string window(static_cast<std::size_t>(hi - lo + 1), tm.blank[0]);
      for (std::size_t i = 0; i < c.cells.size(); ++i) window[c.offset - lo + i] = c.cells[i];
      const std::size_t at = static_cast<std::size_t>(c.head - lo);
      const auto rules = tm.delta.find({c.state, std::string(1, window[at])});
      if (rules == tm.delta.end()) continue;
      for (const auto& r : rules->second) {
        std::string w = window;
        w[at] = r.symbol[0];
        Configuration d{r.state, c.head + (r.move == toposbench::machines::Move::R ? 1 : -1), 0, ""};
        const auto first = w.find_first_not_of(tm.blank[0]);
        if (first != std::string::npos) {
          d.offset = lo + static_cast<std::int64_t>(first);
          d.cells = w.substr(first, w.find_last_not_of(tm.blank[0]) - first + 1);
        }
        if (dist.emplace(d, depth).second) next_layer.push_back(std::move(d));
      }
    }
    layer = std::move(next_layer);
  }
  exhausted = dist.size() > budget;
  return dist;
}

toposbench::machines::TMSpec random_machine(std::mt19937_64& rng) {
  using toposbench::machines::Move;
  toposbench::machines::TMSpec tm;
  const std::size_t states = 1 + rng() % 4;
  const std::size_t symbols = 1 + rng() % 4;
  for (std::size_t i = 0; i < states; ++i) tm.states.push_back("q" + std::to_string(i));
  tm.alphabet.push_back(" ");
  for (std::size_t i = 1; i < symbols; ++i) tm.alphabet.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  tm.q0 = "q0";
  tm.qf = tm.states[rng() % states];
  for (const auto& q : tm.states) {
    for (const auto& s : tm.alphabet) {
      const std::size_t rules = rng() % 4;  // 0 leaves the key undefined
      for (std::size_t k = 0; k < std::min<std::size_t>(rules, 2); ++k) {
        tm.delta[{q, s}].push_back(
            {tm.states[rng() % states], tm.alphabet[rng() % symbols], rng() % 2 ? Move::R : Move::L});
      }
    }
  }
  return tm;
}

}  // namespace oracle
