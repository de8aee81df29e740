#include "support.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "handlecalc/chart.hpp"

namespace hcalc::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BraidWord random_word(Rng& rng, int degree, int len) {
  std::vector<Letter> letters;
  if (degree < 2) return BraidWord(degree);
  while (static_cast<int>(letters.size()) < len) {
    Letter l{uniform(rng, 1, degree - 1), uniform(rng, 0, 1) ? 1 : -1};
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return BraidWord(degree, letters);
}

std::vector<std::vector<Letter>> defining_relators(int degree) {
  std::vector<std::vector<Letter>> out;
  for (int i = 1; i + 1 <= degree - 1; ++i)
    out.push_back({{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}});
  for (int i = 1; i <= degree - 1; ++i)
    for (int j = i + 2; j <= degree - 1; ++j) out.push_back({{i, 1}, {j, 1}, {i, -1}, {j, -1}});
  return out;
}

namespace {

std::vector<Letter> inverse_letters(const std::vector<Letter>& r) {
  std::vector<Letter> out;
  for (auto it = r.rbegin(); it != r.rend(); ++it) out.push_back(it->inverse());
  return out;
}

std::vector<std::vector<Letter>> rotations_with_inverses(int degree) {
  std::set<std::vector<Letter>> all;
  for (auto r : defining_relators(degree)) {
    for (auto base : {r, inverse_letters(r)}) {
      for (std::size_t k = 0; k < base.size(); ++k) {
        std::vector<Letter> rot(base.begin() + static_cast<std::ptrdiff_t>(k), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(k));
        all.insert(rot);
      }
    }
  }
  return {all.begin(), all.end()};
}

std::string encode_letters(const std::vector<Letter>& letters) {
  std::string s;
  for (const Letter& l : letters) s.push_back(static_cast<char>(l.sign > 0 ? 'a' + l.index - 1 : 'A' + l.index - 1));
  return s;
}

}  // namespace

BraidWord pad_with_relators(Rng& rng, const BraidWord& w, int count) {
  const int n = w.degree();
  auto rels = defining_relators(n);
  std::vector<Letter> letters = w.letters();
  for (int t = 0; t < count; ++t) {
    std::vector<Letter> ins;
    int choice = uniform(rng, 0, static_cast<int>(rels.size()));
    if (choice == static_cast<int>(rels.size())) {
      Letter l{uniform(rng, 1, n - 1), uniform(rng, 0, 1) ? 1 : -1};
      ins = {l, l.inverse()};
    } else {
      ins = rels[static_cast<std::size_t>(choice)];
      if (uniform(rng, 0, 1)) ins = inverse_letters(ins);
    }
    std::size_t pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(letters.size())));
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), ins.begin(), ins.end());
  }
  return BraidWord(n, letters);
}

std::string encode(const BraidWord& w) { return encode_letters(w.letters()); }

std::set<std::string> bfs_trivial_words(int degree, int max_len) {
  const auto rots = rotations_with_inverses(degree);
  std::unordered_set<std::string> seen{""};
  std::deque<std::vector<Letter>> queue{{}};
  while (!queue.empty()) {
    std::vector<Letter> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
      for (const auto& r : rots) {
        std::vector<Letter> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), r.begin(), r.end());
        next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos), cur.end());
        next = free_reduce(next);
        if (static_cast<int>(next.size()) > max_len) continue;
        if (seen.insert(encode_letters(next)).second) queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<BraidWord> all_reduced_words(int degree, int len) {
  std::vector<std::vector<Letter>> layer{{}};
  std::vector<BraidWord> out{BraidWord(degree)};
  for (int k = 1; k <= len; ++k) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (int i = 1; i <= degree - 1; ++i) {
        for (int s : {1, -1}) {
          Letter l{i, s};
          if (!w.empty() && w.back() == l.inverse()) continue;
          auto v = w;
          v.push_back(l);
          out.emplace_back(degree, v);
          next.push_back(std::move(v));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

Handle random_crossing_only_handle(Rng& rng, int degree, int max_core) {
  const int kind = uniform(rng, 0, 5);
  if (kind == 0) {
    // h(e, c) with an arbitrary core word.
    return Handle(BraidWord(degree), random_word(rng, degree, uniform(rng, 0, std::min(max_core, 3))));
  }
  const int i = uniform(rng, 1, degree - 1);
  const int delta = kind == 1 ? -1 : 1;
  std::vector<int> far;
  for (int k = 1; k <= degree - 1; ++k)
    if (std::abs(k - i) > 1) far.push_back(k);
  std::vector<Letter> core;
  if (!far.empty()) {
    const int len = uniform(rng, 0, max_core);
    while (static_cast<int>(core.size()) < len) {
      Letter l{far[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(far.size()) - 1))],
               uniform(rng, 0, 1) ? 1 : -1};
      if (!core.empty() && core.back() == l.inverse()) continue;
      core.push_back(l);
    }
  }
  return Handle(BraidWord::generator(degree, i, delta), BraidWord(degree, core));
}

HandleConfig random_crossing_only_config(Rng& rng, int degree, int max_handles, int max_core) {
  HandleConfig cfg;
  cfg.degree = degree;
  const int count = uniform(rng, 0, max_handles);
  for (int t = 0; t < count; ++t) {
    if (uniform(rng, 0, 7) == 0)
      cfg.handles.push_back(Handle::empty(degree));
    else
      cfg.handles.push_back(random_crossing_only_handle(rng, degree, max_core));
  }
  if (degree >= 2 && uniform(rng, 0, 3) == 0) cfg.free_edges[uniform(rng, 1, degree - 1)] = uniform(rng, 1, 2);
  return cfg;
}

ChartStats random_valid_census(Rng& rng, int max_degree, long max_w, long max_b, long max_c) {
  ChartStats ch;
  ch.degree = uniform(rng, 1, max_degree);
  const int n = ch.degree;
  if (n < 2) return ch;
  long w = 0;
  const int pairs = uniform(rng, 0, static_cast<int>(max_b / 2));
  for (int p = 0; p < pairs; ++p) {
    int a = uniform(rng, 1, n - 1);
    int b = uniform(rng, 1, n - 1);
    if (w + std::abs(a - b) > max_w) b = a;
    // White path from a to b: w_{l_t, l_{t+1}} for consecutive labels.
    for (int l = a; l != b; l += (b > a ? 1 : -1)) {
      ch.white[{l, l + (b > a ? 1 : -1)}] += 1;
      ++w;
    }
    ch.black_edge_labels[{a, EdgeDir::Out}] += 1;
    ch.black_edge_labels[{b, EdgeDir::In}] += 1;
    ch.black += 2;
    if (a == b && uniform(rng, 0, 2) == 0) ch.free_edges[a] += 1;
  }
  if (n >= 3) {
    while (w + 2 <= max_w && uniform(rng, 0, 2) != 0) {
      int i = uniform(rng, 1, n - 2);
      ch.white[{i, i + 1}] += 1;
      ch.white[{i + 1, i}] += 1;
      w += 2;
    }
  }
  if (n >= 4) {
    const int c = uniform(rng, 0, static_cast<int>(max_c));
    for (int t = 0; t < c; ++t) {
      int i = uniform(rng, 1, n - 1);
      int j = uniform(rng, 1, n - 1);
      if (std::abs(i - j) <= 1) {
        --t;
        continue;
      }
      ch.crossings[{i, j}] += 1;
    }
  }
  if (uniform(rng, 0, 2) == 0) ch.loops[uniform(rng, 1, n - 1)] += uniform(rng, 1, 2);
  return ch;
}

bool random_applicable_step(Rng& rng, const HandleConfig& cfg, Applied& out, int attempts) {
  const int n = cfg.degree;
  const int h = static_cast<int>(cfg.handles.size());
  auto idx = [&] { return h == 0 ? 0 : uniform(rng, 0, h - 1); };
  auto sign = [&] { return uniform(rng, 0, 1) ? 1 : -1; };
  // Half of the time operands are drawn among handles with a given cocore
  // label (0 for spares), so rules needing several matching handles fire.
  auto with_label = [&](int label) {
    std::vector<int> hits;
    for (int t = 0; t < h; ++t) {
      const Handle& x = cfg.handles[static_cast<std::size_t>(t)];
      if (label == 0 ? x.is_spare() : x.has_cocore(label)) hits.push_back(t);
    }
    return hits.empty() ? idx() : hits[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(hits.size()) - 1))];
  };
  auto label_of = [&](int t) {
    auto l = h ? cfg.handles[static_cast<std::size_t>(t)].cocore_label() : std::nullopt;
    return l ? *l : 0;
  };
  for (int a = 0; a < attempts; ++a) {
    const bool targeted = uniform(rng, 0, 1) == 1 && n >= 4;
    const auto& rules = all_rules();
    Rule r = rules[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rules.size()) - 1))];
    try {
      switch (r) {
        case Rule::ReverseHandle: out = reverse_handle(cfg, idx()); break;
        case Rule::AbsorbLoop: out = absorb_loop(cfg, idx(), idx(), sign()); break;
        case Rule::EliminateLoop: {
          bool inv = uniform(rng, 0, 1);
          int target = idx();
          if (uniform(rng, 0, 1)) {
            out = eliminate_loop(cfg, idx(), target, LoopSite::Handle, 0, inv);
          } else {
            int len = h ? static_cast<int>(cfg.handles[static_cast<std::size_t>(target)].core().size()) : 0;
            int pos = uniform(rng, 0, 1) ? 0 : (inv ? len : len - 1);
            out = eliminate_loop(cfg, idx(), target, LoopSite::Letter, pos, inv, inv ? sign() : 0);
          }
          break;
        }
        case Rule::SlideCollect: {
          bool inv = uniform(rng, 0, 1);
          bool core = uniform(rng, 0, 1);
          out = slide_collect(cfg, idx(), idx(), core ? SlideMode::Core : SlideMode::Cocore, inv,
                              (inv && !core) ? sign() : 0);
          break;
        }
        case Rule::SwapCrossingHandle: {
          if (!targeted) {
            out = swap_crossing_handle(cfg, idx(), idx(), idx());
            break;
          }
          int x = idx();
          int j = label_of(x);
          const auto& core = h ? cfg.handles[static_cast<std::size_t>(x)].core().letters() : std::vector<Letter>{};
          int k = core.empty() ? 0 : core.front().index;
          out = swap_crossing_handle(cfg, with_label(j), with_label(k), x);
          break;
        }
        case Rule::NormalizeCrossing: out = normalize_crossing(cfg, idx()); break;
        case Rule::MoveHandle: out = move_handle(cfg, idx(), idx()); break;
        case Rule::TransferCrossing:
        case Rule::TransferSameLabel: {
          int j = idx();
          int len = h ? static_cast<int>(cfg.handles[static_cast<std::size_t>(j)].core().size()) : 0;
          int pos = len ? uniform(rng, 0, len - 1) : 0;
          int other = idx();
          if (targeted && len) {
            const Letter l = cfg.handles[static_cast<std::size_t>(j)].core().letters()[static_cast<std::size_t>(pos)];
            other = with_label(r == Rule::TransferCrossing ? l.index : label_of(j));
          }
          out = r == Rule::TransferCrossing ? transfer_crossing(cfg, j, pos, other)
                                            : transfer_same_label(cfg, j, pos, other);
          break;
        }
        case Rule::ParityStep: {
          if (!targeted) {
            out = parity_step(cfg, idx(), idx(), idx(), idx());
            break;
          }
          const int i = uniform(rng, 1, n - 1);
          const int d = uniform(rng, 0, 1) ? 1 : -1;
          out = parity_step(cfg, with_label(i), with_label(i + d), with_label(i + 2 * d), with_label(0));
          break;
        }
        case Rule::AddHandles: {
          if (h >= 10) continue;
          std::vector<Handle> add;
          int kind = uniform(rng, 0, 2);
          if (kind == 0 || n < 2) add.push_back(Handle::empty(n));
          else if (kind == 1 || n < 4) add.push_back(Handle::loop(n, uniform(rng, 1, n - 1)));
          else add.push_back(Handle::crossing(n, 1, 3, -1));
          out = add_handles(cfg, add, kind == 2 ? Alphabet::Extended : Alphabet::Weak);
          break;
        }
        case Rule::PermuteHandles: {
          std::vector<int> perm(static_cast<std::size_t>(h));
          for (int t = 0; t < h; ++t) perm[static_cast<std::size_t>(t)] = t;
          std::shuffle(perm.begin(), perm.end(), rng);
          out = permute_handles(cfg, perm);
          break;
        }
      }
      return true;
    } catch (const PreconditionError&) {
    }
  }
  return false;
}

long census_s(const HandleConfig& cfg) { return stats_of_chart(handle_chart_stats(cfg)).s; }
long census_c(const HandleConfig& cfg) { return stats_of_chart(handle_chart_stats(cfg)).c; }

}  // namespace hcalc::testing
