#include "fillcurve/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "fillcurve/curve.hpp"

namespace fillcurve {

namespace {

void run_parallel(std::size_t tasks, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < tasks;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next = tasks;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void guard(std::uint64_t q, std::uint64_t limit, bool allow_large, const char* what) {
  if (q > limit && !allow_large)
    throw Error(Errc::too_large, std::string(what) + " for q = " + std::to_string(q) + " exceeds the guard q <= " +
                                     std::to_string(limit));
}

}  // namespace

std::vector<SL2Mat> enumerate_sl2(std::uint64_t q, bool allow_large) {
  guard(q, kSl2Guard, allow_large, "SL2 enumeration");
  const Field F = canonical_field(q);
  const auto els = enumerate_field(F);
  std::vector<SL2Mat> out;
  out.reserve(q * (q * q - 1));
  const Fel one = Fel::one(F);
  for (const Fel& a : els) {
    for (const Fel& b : els) {
      for (const Fel& c : els) {
        if (!a.is_zero()) {
          out.emplace_back(a, b, c, (one + b * c) / a);  // ad - bc = 1
        } else if (!b.is_zero()) {
          // a = 0 forces c = -1/b, d free
          if (c != -b.inv()) continue;
          for (const Fel& d : els) out.emplace_back(a, b, c, d);
        }
      }
    }
  }
  return out;
}

int OrbitTable::orbit_of(const BinForm& f) const {
  auto it = index.find(f.flat());
  if (it == index.end()) throw Error(Errc::index_out_of_range, "form " + f.to_string() + " is not in the table");
  return it->second;
}

std::string factor_type(const BinForm& f) {
  Rng rng(0);
  const UPoly p = f.dehomogenize();
  if (p.is_zero()) return "0";
  std::vector<std::pair<int, int>> parts;
  if (p.degree() >= 1)
    for (const auto& fac : factor(p, rng).factors) parts.emplace_back(fac.poly.degree(), fac.multiplicity);
  // a drop in degree is a root at infinity of that multiplicity
  if (p.degree() < f.degree()) parts.emplace_back(1, f.degree() - p.degree());
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [d, m] : parts) {
    if (!out.empty()) out += "+";
    out += std::to_string(d);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

OrbitTable orbit_decomposition(const std::vector<BinForm>& forms, std::uint64_t q, OrbitMode mode) {
  const Field F = canonical_field(q);
  std::vector<SL2Mat> moves;
  if (mode == OrbitMode::generators) {
    const Fel zero(F), one = Fel::one(F);
    for (const Fel& t : enumerate_field(F)) {
      if (t.is_zero()) continue;
      moves.emplace_back(one, t, zero, one);
      moves.emplace_back(one, zero, t, one);
    }
  } else {
    moves = enumerate_sl2(q, true);
  }

  std::map<std::vector<Digit>, int> where;
  for (const auto& f : forms) where.emplace(f.flat(), -1);

  std::vector<std::vector<BinForm>> groups;
  for (const auto& f : forms) {
    if (where.at(f.flat()) >= 0) continue;
    const int id = static_cast<int>(groups.size());
    std::vector<BinForm> members{f};
    where[f.flat()] = id;
    std::deque<BinForm> queue{f};
    while (!queue.empty()) {
      const BinForm cur = queue.front();
      queue.pop_front();
      for (const auto& A : moves) {
        BinForm img = sl2_act(A, cur);
        auto it = where.find(img.flat());
        if (it == where.end()) throw Error(Errc::not_closed, "image " + img.to_string() + " leaves the input set");
        if (it->second >= 0) continue;
        it->second = id;
        members.push_back(img);
        queue.push_back(std::move(img));
      }
    }
    std::sort(members.begin(), members.end());
    groups.push_back(std::move(members));
  }

  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  OrbitTable table;
  table.q = q;
  for (auto& g : groups) {
    const int id = static_cast<int>(table.orbits.size());
    for (const auto& m : g) table.index[m.flat()] = id;
    table.total += g.size();
    Orbit o{g.front(), std::move(g), ""};
    o.factor_type = factor_type(o.rep);
    table.orbits.push_back(std::move(o));
  }
  return table;
}

std::vector<int> CensusResult::partners(int j) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < smooth.size(); ++i)
    if (smooth[i][j]) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

// Checker verdicts for every (ys[i], xs[j]).
std::vector<std::vector<bool>> verdicts(const std::vector<BinForm>& fs, const std::vector<BinForm>& gs, unsigned jobs) {
  std::vector<YSide> ys(fs.size());
  std::vector<XSide> xs(gs.size());
  run_parallel(fs.size(), jobs, [&](std::size_t i) { ys[i] = prepare_y(fs[i]); });
  run_parallel(gs.size(), jobs, [&](std::size_t j) {
    Rng rng(mix_seed(0, j));
    xs[j] = prepare_x(gs[j], rng);
  });
  std::vector<std::vector<char>> raw(fs.size(), std::vector<char>(gs.size(), 0));
  run_parallel(fs.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < gs.size(); ++j) raw[i][j] = !singular_witness(ys[i], xs[j]).has_value();
  });
  std::vector<std::vector<bool>> out(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) out[i].assign(raw[i].begin(), raw[i].end());
  return out;
}

}  // namespace

CensusResult census(std::uint64_t q, unsigned jobs, bool allow_large) {
  guard(q, kCensusGuard, allow_large, "census");
  CensusResult res;
  res.q = q;
  res.table = orbit_decomposition(enumerate_gq(q, allow_large), q);
  std::vector<BinForm> reps;
  for (const auto& o : res.table.orbits) reps.push_back(o.rep);
  res.smooth = verdicts(reps, reps, jobs);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (res.smooth[i][j]) res.total_smooth_pairs += BigInt(res.table.orbits[i].size()) * res.table.orbits[j].size();
  return res;
}

std::vector<std::vector<bool>> unreduced_census(std::uint64_t q, unsigned jobs, bool allow_large) {
  guard(q, kUnreducedGuard, allow_large, "unreduced census");
  const auto gq = enumerate_gq(q, allow_large);
  return verdicts(gq, gq, jobs);
}

std::vector<std::vector<bool>> expand(const CensusResult& c, const std::vector<BinForm>& gq) {
  std::vector<int> orb;
  for (const auto& f : gq) orb.push_back(c.table.orbit_of(f));
  std::vector<std::vector<bool>> out(gq.size(), std::vector<bool>(gq.size()));
  for (std::size_t i = 0; i < gq.size(); ++i)
    for (std::size_t j = 0; j < gq.size(); ++j) out[i][j] = c.smooth[orb[i]][orb[j]];
  return out;
}

SampleResult sample_stats(std::uint64_t q, std::uint64_t n, std::uint64_t seed, unsigned jobs) {
  canonical_field(q);
  std::vector<char> smooth(n, 0);
  run_parallel(n, jobs, [&](std::size_t k) {
    Rng rng(mix_seed(seed, k));
    const BinForm f = random_gq(q, rng);
    const BinForm g = random_gq(q, rng);
    smooth[k] = !singular_witness(f, g, rng).has_value();
  });
  SampleResult r{q, n, seed, 0};
  for (char s : smooth) r.smooth += s;
  return r;
}

}  // namespace fillcurve
