#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fillcurve/binform.hpp"

namespace fillcurve {

/// Largest q that enumerate_sl2 accepts without an override.
inline constexpr std::uint64_t kSl2Guard = 25;
/// Largest q that census accepts without an override.
inline constexpr std::uint64_t kCensusGuard = 5;
/// Largest q that the unreduced census accepts without an override.
inline constexpr std::uint64_t kUnreducedGuard = 4;

/// All q(q^2-1) elements of SL2(F_q): entries (a, b, c, d) in enumeration
/// order of F_q, a slowest, d solved for or scanned when a = 0.
std::vector<SL2Mat> enumerate_sl2(std::uint64_t q, bool allow_large = false);

struct Orbit {
  BinForm rep;                  // lexicographically smallest member
  std::vector<BinForm> members;  // sorted
  std::string factor_type;      // e.g. "2^2", "2+2", "4"
  std::size_t size() const { return members.size(); }
};

struct OrbitTable {
  std::uint64_t q = 0;
  std::vector<Orbit> orbits;  // sorted by (size, rep)
  std::size_t total = 0;
  /// Index of the orbit containing f; throws IndexOutOfRange for a foreign form.
  int orbit_of(const BinForm& f) const;

  std::map<std::vector<Digit>, int> index;
};

enum class OrbitMode { generators, full_group };

/// Orbits of SL2(F_q) acting on `forms` by substitution. The generator mode
/// runs BFS over [[1,t],[0,1]] and [[1,0],[t,1]], t != 0; the full-group mode
/// applies every matrix. Throws NotClosed when an image leaves the input set.
OrbitTable orbit_decomposition(const std::vector<BinForm>& forms, std::uint64_t q,
                               OrbitMode mode = OrbitMode::generators);

/// Factorization type of f(1, x): irreducible factor degrees in ascending
/// order joined by '+', with "^m" for multiplicity m > 1.
std::string factor_type(const BinForm& f);

struct CensusResult {
  std::uint64_t q = 0;
  OrbitTable table;
  /// smooth[i][j]: C_{f,g} is smooth for f in orbit i, g in orbit j.
  std::vector<std::vector<bool>> smooth;
  BigInt total_smooth_pairs = 0;
  /// F(O_j): the orbits i with smooth[i][j].
  std::vector<int> partners(int j) const;
};

/// Orbit-reduced census of smooth pairs over G_q. One checker call per pair of
/// representatives, spread over `jobs` threads; the result does not depend on
/// `jobs`. Throws TooLarge above kCensusGuard unless allow_large.
CensusResult census(std::uint64_t q, unsigned jobs = 1, bool allow_large = false);

/// smooth[i][j] for f = G_q[i], g = G_q[j] without orbit reduction.
std::vector<std::vector<bool>> unreduced_census(std::uint64_t q, unsigned jobs = 1, bool allow_large = false);

/// The census matrix expanded to G_q x G_q in enumeration order.
std::vector<std::vector<bool>> expand(const CensusResult& c, const std::vector<BinForm>& gq);

struct SampleResult {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t smooth = 0;
};

/// n independent uniform pairs from G_q x G_q. Pair k draws f then g from
/// Rng(mix_seed(seed, k)), so the count is independent of `jobs`.
SampleResult sample_stats(std::uint64_t q, std::uint64_t n, std::uint64_t seed, unsigned jobs = 1);

}  // namespace fillcurve
