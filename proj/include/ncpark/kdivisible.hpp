#pragma once

#include <map>
#include <vector>

#include "ncpark/numbers.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/partition.hpp"
#include "ncpark/permutation.hpp"
#include "ncpark/poset.hpp"
#include "ncpark/pp_poset.hpp"

namespace ncpark {

// Guards for the k-divisible posets.
inline constexpr int kMaxKDivisibleN = 4;
inline constexpr int kMaxKDivisibleK = 3;

// k-element multichains pi_1 <= ... <= pi_k of NC_n, with
// (pi) <= (tau) iff K(pi_{i-1}, pi_i) >= K(tau_{i-1}, tau_i) for every i,
// where pi_0 = tau_0 = 0_n.
struct NCKPoset {
    int n = 0;
    int k = 0;
    NCPoset nc;
    std::vector<std::vector<NoncrossingPartition>> elements;  // sorted
    std::vector<std::vector<int>> complements;                // ids in nc of K(pi_{i-1}, pi_i)
    std::map<std::vector<NoncrossingPartition>, int> index;
    FinitePoset poset;

    int id(const std::vector<NoncrossingPartition>& chain) const { return index.at(chain); }
};
// Throws std::out_of_range unless 1 <= n <= 4 and 1 <= k <= 3.
NCKPoset build_nc_k(int n, int k);
// The order relation read off the definition.
bool nc_k_leq(const NCKPoset& p, int a, int b);

// k-element multichains phi_1 <= ... <= phi_k of 2-partitions, with
// (phi) <= (psi) iff (pi(phi_i)) <= (pi(psi_i)) in NC_n^(k) and phi_k <= psi_k.
struct PPKPoset {
    int n = 0;
    int k = 0;
    PPPoset pp;
    NCKPoset nck;
    std::vector<std::vector<int>> chains;  // ids in pp, sorted
    std::vector<int> projection;           // id in nck of the partition chain
    std::map<std::vector<int>, int> index;
    FinitePoset poset;

    const ParkingObject& top(int x) const;
    std::vector<ParkingObject> chain(int x) const;
};
// Throws std::out_of_range unless 1 <= n <= 4 and 1 <= k <= 3.
PPKPoset build_pp_k(int n, int k);

// Every chain is determined by (pi_1, ..., pi_k, phi_k): phi_i is the unique
// element below phi_k with partition pi_i, and no two chains share the tuple.
bool compact_encoding_check(const PPKPoset& p);
// For every element and every partition chain below its projection there is
// exactly one element below it with that projection.
bool unique_descent_check(const PPKPoset& p);

// Componentwise action, as a map on element ids.
std::vector<int> pp_k_action_map(const PPKPoset& p, const Permutation& sigma);

// ---------------------------------------------------------------- Edelman's definition

// The full subposet of NC_{kn} on partitions whose block sizes are all
// multiples of k. Guard kn <= 8.
struct DivisibleNC {
    int n = 0;
    int k = 0;
    std::vector<NoncrossingPartition> elements;
    FinitePoset poset;
};
DivisibleNC edelman_divisible_nc(int n, int k);

// The full subposet of 2-partitions of size kn whose partition has all block
// sizes divisible by k. Guard kn <= 6.
struct DivisiblePP {
    int n = 0;
    int k = 0;
    std::vector<ParkingObject> elements;
    FinitePoset poset;
};
DivisiblePP edelman_divisible_pp(int n, int k);

// ---------------------------------------------------------------- primes

// largest: the printed definition, phi_k prime. smallest: phi_1 prime, the
// reading under which the fixed points give (kn-1)^(z-1).
enum class PrimeReading { largest, smallest };

std::vector<int> k_prime_elements(const PPKPoset& p, PrimeReading reading);
// Number of prime elements fixed by sigma.
Integer k_prime_fixed_count(const PPKPoset& p, PrimeReading reading, const Permutation& sigma);
// The largest-element reading agrees with is_prime_k_word on the k-word of
// every element, through the chain and k-tree bijections.
bool k_prime_word_agreement(const PPKPoset& p);

}  // namespace ncpark
