#pragma once

#include "rado/functional.hpp"
#include "rado/padic.hpp"
#include "rado/polynomial.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace rado {

struct AnalysisConfig {
    long q_max = 7;
    long p_max = 13;
    long d_max = 6;
    unsigned j_max = 4;
    long e_lo = -4;
    long e_hi = 4;
};

enum class MaximalStatus { Holds, FailsWithinBounds, FailsDefinitively };
enum class MinimalStatus { Holds, FailsWithinBounds };

const char* to_string(MaximalStatus s);
const char* to_string(MinimalStatus s);

struct MaximalEntry {
    long q = 2;
    MaximalStatus status = MaximalStatus::FailsWithinBounds;
    std::optional<CandidateFunctional> candidate;  // set when Holds
    MonovariatePoly weighted;                      // its weighted polynomial
    std::size_t candidates_examined = 0;
};

/// For each q: does some upper candidate surviving the necessary filter have
/// a weighted polynomial (base q) with a root in [1, q]? A failure is
/// definitive when no structure of order >= 1 can pass the filter, since
/// order-0 candidates do not depend on offsets at all.
/// Throws std::invalid_argument for q < 2, an empty q_set or zero P.
std::vector<MaximalEntry> check_maximal(const IntPolynomial& p, const std::vector<long>& q_set, long d_max);

struct MinimalEntry {
    long prime = 2;
    MinimalStatus status = MinimalStatus::FailsWithinBounds;
    std::optional<mpz_class> root;
    std::optional<CandidateFunctional> candidate;  // lower candidate of the shifted polynomial
    MonovariatePoly weighted;
    std::optional<PadicApprox> witness;
    std::size_t candidates_examined = 0;
};

/// For each prime p: some integer root a of the diagonal and some lower
/// candidate of P^(a) whose weighted polynomial (base p) has a unit p-adic
/// root. Throws std::invalid_argument when the diagonal is zero or does not
/// split over Z, or when a listed number is not prime.
std::vector<MinimalEntry> check_minimal(const IntPolynomial& p, const std::vector<long>& primes, long d_max);

/// True iff for every integer root a of the diagonal, every minimal cell of
/// P^(a) is homogeneous with nonzero coefficient sum. Homogeneous minimal
/// sets with nonzero sum rule out a nonzero solution of the cell equation, so
/// the minimal condition then fails at every prime, not only the tested ones.
/// Same preconditions as check_minimal.
bool definitive_minimal_failure(const IntPolynomial& p, long d_max);

enum class Family { QuadraticMinusXY, DifferenceOfSquares };

const char* to_string(Family f);

/// x^2 - xy + ax + by + cz  or  x^2 - y^2 + ax + by + cz, matched up to
/// renaming of variables and overall sign.
struct FamilyMatch {
    Family family = Family::QuadraticMinusXY;
    long a = 0, b = 0, c = 0;
    std::vector<std::size_t> variables;  // input variable playing x, y, z
    int sign = 1;                        // input = sign * normal form
    bool partition_regular = false;
    std::string reason;
};

struct FamilyResult {
    std::optional<FamilyMatch> match;
    bool open_problem = false;
    std::string note;
};

FamilyResult classify_family(const IntPolynomial& p);

enum class Outcome { NotPartitionRegular, PartitionRegular, Inconclusive };
enum class Route { ConstantSolutions, FamilyClassifier, MinimalDefinitive, MaximalDefinitive };

const char* to_string(Outcome o);
const char* to_string(Route r);

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::vector<Route> routes;
    FamilyResult family;
    std::vector<MaximalEntry> maximal;
    std::optional<bool> minimal_definitive;  // unset when the minimal condition was skipped
    std::vector<MinimalEntry> minimal;
    std::vector<CandidateFunctional> certified;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
    AnalysisConfig config;
};

/// Full analysis. NotPartitionRegular only on definitive failures of the
/// maximal or minimal condition; PartitionRegular only from constant
/// solutions or a family match.
Verdict analyze(const IntPolynomial& p, const AnalysisConfig& config = {});

/// Primes in [2, bound].
std::vector<long> primes_up_to(long bound);

}  // namespace rado
