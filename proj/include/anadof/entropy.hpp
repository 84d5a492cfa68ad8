#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "anadof/types.hpp"

namespace anadof {

/**
 * Finite mixture of i.i.d. components over a q-ary alphabet: draw a
 * component by weight once, then emit L i.i.d. symbols from its marginal.
 * Such sequences are exchangeable, hence entropy-symmetric.
 */
struct MixtureComponent {
  double weight = 1.0;
  std::vector<double> marginal;
};

struct ExchangeableSource {
  int length = 1;    // L
  int alphabet = 2;  // q
  std::vector<MixtureComponent> components;
};

/// Explicit joint distribution over alphabet^length outcomes; outcome
/// (x_1, ..., x_L) is stored at index x_1 + q*x_2 + q^2*x_3 + ...
struct DiscreteJoint {
  int length = 1;
  int alphabet = 2;
  std::vector<double> probs;
};

DiscreteJoint to_joint(const ExchangeableSource& source);

/// Shannon entropy (bits) of the first k coordinates, k in [0, L], by exact
/// enumeration of the q^k marginal outcomes.
double joint_entropy(const ExchangeableSource& source, int k);

/// Entropy (bits) of an arbitrary coordinate subset (0-based positions).
double subset_entropy(const DiscreteJoint& joint, const std::vector<int>& positions);

/// h(x^0), h(x^1), ..., h(x^L) in bits.
struct EntropyProfile {
  std::vector<double> h;
};

EntropyProfile entropy_profile(const ExchangeableSource& source);
EntropyProfile entropy_profile(const DiscreteJoint& joint);

/// True when every pair of equal-size coordinate subsets has equal entropy
/// within tol bits.
bool check_entropy_symmetry(const DiscreteJoint& joint, double tol = 1e-9);
bool check_entropy_symmetry(const ExchangeableSource& source, double tol = 1e-9);

/// One violated instance of the lemma inequalities.
struct LemmaViolation {
  std::string which;  // "increments" or "proportionality"
  int m = 0, n = 0, k = 0;
  double margin = 0.0;
};

/**
 * Exhaustive check of the entropy-symmetric sequence lemma over an entropy
 * profile: for all M >= N >= 0,
 *   increments:      h(x^{N+k}) - h(x^N) >= h(x^{M+k}) - h(x^M)  (M+k <= L),
 *   proportionality: M h(x^N) >= N h(x^M).
 * Margins below -tol are recorded as violations.
 */
struct LemmaReport {
  int checked_increments = 0;
  int checked_proportionality = 0;
  double min_margin_increments = 0.0;
  double min_margin_proportionality = 0.0;
  std::vector<LemmaViolation> violations;
  bool pass = false;
};

LemmaReport verify_essential_lemma(const EntropyProfile& profile, double tol = 1e-9);
LemmaReport verify_essential_lemma(const ExchangeableSource& source, double tol = 1e-9);

nlohmann::json to_json(const LemmaReport& report);

/// Seeded random mixture source: 1-3 components with Dirichlet(1) weights
/// and marginals.
ExchangeableSource random_source(int length, int alphabet, Seed seed);

}  // namespace anadof
