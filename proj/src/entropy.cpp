#include "anadof/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "anadof/channel.hpp"

namespace anadof {
namespace {

void validate(const ExchangeableSource& source) {
  if (source.length < 1 || source.alphabet < 2)
    throw std::invalid_argument("ExchangeableSource: need length >= 1, alphabet >= 2");
  if (source.components.empty())
    throw std::invalid_argument("ExchangeableSource: need >= 1 component");
  double wsum = 0.0;
  for (const auto& comp : source.components) {
    if (comp.weight < 0.0) throw std::invalid_argument("ExchangeableSource: negative weight");
    if (static_cast<int>(comp.marginal.size()) != source.alphabet)
      throw std::invalid_argument("ExchangeableSource: marginal size != alphabet");
    double psum = 0.0;
    for (double p : comp.marginal) {
      if (p < 0.0) throw std::invalid_argument("ExchangeableSource: negative probability");
      psum += p;
    }
    if (std::abs(psum - 1.0) > 1e-9)
      throw std::invalid_argument("ExchangeableSource: marginal does not sum to 1");
    wsum += comp.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw std::invalid_argument("ExchangeableSource: weights do not sum to 1");
}

std::size_t ipow(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

double entropy_bits(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace

DiscreteJoint to_joint(const ExchangeableSource& source) {
  validate(source);
  DiscreteJoint joint;
  joint.length = source.length;
  joint.alphabet = source.alphabet;
  const std::size_t n = ipow(source.alphabet, source.length);
  joint.probs.assign(n, 0.0);
  std::vector<int> x(source.length, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    double p = 0.0;
    for (const auto& comp : source.components) {
      double prod = comp.weight;
      for (int i = 0; i < source.length; ++i) prod *= comp.marginal[x[i]];
      p += prod;
    }
    joint.probs[idx] = p;
    for (int i = 0; i < source.length; ++i) {
      if (++x[i] < source.alphabet) break;
      x[i] = 0;
    }
  }
  return joint;
}

double joint_entropy(const ExchangeableSource& source, int k) {
  validate(source);
  if (k < 0 || k > source.length)
    throw std::out_of_range("joint_entropy: k must be in [0, length]");
  if (k == 0) return 0.0;
  const std::size_t n = ipow(source.alphabet, k);
  std::vector<double> probs(n, 0.0);
  std::vector<int> x(k, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (const auto& comp : source.components) {
      double prod = comp.weight;
      for (int i = 0; i < k; ++i) prod *= comp.marginal[x[i]];
      probs[idx] += prod;
    }
    for (int i = 0; i < k; ++i) {
      if (++x[i] < source.alphabet) break;
      x[i] = 0;
    }
  }
  return entropy_bits(probs);
}

double subset_entropy(const DiscreteJoint& joint, const std::vector<int>& positions) {
  for (int p : positions)
    if (p < 0 || p >= joint.length) throw std::out_of_range("subset_entropy: bad position");
  if (joint.probs.size() != ipow(joint.alphabet, joint.length))
    throw std::invalid_argument("subset_entropy: joint table size mismatch");
  if (positions.empty()) return 0.0;
  std::vector<double> marginal(ipow(joint.alphabet, static_cast<int>(positions.size())), 0.0);
  const int q = joint.alphabet;
  for (std::size_t idx = 0; idx < joint.probs.size(); ++idx) {
    std::size_t sub = 0, scale = 1;
    for (int p : positions) {
      sub += scale * ((idx / ipow(q, p)) % static_cast<std::size_t>(q));
      scale *= static_cast<std::size_t>(q);
    }
    marginal[sub] += joint.probs[idx];
  }
  return entropy_bits(marginal);
}

EntropyProfile entropy_profile(const ExchangeableSource& source) {
  EntropyProfile profile;
  for (int k = 0; k <= source.length; ++k) profile.h.push_back(joint_entropy(source, k));
  return profile;
}

EntropyProfile entropy_profile(const DiscreteJoint& joint) {
  EntropyProfile profile;
  std::vector<int> prefix;
  profile.h.push_back(0.0);
  for (int k = 0; k < joint.length; ++k) {
    prefix.push_back(k);
    profile.h.push_back(subset_entropy(joint, prefix));
  }
  return profile;
}

bool check_entropy_symmetry(const DiscreteJoint& joint, double tol) {
  const int l = joint.length;
  std::vector<double> lo(l + 1, 0.0), hi(l + 1, 0.0);
  std::vector<bool> seen(l + 1, false);
  for (unsigned mask = 1; mask < (1u << l); ++mask) {
    std::vector<int> positions;
    for (int p = 0; p < l; ++p)
      if (mask & (1u << p)) positions.push_back(p);
    const double h = subset_entropy(joint, positions);
    const int size = static_cast<int>(positions.size());
    if (!seen[size]) {
      lo[size] = hi[size] = h;
      seen[size] = true;
    } else {
      lo[size] = std::min(lo[size], h);
      hi[size] = std::max(hi[size], h);
    }
  }
  for (int size = 1; size <= l; ++size)
    if (seen[size] && hi[size] - lo[size] > tol) return false;
  return true;
}

bool check_entropy_symmetry(const ExchangeableSource& source, double tol) {
  return check_entropy_symmetry(to_joint(source), tol);
}

LemmaReport verify_essential_lemma(const EntropyProfile& profile, double tol) {
  const int l = static_cast<int>(profile.h.size()) - 1;
  if (l < 0 || std::abs(profile.h[0]) > tol)
    throw std::invalid_argument("verify_essential_lemma: profile must start at h(empty) = 0");
  LemmaReport report;
  bool first1 = true, first2 = true;
  for (int n = 0; n <= l; ++n) {
    for (int m = n; m <= l; ++m) {
      for (int k = 0; m + k <= l; ++k) {
        const double margin =
            (profile.h[n + k] - profile.h[n]) - (profile.h[m + k] - profile.h[m]);
        ++report.checked_increments;
        if (first1 || margin < report.min_margin_increments) {
          report.min_margin_increments = margin;
          first1 = false;
        }
        if (margin < -tol) report.violations.push_back({"increments", m, n, k, margin});
      }
      const double margin = m * profile.h[n] - n * profile.h[m];
      ++report.checked_proportionality;
      if (first2 || margin < report.min_margin_proportionality) {
        report.min_margin_proportionality = margin;
        first2 = false;
      }
      if (margin < -tol) report.violations.push_back({"proportionality", m, n, 0, margin});
    }
  }
  report.pass = report.violations.empty();
  return report;
}

LemmaReport verify_essential_lemma(const ExchangeableSource& source, double tol) {
  return verify_essential_lemma(entropy_profile(source), tol);
}

nlohmann::json to_json(const LemmaReport& report) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations)
    violations.push_back(
        {{"which", v.which}, {"M", v.m}, {"N", v.n}, {"k", v.k}, {"margin", v.margin}});
  return {{"checked_increments", report.checked_increments},
          {"checked_proportionality", report.checked_proportionality},
          {"min_margin_increments", report.min_margin_increments},
          {"min_margin_proportionality", report.min_margin_proportionality},
          {"violations", violations},
          {"pass", report.pass}};
}

ExchangeableSource random_source(int length, int alphabet, Seed seed) {
  if (length < 1 || alphabet < 2)
    throw std::invalid_argument("random_source: need length >= 1, alphabet >= 2");
  GaussianStream stream(derive_seed(seed, seed_domain::kSource));
  ExchangeableSource source;
  source.length = length;
  source.alphabet = alphabet;
  const int ncomp = 1 + static_cast<int>(stream.next_unit() * 3.0);
  std::vector<double> weights;
  double wsum = 0.0;
  for (int c = 0; c < ncomp; ++c) {
    weights.push_back(-std::log(1.0 - stream.next_unit()));
    wsum += weights.back();
  }
  for (int c = 0; c < ncomp; ++c) {
    MixtureComponent comp;
    comp.weight = weights[c] / wsum;
    double psum = 0.0;
    for (int s = 0; s < alphabet; ++s) {
      comp.marginal.push_back(-std::log(1.0 - stream.next_unit()));
      psum += comp.marginal.back();
    }
    for (double& p : comp.marginal) p /= psum;
    source.components.push_back(std::move(comp));
  }
  return source;
}

}  // namespace anadof
