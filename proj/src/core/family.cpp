#include "rainbow/core/family.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include <openssl/evp.h>

namespace rainbow {

HyperGraphFamily::HyperGraphFamily(int r, const std::vector<HyperGraph>& members) : r_(r) {
  for (const auto& m : members) insert(m);
}

HyperGraphFamily HyperGraphFamily::single(const HyperGraph& h) {
  HyperGraphFamily f(h.uniformity());
  f.insert(h);
  return f;
}

bool HyperGraphFamily::insert(const HyperGraph& h) {
  if (h.uniformity() != r_) throw InvalidArgument("family member has the wrong uniformity");
  CanonicalLabel label = canonical_form(h);
  if (std::find(labels_.begin(), labels_.end(), label) != labels_.end()) return false;
  labels_.push_back(std::move(label));
  members_.push_back(h);
  return true;
}

bool HyperGraphFamily::contains_isomorphic(const HyperGraph& h) const {
  if (h.uniformity() != r_) return false;
  const CanonicalLabel label = canonical_form(h);
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

HyperGraphFamily HyperGraphFamily::united_with(const HyperGraphFamily& other) const {
  if (other.r_ != r_) throw InvalidArgument("uniformity mismatch");
  HyperGraphFamily out = *this;
  for (const auto& m : other.members_) out.insert(m);
  return out;
}

std::string HyperGraphFamily::key() const {
  std::vector<CanonicalLabel> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  std::string bytes = "family:" + std::to_string(r_) + ":";
  for (const auto& l : sorted) {
    bytes += std::to_string(l.size());
    bytes += ':';
    bytes += l;
  }
  return short_digest(bytes);
}

bool HyperGraphFamily::equivalent(const HyperGraphFamily& other) const {
  if (other.r_ != r_ || other.size() != size()) return false;
  std::vector<CanonicalLabel> a = labels_, b = other.labels_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string short_digest(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < 8 && i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string graph_key(const HyperGraph& h) { return short_digest("graph:" + canonical_form(h)); }

}  // namespace rainbow
