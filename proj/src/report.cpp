#include "nilp2/report.hpp"

#include <algorithm>

namespace nilp2 {

namespace {

std::size_t key_slot(std::string_view key) {
  const auto it = std::find(kReportKeys.begin(), kReportKeys.end(), key);
  if (it == kReportKeys.end()) {
    throw Error(ErrorCode::ParseError, "unknown report key '" + std::string(key) + "'");
  }
  return static_cast<std::size_t>(it - kReportKeys.begin());
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

void Report::set(std::string_view key, std::string value) { values[key_slot(key)] = std::move(value); }

const std::optional<std::string>& Report::get(std::string_view key) const {
  return values[key_slot(key)];
}

std::string Report::render() const {
  std::string out;
  for (std::size_t k = 0; k < kReportKeys.size(); ++k) {
    out += kReportKeys[k];
    out += " = ";
    out += values[k].value_or("-");
    out += '\n';
  }
  return out;
}

void add_shape(Report& r, const Presentation& g) {
  r.set("n", std::to_string(g.n()));
  r.set("m", std::to_string(g.m()));
  r.set("order_exp", std::to_string(g.order_exponent()));
}

void add_epicentre(Report& r, const Subspace& z) {
  r.set("epicentre_dim", std::to_string(z.dim()));
  r.set("epicentre_basis", format_basis(z));
}

void add_verdict(Report& r, const CapabilityVerdict& v) {
  r.set("verdict", to_string(v.status));
  r.set("method", to_string(v.method));
  if (v.epicentre) add_epicentre(r, *v.epicentre);
}

void add_rp(Report& r, const RpMembership& rp) {
  r.set("rp_status", to_string(rp.status));
  std::string reasons;
  for (const auto& why : rp.reasons) {
    if (!reasons.empty()) reasons += "; ";
    reasons += why;
  }
  r.set("rp_reasons", reasons);
}

Report extension_report(const ExtensionReport& ext) {
  Report r;
  add_verdict(r, ext.verdict);
  add_shape(r, ext.output);
  add_rp(r, ext.rp);
  r.set("bound_claimed", std::to_string(ext.bound_claimed));
  r.set("bound_actual", std::to_string(ext.bound_actual));
  r.set("bound_ok", flag(ext.bound_ok));
  r.set("embedding_ok", flag(ext.embedding_ok));
  return r;
}

}  // namespace nilp2
