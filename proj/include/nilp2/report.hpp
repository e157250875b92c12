#ifndef NILP2_REPORT_HPP
#define NILP2_REPORT_HPP

// Flat `key = value` verdict reports. Keys always appear in this order:
//   verdict method epicentre_dim epicentre_basis n m order_exp rp_status
//   rp_reasons bound_claimed bound_actual bound_ok embedding_ok
// Keys a command does not compute carry the value "-".

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "nilp2/capability.hpp"
#include "nilp2/constructions.hpp"

namespace nilp2 {

inline constexpr std::array<std::string_view, 13> kReportKeys = {
    "verdict", "method", "epicentre_dim", "epicentre_basis", "n", "m", "order_exp",
    "rp_status", "rp_reasons", "bound_claimed", "bound_actual", "bound_ok", "embedding_ok"};

struct Report {
  std::array<std::optional<std::string>, kReportKeys.size()> values;

  void set(std::string_view key, std::string value);
  const std::optional<std::string>& get(std::string_view key) const;
  std::string render() const;
};

void add_shape(Report& r, const Presentation& g);
void add_verdict(Report& r, const CapabilityVerdict& v);
void add_epicentre(Report& r, const Subspace& z);
void add_rp(Report& r, const RpMembership& rp);

Report extension_report(const ExtensionReport& ext);

}  // namespace nilp2

#endif  // NILP2_REPORT_HPP
