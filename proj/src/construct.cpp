#include "foxh/construct.hpp"

#include "foxh/error.hpp"

namespace foxh {

std::vector<Kernel> ConvolutionSpec::kernels() const {
  std::vector<Kernel> all;
  all.reserve(kernel_count());
  for (const auto* list : {&varphi, &phi, &psi, &eta}) all.insert(all.end(), list->begin(), list->end());
  return all;
}

ValidationReport check_spec(const ConvolutionSpec& spec) {
  ValidationReport report;
  auto scan = [&](const std::vector<Kernel>& list, KernelKind kind) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (list[j].kind != kind) {
        report.violations.push_back({"kernel family", "entry " + std::to_string(j + 1) + " of the " +
                                                          std::string(to_string(kind)) + " list has kind " +
                                                          std::string(to_string(list[j].kind))});
        continue;
      }
      for (auto& v : check_kernel(list[j]).violations) {
        v.message += " (entry " + std::to_string(j + 1) + ")";
        report.violations.push_back(std::move(v));
      }
    }
  };
  scan(spec.varphi, KernelKind::Varphi);
  scan(spec.phi, KernelKind::Phi);
  scan(spec.psi, KernelKind::Psi);
  scan(spec.eta, KernelKind::Eta);
  return report;
}

FoxHParams build_foxh(const ConvolutionSpec& spec) {
  if (auto rep = check_spec(spec); !rep.ok()) throw Error(ErrorCode::SpecInvalid, rep.violations.front().message);
  const std::size_t n1 = spec.varphi.size(), n2 = spec.phi.size(), n3 = spec.psi.size(), n4 = spec.eta.size();
  if (n1 == 0 && n3 == 0) throw Error(ErrorCode::IndexRule, "index rule n1 >= 1 or n3 >= 1 fails");

  FoxHParams h;
  h.m = n1 + n2 + n3;
  h.n = n3 + n4;
  h.p = n2 + n3 + n4;
  h.q = n1 + n2 + n3 + n4;
  for (const auto& k : spec.psi) h.upper.push_back({Number(1) - k.c, k.a});
  for (const auto& k : spec.eta) h.upper.push_back({Number(1) - k.b, k.a});
  for (const auto& k : spec.phi) h.upper.push_back({k.c, k.a});
  for (const auto& k : spec.varphi) h.lower.push_back({k.b, k.a});
  for (const auto& k : spec.phi) h.lower.push_back({k.b, k.a});
  for (const auto& k : spec.psi) h.lower.push_back({k.b, k.a});
  for (const auto& k : spec.eta) h.lower.push_back({Number(1) - k.c, k.a});
  return h;
}

EpReport ep_report(const ConvolutionSpec& spec) {
  EpReport rep;
  rep.violations = check_spec(spec).violations;
  for (std::size_t j = 0; j < spec.psi.size(); ++j) {
    if (spec.psi[j].c == Number(0))
      rep.violations.push_back({"psi: r = 0 boundary",
                                "psi entry " + std::to_string(j + 1) +
                                    " has r = 0 (MacRobert boundary case); not certified"});
  }
  const bool index_rule = !spec.varphi.empty() || !spec.psi.empty();
  if (!index_rule) rep.violations.push_back({"index rule n1>=1 or n3>=1", "no varphi or psi kernel present"});

  for (const auto& k : spec.varphi) rep.chi_prime += k.a;
  for (const auto& k : spec.psi) rep.chi_prime += Number(2) * k.a;

  Extended xi = Extended::pos_inf(), xi_prime = Extended::pos_inf();
  for (const auto& k : spec.varphi) xi = std::min(xi, Extended(k.b / k.a));
  for (const auto& k : spec.phi) xi = std::min(xi, Extended(k.b / k.a));
  for (const auto& k : spec.psi) xi = std::min(xi, Extended(k.b / k.a));
  for (const auto& k : spec.psi) xi_prime = std::min(xi_prime, Extended(k.c / k.a));
  for (const auto& k : spec.eta) xi_prime = std::min(xi_prime, Extended(k.b / k.a));
  rep.strip = MellinStrip{-xi, xi_prime};

  if (!(rep.chi_prime > Number(0)) && index_rule)
    rep.violations.push_back({"chi' > 0", "chi' = " + rep.chi_prime.to_string()});
  if (rep.strip.empty()) rep.violations.push_back({"strip nonempty", "strip " + rep.strip.to_string() + " is empty"});

  if (rep.violations.empty()) {
    PoleCheck poles = check_pole_separation(build_foxh(spec));
    rep.pole_check_mode = poles.mode;
    if (!poles.separated)
      rep.violations.push_back({"pole separation", "Gamma poles of the m- and n-blocks coincide"});
  }
  rep.ok = rep.violations.empty();
  return rep;
}

std::complex<double> spec_mellin(const ConvolutionSpec& spec, std::complex<double> s) {
  std::complex<double> prod = 1.0;
  for (const auto& k : spec.kernels()) prod *= kernel_mellin(k, s);
  return prod;
}

}  // namespace foxh
