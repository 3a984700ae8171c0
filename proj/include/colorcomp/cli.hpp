#pragma once

// Command implementations behind the `colorcomp` tool. Each command writes
// to the given streams and returns the process exit status, so the same code
// is exercised in-process by the tests and by the executable.

#include "colorcomp/bfile.hpp"
#include "colorcomp/bijection.hpp"
#include "colorcomp/core.hpp"
#include "colorcomp/counting.hpp"
#include "colorcomp/enumeration.hpp"
#include "colorcomp/serialize.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace colorcomp::cli {

enum exit_code : int {
  ok = 0,
  usage = 2,
  disagreement = 3,
  invalid_object = 4,
  mismatch = 5,
};

inline const std::vector<std::string>& count_methods() {
  static const std::vector<std::string> methods{"closed", "recurrence", "partition", "enumerate"};
  return methods;
}

struct CountOptions {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t nu = 0;
  std::optional<std::int64_t> k{};
  std::string method = "closed";
  bool all_methods = false;
};

namespace detail {

inline std::int64_t enumerate_count(const ColorLaw& law, std::int64_t nu, std::int64_t k) {
  return drain_count(enumerate_colored_law(law, nu, k));
}

// nullopt when the method does not apply to these arguments.
inline std::optional<Count> run_count_method(const std::string& method, const ColorLaw& law,
                                             std::int64_t nu, std::optional<std::int64_t> k) {
  if (method == "closed") return k ? count_parts_closed(law, nu, *k) : count_total_closed(law, nu);
  if (method == "recurrence") {
    if (k) return std::nullopt;
    return count_total_recurrence(law, nu);
  }
  if (method == "partition") {
    const auto w = WeightSequence::from_law(law, nu);
    if (k) return count_parts_partition(w, nu, *k);
    Count total = 0;
    for (std::int64_t parts = 1; parts <= nu; ++parts) total += count_parts_partition(w, nu, parts);
    return total;
  }
  if (method == "enumerate") {
    if (!law.enumerable()) return std::nullopt;
    if (k) return Count(static_cast<long>(enumerate_count(law, nu, *k)));
    Count total = 0;
    for (std::int64_t parts = 1; parts <= nu; ++parts)
      total += static_cast<long>(enumerate_count(law, nu, parts));
    return total;
  }
  return std::nullopt;
}

} // namespace detail

inline int cmd_count(const CountOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.a < 0 || opt.nu < 1 || (opt.k && *opt.k < 1)) {
    err << "count: requires --a >= 0, --nu >= 1 and --k >= 1\n";
    return usage;
  }
  const ColorLaw law(opt.a, opt.b);
  if (!opt.all_methods) {
    const auto& known = count_methods();
    if (std::find(known.begin(), known.end(), opt.method) == known.end()) {
      err << "count: unknown method \"" << opt.method << "\"\n";
      return usage;
    }
    auto value = detail::run_count_method(opt.method, law, opt.nu, opt.k);
    if (!value) {
      err << "count: method \"" << opt.method << "\" does not apply"
          << (opt.k ? " with --k" : "") << (law.enumerable() ? "" : " with b < 0") << "\n";
      return usage;
    }
    out << value->get_str() << "\n";
    return ok;
  }

  std::optional<Count> reference;
  bool agree = true;
  for (const auto& method : count_methods()) {
    auto value = detail::run_count_method(method, law, opt.nu, opt.k);
    if (!value) continue;
    out << method << " " << value->get_str() << "\n";
    if (!reference)
      reference = *value;
    else if (*reference != *value)
      agree = false;
  }
  if (!agree) {
    err << "count: methods disagree\n";
    return disagreement;
  }
  return ok;
}

struct EnumerateOptions {
  std::string kind = "colored";
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t nu = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> j{};
};

inline int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.a < 0 || opt.b < 0) {
    err << "enumerate: requires a >= 0 and b >= 0\n";
    return usage;
  }
  if (opt.nu < 1 || opt.k < 1) {
    err << "enumerate: requires --nu >= 1 and --k >= 1\n";
    return usage;
  }
  const ColorLaw law(opt.a, opt.b);
  std::int64_t total = 0;
  if (opt.kind == "colored") {
    if (opt.j) {
      err << "enumerate: --j applies only to --kind domino\n";
      return usage;
    }
    auto gen = enumerate_colored_law(law, opt.nu, opt.k);
    while (const auto* c = gen.next()) {
      out << encode(*c) << "\n";
      ++total;
    }
  } else if (opt.kind == "domino") {
    if (opt.j && (*opt.j < 0 || *opt.j > opt.k)) {
      err << "enumerate: requires 0 <= --j <= --k\n";
      return usage;
    }
    auto gen = enumerate_domino(law, opt.nu, opt.k, opt.j);
    while (const auto* d = gen.next()) {
      out << encode(*d) << "\n";
      ++total;
    }
  } else {
    err << "enumerate: unknown kind \"" << opt.kind << "\"\n";
    return usage;
  }
  out << "# total " << total << "\n";
  return ok;
}

struct MapOptions {
  std::string direction;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

inline int cmd_map(const MapOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  if (opt.direction != "phi" && opt.direction != "psi") {
    err << "map: --direction must be phi or psi\n";
    return usage;
  }
  if (opt.a < 0 || opt.b < 0 || (opt.a == 0 && opt.b == 0)) {
    err << "map: requires a >= 0, b >= 0 and a + b >= 1\n";
    return usage;
  }
  const ColorLaw law(opt.a, opt.b);
  const std::string text(std::istreambuf_iterator<char>(in), {});
  try {
    if (opt.direction == "phi") {
      const auto dc = decode_domino(text);
      out << encode(law.a() == 0 ? phi_zero_a(dc, law) : phi(dc, law)) << "\n";
    } else {
      const auto comp = decode_colored(text);
      out << encode(law.a() == 0 ? psi_zero_a(comp, law) : psi(comp, law)) << "\n";
    }
  } catch (const parse_error& e) {
    err << "map: " << e.what() << "\n";
    return usage;
  } catch (const validation_error& e) {
    err << "map: " << e.what() << "\n";
    return invalid_object;
  }
  return ok;
}

struct VerifyOptions {
  std::optional<std::string> fixture{};
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t offset = 0;
  std::optional<std::int64_t> terms{};
  bool fibonacci = false;
  std::int64_t max_nu = 0;
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::size_t failures = 0;
  std::size_t checked = 0;
  if (opt.fibonacci) {
    if (opt.max_nu < 1) {
      err << "verify: --fibonacci requires --max-nu >= 1\n";
      return usage;
    }
    for (std::int64_t nu = 1; nu <= opt.max_nu; ++nu) {
      auto [fib, sum] = fibonacci_identity_check(nu);
      const bool pass = fib == sum;
      failures += !pass;
      ++checked;
      out << (pass ? "PASS" : "FAIL") << " nu=" << nu << " F=" << fib.get_str()
          << " sum=" << sum.get_str() << "\n";
    }
  } else {
    if (!opt.fixture) {
      err << "verify: requires --fixture or --fibonacci\n";
      return usage;
    }
    if (opt.a < 0 || (opt.terms && *opt.terms < 1)) {
      err << "verify: requires --a >= 0 and --terms >= 1\n";
      return usage;
    }
    std::vector<TermCheck> checks;
    try {
      checks = verify_bfile(load_bfile(*opt.fixture), ColorLaw(opt.a, opt.b), opt.offset, opt.terms);
    } catch (const bfile_error& e) {
      err << "verify: " << e.what() << "\n";
      return usage;
    }
    for (const auto& c : checks) {
      failures += !c.pass();
      ++checked;
      out << (c.pass() ? "PASS" : "FAIL") << " nu=" << c.nu << " index=" << c.index
          << " expected=" << c.expected.get_str() << " got=" << c.actual.get_str() << "\n";
    }
  }
  out << "# checked " << checked << ", failed " << failures << "\n";
  return failures == 0 ? ok : mismatch;
}

} // namespace colorcomp::cli
