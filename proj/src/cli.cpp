#include "latcuts/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "latcuts/selftest.hpp"
#include "latcuts/textio.hpp"

namespace latcuts {

namespace {

constexpr const char* kUsage =
    "usage: latcuts <command> ...\n"
    "  count <lattice-file> <family-file>\n"
    "  enumerate <lattice-file> <family-file>\n"
    "  unique <lattice-file> <family-file>\n"
    "  oracle <lattice-file> <family-file>\n"
    "  cuts <lattice-file> <fuzzy-file>\n"
    "  automorphisms <lattice-file|family-file>\n"
    "  selftest [--instances N] [--max-lattice K] [--max-domain M] [--seed S]\n";

struct Caps {
  std::size_t lattice_cap = kDefaultCarrierCap;
  long long oracle_cap = kDefaultOracleCap;
};

std::optional<Caps> caps_from_env(std::ostream& err) {
  Caps caps;
  const char* raw = std::getenv("LATTICE_CUTS_CAPS");
  if (raw == nullptr) return caps;
  const std::string text(raw);
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const long long a = std::stoll(text.substr(0, comma), &used_a);
    const long long b = std::stoll(text.substr(comma + 1), &used_b);
    if (used_a != comma || used_b != text.size() - comma - 1 || a < 1 || b < 1) {
      throw std::invalid_argument("bad value");
    }
    caps.lattice_cap = static_cast<std::size_t>(a);
    caps.oracle_cap = b;
  } catch (const std::exception&) {
    err << "error: LATTICE_CUTS_CAPS must be two positive integers separated by a comma\n";
    return std::nullopt;
  }
  return caps;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::family_not_closed:
      return 2;
    case Errc::internal_invariant:
    case Errc::witness_verification_failed:
      return 3;
    case Errc::search_space_too_large:
    case Errc::carrier_too_large:
      return 4;
    default:
      return 1;
  }
}

void print_blocks(std::ostream& out, const std::vector<FuzzySet>& list) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out << "\n";
    const FuzzySet& mu = list[i];
    for (std::size_t x = 0; x < mu.domain().size(); ++x) {
      out << "map: " << mu.domain()[x] << " -> "
          << mu.lattice().name(mu.value(static_cast<int>(x))) << "\n";
    }
  }
}

// Shared front matter of the four lattice+family commands. Returns the
// closure verdict so callers can exit 2 uniformly.
struct LatFam {
  Lattice lattice;
  SetFamily family;
};

LatFam load_lat_fam(const std::string& lat_path, const std::string& fam_path,
                    const Caps& caps) {
  Lattice lattice = parse_lattice(slurp(lat_path), caps.lattice_cap);
  SetFamily family = parse_family(slurp(fam_path));
  return LatFam{std::move(lattice), std::move(family)};
}

int cmd_count(const LatFam& in, std::ostream& out) {
  const RepresentationReport report = analyze(in.lattice, in.family, false);
  out << "|S|=" << report.sublattices.size() << " |OI|=" << report.automorphism_count
      << " |N|=" << report.total << "\n";
  return 0;
}

int cmd_enumerate(const LatFam& in, std::ostream& out) {
  print_blocks(out, representations(in.lattice, in.family));
  return 0;
}

int cmd_unique(const LatFam& in, std::ostream& out) {
  const RepresentationReport report = analyze(in.lattice, in.family, false);
  if (report.unique) {
    out << "unique\n";
  } else {
    out << "not-unique (" << report.total << ")\n";
  }
  return 0;
}

int cmd_oracle(const LatFam& in, const Caps& caps, std::ostream& out) {
  const auto scanned = brute_force_representations(in.lattice, in.family, caps.oracle_cap);
  const auto enumerated = representations(in.lattice, in.family);
  print_blocks(out, scanned);
  if (!scanned.empty()) out << "\n";
  const bool match =
      scanned.size() == enumerated.size() &&
      std::equal(scanned.begin(), scanned.end(), enumerated.begin(),
                 [](const FuzzySet& a, const FuzzySet& b) {
                   return a.values() == b.values();
                 });
  out << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? 0 : 3;
}

int cmd_cuts(const std::string& lat_path, const std::string& fz_path,
             const Caps& caps, std::ostream& out) {
  const Lattice lattice = parse_lattice(slurp(lat_path), caps.lattice_cap);
  const FuzzySet mu = parse_fuzzy(slurp(fz_path), lattice);
  for (int p = 0; p < static_cast<int>(lattice.size()); ++p) {
    out << "cut: " << lattice.name(p) << " ->";
    for (int x : mu.cut(p)) out << " " << mu.domain()[static_cast<std::size_t>(x)];
    out << "\n";
  }
  return 0;
}

int cmd_automorphisms(const std::string& path, const Caps& caps,
                      std::ostream& out, std::ostream& err) {
  const bool is_lattice = path.size() >= 4 && path.substr(path.size() - 4) == ".lat";
  const bool is_family = path.size() >= 4 && path.substr(path.size() - 4) == ".fam";
  if (!is_lattice && !is_family) {
    err << "error: automorphisms needs a .lat or .fam file\n";
    return 1;
  }
  Poset poset = is_lattice
                    ? parse_lattice(slurp(path), caps.lattice_cap).poset()
                    : family_dual_poset(parse_family(slurp(path)));
  const auto group = automorphisms(poset);
  for (const OrderMap& g : group) {
    out << "auto:";
    for (int i = 0; i < static_cast<int>(poset.size()); ++i) {
      out << " " << poset.name(i) << "->" << poset.name(g(i));
    }
    out << "\n";
  }
  out << "|OI|=" << group.size() << "\n";
  return 0;
}

int cmd_selftest(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  SelftestOptions options;
  for (std::size_t i = 1; i < args.size(); i += 2) {
    if (i + 1 >= args.size()) {
      err << "error: missing value for " << args[i] << "\n";
      return 1;
    }
    long long value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(args[i + 1], &used);
      if (used != args[i + 1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      err << "error: " << args[i] << " needs an integer value\n";
      return 1;
    }
    if (args[i] == "--instances" && value >= 1) {
      options.instances = static_cast<int>(value);
    } else if (args[i] == "--max-lattice" && value >= 2) {
      options.max_lattice = static_cast<int>(value);
    } else if (args[i] == "--max-domain" && value >= 1) {
      options.max_domain = static_cast<int>(value);
    } else if (args[i] == "--seed" && value >= 0) {
      options.seed = static_cast<std::uint64_t>(value);
    } else {
      err << "error: bad selftest option '" << args[i] << " " << args[i + 1] << "'\n";
      return 1;
    }
  }
  out << "selftest: seed=" << options.seed << " instances=" << options.instances
      << " max-lattice=" << options.max_lattice
      << " max-domain=" << options.max_domain << "\n";
  const SelftestResult result = run_selftest(options);
  for (const auto& line : result.failures) out << line << "\n";
  out << "selftest: " << result.passed << "/" << result.instances << " passed\n";
  return result.all_passed() ? 0 : 3;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  const auto caps = caps_from_env(err);
  if (!caps) return 1;
  if (args.empty()) {
    err << kUsage;
    return 1;
  }
  const std::string& command = args[0];
  try {
    if (command == "count" || command == "enumerate" || command == "unique" ||
        command == "oracle") {
      if (args.size() != 3) {
        err << kUsage;
        return 1;
      }
      const LatFam in = load_lat_fam(args[1], args[2], *caps);
      if (!is_closure_system(in.family)) {
        err << "error: family is not intersection-closed or misses its universe\n";
        return 2;
      }
      if (command == "count") return cmd_count(in, out);
      if (command == "enumerate") return cmd_enumerate(in, out);
      if (command == "unique") return cmd_unique(in, out);
      return cmd_oracle(in, *caps, out);
    }
    if (command == "cuts") {
      if (args.size() != 3) {
        err << kUsage;
        return 1;
      }
      return cmd_cuts(args[1], args[2], *caps, out);
    }
    if (command == "automorphisms") {
      if (args.size() != 2) {
        err << kUsage;
        return 1;
      }
      return cmd_automorphisms(args[1], *caps, out, err);
    }
    if (command == "selftest") {
      return cmd_selftest(args, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  err << kUsage;
  return 1;
}

}  // namespace latcuts
