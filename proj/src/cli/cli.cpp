#include "borel/cli.hpp"

#include "borel/borel_basis.hpp"
#include "borel/errors.hpp"
#include "borel/ideals.hpp"
#include "borel/json_io.hpp"
#include "borel/lattice.hpp"
#include "borel/notation.hpp"
#include "borel/root_system.hpp"
#include "borel/subalgebra.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace borel::cli {

namespace {

using json_io::json;

const std::map<std::string, Subcommand> kSubcommands = {
    {"roots", Subcommand::roots},           {"ideals", Subcommand::ideals},
    {"abelian", Subcommand::abelian},       {"classify", Subcommand::classify},
    {"lattice", Subcommand::lattice},       {"normalizer", Subcommand::normalizer},
    {"centralizer", Subcommand::centralizer}, {"check", Subcommand::check}};

std::string subcommand_name(Subcommand s) {
  for (const auto& [name, value] : kSubcommands)
    if (value == s) return name;
  return "?";
}

class HelpRequested : public std::exception {
public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const std::string& text() const { return text_; }

private:
  std::string text_;
};

struct Style {
  bool on;
  std::string key(const std::string& s) const { return on ? "\033[1m" + s + "\033[0m" : s; }
  std::string note(const std::string& s) const { return on ? "\033[2m" + s + "\033[0m" : s; }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string roots_text(const std::vector<Root>& roots, bool unicode) {
  std::vector<std::string> parts;
  for (const auto& r : roots) parts.push_back(to_string(r, unicode));
  return join(parts, ", ");
}

std::string root_vectors_text(const std::vector<Root>& roots, bool unicode) {
  std::vector<std::string> parts;
  for (const auto& r : roots) parts.push_back("X[" + to_string(r, unicode) + "]");
  return "[" + join(parts, ", ") + "]";
}

/// "2H[a1]+H[a2]"
std::string cartan_element_text(const IntMatrix<std::int64_t>& vectors, Eigen::Index row, bool unicode) {
  std::string out;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    const auto c = vectors(row, j);
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += to_string(BasisElement{CartanGenerator{static_cast<int>(j)}}, unicode);
  }
  return out;
}

std::string kernel_text(const CartanKernelBasis& k, bool unicode) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < k.vectors.rows(); ++i) parts.push_back(cartan_element_text(k.vectors, i, unicode));
  return "[" + join(parts, ", ") + "]";
}

json header(const Command& c, const RootSystem& rs) {
  return {{"subcommand", subcommand_name(c.subcommand)},
          {"family", std::string(1, family_letter(rs.family()))},
          {"rank", rs.rank()},
          {"positive_roots", json_io::roots_to_json({rs.positive_roots().begin(), rs.positive_roots().end()})}};
}

const char* kClassificationNote =
    "every ideal of the Borel subalgebra is span(S) + span{X_g : g in R_J} for one listed R_J and a "
    "subspace S of its kernel; kernels with dimension > 0 give infinitely many ideals";

void emit_roots(const Command& c, const RootSystem& rs, std::ostream& out) {
  const auto basis = borel_basis(rs);
  std::vector<std::string> basis_names;
  for (const auto& e : basis.elements()) basis_names.push_back(to_string(e, c.unicode));
  std::vector<std::string> nil_names;
  for (const auto& x : basis.nilradical_part) nil_names.push_back(to_string(BasisElement{x}, c.unicode));
  std::vector<std::string> rows;
  for (Eigen::Index i = 0; i < rs.cartan().rows(); ++i) {
    std::vector<std::string> entries;
    for (Eigen::Index j = 0; j < rs.cartan().cols(); ++j) entries.push_back(std::to_string(rs.cartan()(i, j)));
    rows.push_back("[" + join(entries, ",") + "]");
  }
  const std::vector<Root> positive(rs.positive_roots().begin(), rs.positive_roots().end());
  const std::string dynkin = dynkin_description(rs.family(), rs.rank(), rs.cartan());

  if (c.format == Format::json) {
    json doc = header(c, rs);
    json cartan = json::array();
    for (Eigen::Index i = 0; i < rs.cartan().rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < rs.cartan().cols(); ++j) row.push_back(rs.cartan()(i, j));
      cartan.push_back(row);
    }
    doc["cartan_matrix"] = cartan;
    doc["dynkin"] = dynkin;
    doc["simple_roots"] = json_io::roots_to_json(rs.simple_roots());
    doc["highest_root"] = json_io::to_json(rs.highest_root());
    doc["borel_basis"] = basis_names;
    doc["counts"] = {{"positive_roots", rs.size()}, {"borel_dimension", basis.size()}};
    out << doc.dump(2) << '\n';
    return;
  }
  const Style s{c.color};
  out << s.key("type:") << ' ' << rs.label() << '\n'
      << s.key("dynkin:") << ' ' << dynkin << '\n'
      << s.key("cartan_matrix:") << " [" << join(rows, ",") << "]\n"
      << s.key("positive_roots:") << ' ' << roots_text(positive, c.unicode) << '\n'
      << s.key("simple_roots:") << ' ' << roots_text(rs.simple_roots(), c.unicode) << '\n'
      << s.key("highest_root:") << ' ' << to_string(rs.highest_root(), c.unicode) << '\n'
      << s.key("nilradical_basis:") << " [" << join(nil_names, ", ") << "]\n"
      << s.key("borel_basis:") << " [" << join(basis_names, ", ") << "]\n";
}

void emit_ideal_list(const Command& c, const RootSystem& rs, const std::vector<MonomialIdeal>& ideals,
                     std::ostream& out) {
  if (c.format == Format::json) {
    json doc = header(c, rs);
    doc["include_zero"] = c.subcommand == Subcommand::abelian || c.include_zero;
    json list = json::array();
    for (const auto& j : ideals) list.push_back(json_io::ideal_to_json(j, rs));
    doc["ideals"] = list;
    if (c.subcommand == Subcommand::ideals) doc["counts"] = json_io::counts_to_json(counts_by_dimension(ideals, rs));
    else doc["counts"] = {{"abelian_with_zero", ideals.size()}};
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& j : ideals) out << to_string(j, rs, c.unicode) << '\n';
}

void emit_classification(const Command& c, const RootSystem& rs, std::ostream& out) {
  const auto classification = full_ideal_classification(rs, {c.jobs});
  if (c.format == Format::json) {
    json doc = header(c, rs);
    doc["note"] = kClassificationNote;
    json list = json::array();
    std::vector<MonomialIdeal> ideals;
    int mixed = 0;
    for (const auto& e : classification.entries) {
      json entry = json_io::ideal_to_json(e.ideal, rs);
      entry["kernel_dimension"] = e.kernel.dimension();
      entry["kernel_basis"] = json_io::kernel_to_json(e.kernel);
      entry["mixed"] = e.mixed;
      list.push_back(std::move(entry));
      ideals.push_back(e.ideal);
      mixed += e.mixed ? 1 : 0;
    }
    doc["ideals"] = list;
    json counts = json_io::counts_to_json(counts_by_dimension(ideals, rs));
    counts["mixed_families"] = mixed;
    doc["counts"] = counts;
    out << doc.dump(2) << '\n';
    return;
  }
  const Style s{c.color};
  out << s.note(std::string("# ") + kClassificationNote) << '\n';
  for (const auto& e : classification.entries) {
    out << to_string(e.ideal, rs, c.unicode) << " | kernel_dim=" << e.kernel.dimension()
        << " | kernel=" << kernel_text(e.kernel, c.unicode);
    if (e.mixed) out << " | mixed";
    out << '\n';
  }
}

void emit_lattice(const Command& c, const RootSystem& rs, std::ostream& out) {
  const auto ideals = enumerate_nilradical_ideals(rs, {c.jobs});
  const auto lattice = build_lattice(ideals, rs);
  if (c.format == Format::dot) {
    out << export_dot(lattice, rs, {rs.label(), c.unicode, true});
    return;
  }
  if (c.format == Format::json) {
    json doc = header(c, rs);
    json nodes = json::array();
    for (const auto& j : lattice.nodes) nodes.push_back(json_io::ideal_to_json(j, rs));
    json edges = json::array();
    for (const auto& [a, b] : lattice.cover_edges) edges.push_back({a, b});
    doc["nodes"] = nodes;
    doc["cover_edges"] = edges;
    doc["counts"] = json_io::counts_to_json(counts_by_dimension(ideals, rs));
    out << doc.dump(2) << '\n';
    return;
  }
  const Style s{c.color};
  out << s.key("nodes:") << '\n';
  for (std::size_t k = 0; k < lattice.nodes.size(); ++k)
    out << "n" << k << ' ' << to_string(lattice.nodes[k], rs, c.unicode) << '\n';
  out << s.key("edges:") << '\n';
  for (const auto& [a, b] : lattice.cover_edges) out << "n" << a << " -> n" << b << '\n';
}

std::vector<Root> require_set(const Command& c, const RootSystem& rs) {
  if (!c.set) throw InvalidInput(subcommand_name(c.subcommand) + " requires --set \"<roots>\"");
  return parse_root_set(*c.set, rs);
}

void emit_subalgebra_op(const Command& c, const RootSystem& rs, std::ostream& out) {
  const auto input = require_set(c, rs);
  const MonomialSubalgebra sub(input, rs);
  const std::vector<Root> result = c.subcommand == Subcommand::normalizer
                                       ? monomial_normalizer(sub, rs).roots(rs)
                                       : monomial_centralizer(sub, rs);
  if (c.format == Format::json) {
    json doc = header(c, rs);
    doc["input"] = json_io::roots_to_json(input);
    doc["result"] = json_io::roots_to_json(result);
    out << doc.dump(2) << '\n';
    return;
  }
  out << root_vectors_text(result, c.unicode) << '\n';
}

int emit_check(const Command& c, const RootSystem& rs, std::ostream& out) {
  if (c.set) {
    const auto input = parse_root_set(*c.set, rs);
    const bool ideal = is_monomial_ideal(input, rs);
    const bool sub = is_monomial_subalgebra(input, rs);
    const bool abelian = ideal && is_abelian(MonomialIdeal::from_roots(input, rs), rs);
    if (c.format == Format::json) {
      json doc = header(c, rs);
      doc["input"] = json_io::roots_to_json(input);
      doc["is_monomial_ideal"] = ideal;
      doc["is_monomial_subalgebra"] = sub;
      doc["is_abelian_ideal"] = abelian;
      out << doc.dump(2) << '\n';
    } else {
      out << "set: " << root_vectors_text(input, c.unicode) << '\n'
          << "is_monomial_ideal: " << (ideal ? "true" : "false") << '\n'
          << "is_monomial_subalgebra: " << (sub ? "true" : "false") << '\n'
          << "is_abelian_ideal: " << (abelian ? "true" : "false") << '\n';
    }
    return kExitOk;
  }
  const auto oracle = brute_force_ideals(rs, c.brute_force_bound);
  const auto enumerated = enumerate_nilradical_ideals(rs, {c.jobs});
  const bool equal = oracle == enumerated;
  if (c.format == Format::json) {
    json doc = header(c, rs);
    doc["counts"] = {{"enumerated_nonzero", enumerated.size()}, {"brute_force_nonzero", oracle.size()}};
    doc["equal"] = equal;
    out << doc.dump(2) << '\n';
  } else {
    out << "enumerated nonzero ideals: " << enumerated.size() << '\n'
        << "brute-force nonzero ideals: " << oracle.size() << '\n'
        << "match: " << (equal ? "yes" : "no") << '\n';
  }
  return equal ? kExitOk : kExitFailure;
}

int dispatch(const Command& c, std::ostream& out) {
  const RootSystem rs(c.family, c.rank);
  switch (c.subcommand) {
  case Subcommand::roots:
    emit_roots(c, rs, out);
    break;
  case Subcommand::ideals: {
    auto ideals = enumerate_nilradical_ideals(rs, {c.jobs});
    if (c.include_zero) ideals.insert(ideals.begin(), MonomialIdeal::zero(rs));
    emit_ideal_list(c, rs, ideals, out);
    break;
  }
  case Subcommand::abelian:
    emit_ideal_list(c, rs, abelian_ideals(rs, {c.jobs}), out);
    break;
  case Subcommand::classify:
    emit_classification(c, rs, out);
    break;
  case Subcommand::lattice:
    emit_lattice(c, rs, out);
    break;
  case Subcommand::normalizer:
  case Subcommand::centralizer:
    emit_subalgebra_op(c, rs, out);
    break;
  case Subcommand::check:
    return emit_check(c, rs, out);
  }
  return kExitOk;
}

int parse_rank(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidInput("invalid rank '" + text + "': expected a positive integer");
  return value;
}

} // namespace

Command parse_command(std::span<const std::string> args) {
  CLI::App app{"Root systems, Borel subalgebras and their ideals", "borel-ideals"};
  std::string subcommand, family, rank, format = "text";
  Command c;
  app.add_option("subcommand", subcommand,
                 "roots | ideals | abelian | classify | lattice | normalizer | centralizer | check")
      ->required();
  app.add_option("family", family, "root system family A-G")->required();
  app.add_option("rank", rank, "rank")->required();
  app.add_option("--format", format, "text | json | dot (dot: lattice only)");
  app.add_flag("--include-zero", c.include_zero, "list the zero ideal too (ideals)");
  app.add_option("--jobs", c.jobs, "worker threads for enumeration");
  app.add_option("--set", c.set, "root set, e.g. \"a2, a1+2a2\" or \"[0,1],[1,2]\"");
  app.add_option("--out", c.out, "write output to this file instead of stdout");
  app.add_flag("--unicode", c.unicode, "use α notation in text and dot output");
  app.add_flag("--color", c.color, "highlight text output (set automatically on a terminal unless NO_COLOR)");
  app.add_option("--brute-force-bound", c.brute_force_bound, "max |R+| for the check oracle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }

  auto it = kSubcommands.find(subcommand);
  if (it == kSubcommands.end()) throw InvalidInput("unknown subcommand '" + subcommand + "'");
  c.subcommand = it->second;
  c.family = parse_family(family);
  c.rank = parse_rank(rank);
  validate_rank(c.family, c.rank);
  if (format == "text")
    c.format = Format::text;
  else if (format == "json")
    c.format = Format::json;
  else if (format == "dot")
    c.format = Format::dot;
  else
    throw InvalidInput("unknown format '" + format + "'");
  if (c.format == Format::dot && c.subcommand != Subcommand::lattice)
    throw InvalidInput("--format dot is only valid for the lattice subcommand");
  if (c.jobs == 0) throw InvalidInput("--jobs must be at least 1");
  return c;
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buffer;
    const int status = dispatch(command, buffer);
    if (command.out && !command.out->empty()) {
      std::ofstream file(*command.out, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << *command.out << " for writing\n";
        return kExitFailure;
      }
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return status;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Command command;
  try {
    command = parse_command(args);
  } catch (const HelpRequested& h) {
    out << h.text();
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return run(command, out, err);
}

} // namespace borel::cli
