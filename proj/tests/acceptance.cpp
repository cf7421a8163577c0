// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "borel/cli.hpp"
#include "borel/ideals.hpp"
#include "borel/root_system.hpp"
#include "borel/subalgebra.hpp"

#include "reference_data.hpp"
#include "test_support.hpp"

#include <Eigen/LU>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace {

using namespace borel;
using borel::testing::as_root_sets;
using borel::testing::RootList;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
  if (!ok) ++failures;
}

// Runs `body` and reports; exceptions count as failures.
void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(name, ok, detail);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream ss;
  ss.precision(4);
  ss << std::fixed << s << " s";
  return ss.str();
}

// R+ u -R+ is a fixed point of every simple reflection.
bool closure_fixed_point(const RootSystem& rs) {
  std::unordered_set<Root, RootHash> all;
  for (const auto& r : rs.positive_roots()) {
    all.insert(r);
    all.insert(-r);
  }
  for (const auto& r : all)
    for (int j = 0; j < rs.cartan().rows(); ++j)
      if (!all.contains(reflect_simple(r, j, rs.cartan()))) return false;
  return true;
}

int expected_root_count(Family f, int n) {
  switch (f) {
  case Family::A: return n * (n + 1) / 2;
  case Family::B:
  case Family::C: return n * n;
  case Family::D: return n * (n - 1);
  case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  case Family::F: return 24;
  case Family::G: return 6;
  }
  return -1;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool figure(const RootSystem& rs, const RootList& roots, const std::vector<RootList>& ideals, std::string& detail) {
  const auto t0 = Clock::now();
  const auto found = enumerate_nilradical_ideals(rs);
  const double s = seconds_since(t0);
  const bool roots_ok = testing::sorted(RootList(rs.positive_roots().begin(), rs.positive_roots().end())) ==
                        testing::sorted(roots);
  const bool ideals_ok = as_root_sets(found, rs) == as_root_sets(ideals);
  detail = std::to_string(rs.size()) + " roots, " + std::to_string(found.size()) + " nonzero ideals, " +
           fmt_seconds(s);
  return roots_ok && ideals_ok && found.size() == ideals.size() && s < 1.0;
}

} // namespace

int main() {
  criterion("A2 figure reproduction", [](std::string& d) {
    return figure(RootSystem(Family::A, 2), {{1, 0}, {0, 1}, {1, 1}}, reference::a2_ideals(), d);
  });

  criterion("B2 figure reproduction", [](std::string& d) {
    return figure(RootSystem(Family::B, 2), {{1, 0}, {0, 1}, {1, 1}, {1, 2}}, reference::b2_ideals(), d);
  });

  criterion("G2 figure reproduction", [](std::string& d) {
    const RootSystem rs(Family::G, 2);
    const auto t0 = Clock::now();
    const auto found = enumerate_nilradical_ideals(rs);
    const auto ones = one_dimensional_ideals(rs);
    const double s = seconds_since(t0);
    const auto oracle = brute_force_ideals(rs);
    const bool ok = rs.size() == 6 && rs.contains(Root{3, 2}) && ones.size() == 1 &&
                    ones.front().roots(rs) == RootList{Root{3, 2}} && found == oracle &&
                    static_cast<int>(found.size()) == reference::kG2IdealCount && s < 1.0;
    d = std::to_string(rs.size()) + " roots, unique 1-dim ideal " + to_string(ones.front(), rs) + ", " +
        std::to_string(found.size()) + " nonzero ideals (oracle " + std::to_string(oracle.size()) + "), " +
        fmt_seconds(s);
    return ok;
  });

  criterion("F4 abelian ideals", [](std::string& d) {
    const RootSystem rs(Family::F, 4);
    const auto found = abelian_ideals(rs);
    const auto ref = reference::f4_abelian_ideals();
    d = std::to_string(found.size()) + " abelian ideals including 0, reference has " + std::to_string(ref.size());
    return found.size() == 16 && as_root_sets(found, rs) == as_root_sets(ref);
  });

  criterion("F4 full enumeration time", [](std::string& d) {
    const RootSystem rs(Family::F, 4);
    const auto t0 = Clock::now();
    const auto all = full_ideal_classification(rs);
    const double s = seconds_since(t0);
    std::size_t mixed = 0;
    for (const auto& e : all.entries) mixed += e.mixed;
    d = std::to_string(all.entries.size() - 1) + " nonzero monomial ideals (" + std::to_string(all.entries.size()) +
        " with 0), " + std::to_string(mixed) + " with a mixed Cartan family, " + fmt_seconds(s) + " (limit 10 s)";
    return s < 10.0;
  });

  for (auto [f, n] : testing::small_types()) {
    const RootSystem rs(f, n);
    criterion("oracle equivalence " + rs.label(), [&](std::string& d) {
      const auto bfs = enumerate_nilradical_ideals(rs);
      const auto brute = brute_force_ideals(rs);
      d = std::to_string(bfs.size()) + " enumerated, " + std::to_string(brute.size()) + " brute force";
      return bfs == brute;
    });
  }

  {
    auto types = testing::small_types();
    types.emplace_back(Family::F, 4);
    for (auto [f, n] : types) {
      const RootSystem rs(f, n);
      criterion("abelian count " + rs.label(), [&](std::string& d) {
        const auto count = abelian_ideals(rs).size();
        d = std::to_string(count) + " including 0, expected 2^" + std::to_string(n) + " = " +
            std::to_string(1u << n);
        return count == (std::size_t{1} << n);
      });
    }
  }

  for (auto [f, n] : testing::supported_types(8)) {
    const RootSystem rs(f, n);
    criterion("positive roots " + rs.label(), [&](std::string& d) {
      const int expected = expected_root_count(f, n);
      const bool closed = closure_fixed_point(rs);
      d = std::to_string(rs.size()) + " (expected " + std::to_string(expected) + "), closure fixed point " +
          (closed ? "holds" : "violated");
      return static_cast<int>(rs.size()) == expected && closed;
    });
  }

  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::B, 2}, std::pair{Family::G, 2}}) {
    const RootSystem rs(f, n);
    criterion("kernel annihilation " + rs.label(), [&](std::string& d) {
      const auto all = full_ideal_classification(rs);
      std::size_t checked = 0;
      for (const auto& e : all.entries) {
        // dim kernel = rank - rank of the pairing rows of the roots outside R_J.
        Eigen::MatrixXd outside(0, n);
        for (std::size_t b = 0; b < rs.size(); ++b) {
          if (e.ideal.contains(b)) continue;
          outside.conservativeResize(outside.rows() + 1, Eigen::NoChange);
          outside.row(outside.rows() - 1) = coroot_pairings(rs.root(b), rs.cartan()).cast<double>();
        }
        const auto rank = outside.rows() == 0 ? 0 : Eigen::FullPivLU<Eigen::MatrixXd>(outside).rank();
        if (e.kernel.dimension() != n - rank) return false;
        for (std::size_t b = 0; b < rs.size(); ++b) {
          if (e.ideal.contains(b)) continue;
          const auto pairings = coroot_pairings(rs.root(b), rs.cartan());
          for (Eigen::Index k = 0; k < e.kernel.vectors.rows(); ++k) {
            std::int64_t value = 0;
            for (int j = 0; j < n; ++j) value += e.kernel.vectors(k, j) * pairings(j);
            if (value != 0) return false;
            ++checked;
          }
        }
      }
      d = std::to_string(all.entries.size()) + " ideals, " + std::to_string(checked) + " (vector, root) pairs vanish, dimensions match rank count";
      return true;
    });
  }

  criterion("A2 kernel of {a1, a1+a2}", [](std::string& d) {
    const RootSystem rs(Family::A, 2);
    const RootList j{{1, 0}, {1, 1}};
    const auto k = cartan_kernel(MonomialIdeal::from_roots(j, rs), rs);
    d = "dimension " + std::to_string(k.dimension());
    if (k.dimension() != 1) return false;
    d += ", basis (" + std::to_string(k.vectors(0, 0)) + "," + std::to_string(k.vectors(0, 1)) + ")";
    return k.vectors(0, 0) == 2 && k.vectors(0, 1) == 1;
  });

  criterion("normalizer of {a2} in B2", [](std::string& d) {
    const RootSystem rs(Family::B, 2);
    const RootList s{{0, 1}};
    const auto n = monomial_normalizer(MonomialSubalgebra(s, rs), rs).roots(rs);
    d = std::to_string(n.size()) + " roots";
    return testing::sorted(n) == testing::sorted({{0, 1}, {1, 2}});
  });

  criterion("normalizer of {a1+a2} in A2", [](std::string& d) {
    const RootSystem rs(Family::A, 2);
    const RootList s{{1, 1}};
    const auto n = monomial_normalizer(MonomialSubalgebra(s, rs), rs).roots(rs);
    d = std::to_string(n.size()) + " roots";
    return testing::sorted(n) == testing::sorted({{1, 0}, {0, 1}, {1, 1}});
  });

  criterion("E8 enumeration scale", [](std::string& d) {
    const RootSystem rs(Family::E, 8);
    const auto pinned = std::stoul(read_file(std::filesystem::path(BOREL_GOLDEN_DIR) / "e8_ideal_count.txt"));
    const auto t0 = Clock::now();
    const auto found = enumerate_nilradical_ideals(rs, {.jobs = 4});
    const double s = seconds_since(t0);
    d = std::to_string(found.size()) + " nonzero ideals (pinned " + std::to_string(pinned) + "), " + fmt_seconds(s) +
        " (limit 120 s)";
    return found.size() == pinned && s < 120.0;
  });

  criterion("CLI determinism across --jobs", [](std::string& d) {
    const std::vector<std::vector<std::string>> commands = {
        {"ideals", "E", "6", "--format", "json"}, {"abelian", "F", "4"},       {"classify", "D", "4"},
        {"lattice", "C", "3", "--format", "dot"},  {"ideals", "G", "2"},        {"roots", "E", "7"}};
    std::size_t runs = 0;
    for (const auto& base : commands) {
      std::string first;
      for (const char* jobs : {"1", "2", "4", "8", "1"}) {
        auto args = base;
        args.insert(args.end(), {"--jobs", jobs});
        std::ostringstream out, err;
        if (cli::main(args, out, err) != cli::kExitOk) return false;
        if (first.empty()) first = out.str();
        else if (out.str() != first) {
          d = base[0] + " " + base[1] + base[2] + " differs with --jobs " + jobs;
          return false;
        }
        ++runs;
      }
    }
    d = std::to_string(commands.size()) + " commands, " + std::to_string(runs) + " runs byte-identical";
    return true;
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
