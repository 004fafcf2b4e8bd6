#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "symtensor/decompose.hpp"
#include "symtensor/errors.hpp"
#include "symtensor/json_io.hpp"
#include "symtensor/montecarlo.hpp"
#include "symtensor/quantic.hpp"
#include "symtensor/rank_oracle.hpp"

namespace symtensor::cli {

namespace {

using nlohmann::json;

// Verification failure or degenerate pencil.
struct Failure {
  int code = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": malformed JSON: " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot write " + path);
  file << text << '\n';
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void render_table(const RankTable& t, bool csv, std::ostream& out) {
  if (csv) {
    out << "k";
    for (unsigned n = t.dim_min; n <= t.dim_max; ++n) out << ',' << n;
    out << '\n';
    for (std::size_t r = 0; r < t.values.size(); ++r) {
      out << t.order_min + r;
      for (auto v : t.values[r]) out << ',' << v;
      out << '\n';
    }
    return;
  }
  out << "k\\n";
  for (unsigned n = t.dim_min; n <= t.dim_max; ++n) out << std::setw(6) << n;
  out << '\n';
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    out << std::setw(3) << t.order_min + r;
    for (std::size_t c = 0; c < t.values[r].size(); ++c) {
      std::string cell = std::to_string(t.values[r][c]) + (t.exception[r][c] ? "*" : " ");
      out << std::setw(6) << cell;
    }
    out << '\n';
  }
  out << "* exception to the lower-bound formula\n";
}

// Decomposition of a binary tensor c * z1 z2^{k-1} (or c * z1^{k-1} z2).
SymmetricDecomposition decompose_monomial_input(const SymmetricTensor& a) {
  const unsigned k = a.order();
  if (a.dim() != 2 || k < 2 || a.coeffs().size() != 1) {
    throw ValidationError("monomial method needs a binary tensor of order >= 2 with one nonzero coefficient "
                          "at exponent [1,k-1] or [k-1,1]");
  }
  const auto& [p, value] = *a.coeffs().begin();
  const bool swapped = p == ExponentVector({k - 1, 1}) && k != 2;
  if (!swapped && p != ExponentVector({1, k - 1})) {
    throw ValidationError("monomial method needs the nonzero coefficient at exponent [1,k-1] or [k-1,1]");
  }
  std::vector<Term> terms;
  const auto monomial = decompose_monomial_rank_k(k);
  for (const auto& t : monomial.terms()) {
    ComplexVector v = swapped ? ComplexVector{t.vector[1], t.vector[0]} : t.vector;
    terms.push_back({t.weight * value * static_cast<double>(k), std::move(v)});
  }
  SymmetricDecomposition d(k, 2, Field::Complex, std::move(terms));
  d.sort_terms();
  return d;
}

BorderKind parse_border_kind(const std::string& s) {
  if (s == "rank2to3") return BorderKind::Rank2To3;
  if (s == "rank2tok") return BorderKind::Rank2ToK;
  return BorderKind::TangentSum;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric tensor rank toolkit"};
  app.require_subcommand(1);
  std::function<void()> action;

  // dim
  unsigned order = 0;
  unsigned dim = 0;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension C(n+k-1,k) of the symmetric tensor space");
  dim_cmd->add_option("--order", order, "Tensor order k")->required();
  dim_cmd->add_option("--dim", dim, "Dimension n")->required()->check(CLI::PositiveNumber);
  dim_cmd->callback([&] { action = [&] { out << sym_dimension(order, dim) << '\n'; }; });

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "Generic symmetric rank report as JSON");
  rank_cmd->add_option("--order", order, "Tensor order k")->required();
  rank_cmd->add_option("--dim", dim, "Dimension n")->required()->check(CLI::PositiveNumber);
  rank_cmd->callback([&] {
    action = [&] {
      const auto r = rank_report(order, dim);
      json j{{"order", r.order},
             {"dim", r.dim},
             {"generic_rank", r.generic_rank},
             {"is_exception", r.is_exception},
             {"lower_bound", r.lower_bound},
             {"upper_bound", r.upper_bound},
             {"fiber_dim", r.fiber_dim},
             {"finitely_many_decompositions", nullptr}};
      if (r.finitely_many_decompositions) j["finitely_many_decompositions"] = *r.finitely_many_decompositions;
      out << j.dump() << '\n';
    };
  });

  // table
  std::string what = "generic";
  bool csv = false;
  unsigned kmin = 3, kmax = 6, nmin = 2, nmax = 10;
  auto* table_cmd = app.add_subcommand("table", "Generic rank or fiber dimension table");
  table_cmd->add_option("--what", what, "generic or fiber")->check(CLI::IsMember({"generic", "fiber"}));
  table_cmd->add_flag("--csv", csv, "CSV output");
  table_cmd->add_option("--order-min", kmin)->check(CLI::Range(3U, 64U));
  table_cmd->add_option("--order-max", kmax)->check(CLI::Range(3U, 64U));
  table_cmd->add_option("--dim-min", nmin)->check(CLI::Range(2U, 1024U));
  table_cmd->add_option("--dim-max", nmax)->check(CLI::Range(2U, 1024U));
  table_cmd->callback([&] {
    action = [&] {
      render_table(what == "generic" ? generic_rank_table(kmin, kmax, nmin, nmax)
                                     : fiber_dimension_table(kmin, kmax, nmin, nmax),
                   csv, out);
    };
  });

  // symmetrize
  std::string in_path;
  std::string out_path;
  double tol = kDefaultSymmetryTol;
  std::string format = "sym";
  auto* sym_cmd = app.add_subcommand("symmetrize", "Project a tensor onto the symmetric subspace");
  sym_cmd->add_option("--in", in_path, "Input tensor JSON")->required();
  sym_cmd->add_option("--out", out_path, "Output tensor JSON (default: stdout)");
  sym_cmd->add_option("--tol", tol, "Symmetry tolerance")->check(CLI::NonNegativeNumber);
  sym_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"sym", "dense"}));
  sym_cmd->callback([&] {
    action = [&] {
      auto doc = tensor_from_json(read_json(in_path));
      const DenseTensor dense = std::holds_alternative<DenseTensor>(doc)
                                    ? std::get<DenseTensor>(doc)
                                    : decompress(std::get<SymmetricTensor>(doc));
      const DenseTensor s = symmetrize(dense);
      emit((format == "dense" ? to_json(s) : to_json(compress(s, tol))).dump(), out_path, out);
    };
  });

  // to-poly / from-poly
  auto* to_poly_cmd = app.add_subcommand("to-poly", "Print the quantic of a symmetric tensor");
  to_poly_cmd->add_option("--in", in_path, "Input tensor JSON")->required();
  to_poly_cmd->add_option("--tol", tol, "Symmetry tolerance for dense input")->check(CLI::NonNegativeNumber);
  to_poly_cmd->callback([&] {
    action = [&] { out << to_string(tensor_to_quantic(symmetric_from_json(read_json(in_path), tol))) << '\n'; };
  });

  std::optional<unsigned> poly_dim;
  std::optional<unsigned> poly_order;
  auto* from_poly_cmd = app.add_subcommand("from-poly", "Symmetric tensor of a quantic given as text");
  from_poly_cmd->add_option("--in", in_path, "Polynomial text file")->required();
  from_poly_cmd->add_option("--out", out_path, "Output tensor JSON (default: stdout)");
  from_poly_cmd->add_option("--dim", poly_dim, "Number of variables")->check(CLI::PositiveNumber);
  from_poly_cmd->add_option("--order", poly_order, "Degree (only needed for the zero polynomial)");
  from_poly_cmd->callback([&] {
    action = [&] {
      const auto f = parse_quantic(read_file(in_path), poly_dim.value_or(0), poly_order);
      emit(to_json(quantic_to_tensor(f)).dump(), out_path, out);
    };
  });

  // decompose
  std::string method;
  std::string field_name = "C";
  auto* dec_cmd = app.add_subcommand("decompose", "Symmetric outer product decomposition");
  dec_cmd->add_option("--in", in_path, "Input tensor JSON")->required();
  dec_cmd->add_option("--method", method, "monomial or pencil")
      ->required()
      ->check(CLI::IsMember({"monomial", "pencil"}));
  dec_cmd->add_option("--field", field_name, "R or C")->check(CLI::IsMember({"R", "C"}));
  dec_cmd->add_option("--out", out_path, "Output decomposition JSON (default: stdout)");
  dec_cmd->add_option("--tol", tol, "Symmetry tolerance for dense input")->check(CLI::NonNegativeNumber);
  dec_cmd->callback([&] {
    action = [&] {
      const auto a = symmetric_from_json(read_json(in_path), tol);
      const Field field = field_name == "R" ? Field::Real : Field::Complex;
      std::string classification;
      std::optional<SymmetricDecomposition> d;
      if (method == "monomial") {
        if (field == Field::Real) throw ValidationError("monomial method produces a complex decomposition; use --field C");
        d = decompose_monomial_input(a);
        classification = "rank" + std::to_string(a.order());
      } else {
        auto result = decompose_sym222_pencil(a, field);
        classification = result.classification == PencilClass::Rank2 ? "rank2" : "real_rank_3";
        d = std::move(result.decomposition);
      }
      emit(to_json(*d).dump(), out_path, out);
      if (!out_path.empty()) out << "classification: " << classification << ", terms: " << d->rank() << '\n';
    };
  });

  // verify
  std::string tensor_path;
  std::string decomp_path;
  double verify_tol = 1e-9;
  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition against a tensor");
  verify_cmd->add_option("--tensor", tensor_path, "Tensor JSON")->required();
  verify_cmd->add_option("--decomp", decomp_path, "Decomposition JSON")->required();
  verify_cmd->add_option("--tol", verify_tol, "Relative tolerance")->check(CLI::NonNegativeNumber);
  verify_cmd->callback([&] {
    action = [&] {
      const auto a = symmetric_from_json(read_json(tensor_path));
      const auto d = decomposition_from_json(read_json(decomp_path));
      const auto r = verify(d, a, verify_tol);
      out << json{{"residual", r.residual}, {"ok", r.ok}, {"stated_rank", r.stated_rank}}.dump() << '\n';
      if (!r.ok) throw Failure{1};
    };
  });

  // demo-border
  std::string kind;
  double epsilon = 0.125;
  unsigned border_order = 3;
  unsigned steps = 8;
  auto* border_cmd = app.add_subcommand("demo-border", "Distances of a border-rank sequence to its limit");
  border_cmd->add_option("--kind", kind, "rank2to3, rank2tok or tangent")
      ->required()
      ->check(CLI::IsMember({"rank2to3", "rank2tok", "tangent"}));
  border_cmd->add_option("--epsilon", epsilon, "Starting epsilon")->check(CLI::PositiveNumber);
  border_cmd->add_option("--order", border_order, "Order for rank2tok")->check(CLI::Range(3U, 32U));
  border_cmd->add_option("--steps", steps, "Number of halvings")->check(CLI::Range(1U, 60U));
  border_cmd->add_flag("--csv", csv, "CSV output");
  border_cmd->callback([&] {
    action = [&] {
      const auto spec = default_border_spec(parse_border_kind(kind), border_order);
      if (csv) out << "epsilon,distance,ratio,witness_terms\n";
      else out << "     epsilon       distance    ratio  witness_terms\n";
      double prev = 0.0;
      double eps = epsilon;
      for (unsigned s = 0; s < steps; ++s, eps *= 0.5) {
        const auto seq = border_sequence(spec, eps);
        const double dist = frobenius_distance(seq.approximant, seq.limit);
        const std::string ratio = s == 0 ? "-" : fmt("%.4f", prev / dist);
        if (csv) {
          out << fmt("%.6e", eps) << ',' << fmt("%.6e", dist) << ',' << ratio << ',' << seq.witness.rank() << '\n';
        } else {
          out << std::setw(12) << fmt("%.6e", eps) << std::setw(15) << fmt("%.6e", dist) << std::setw(9) << ratio
              << std::setw(15) << seq.witness.rank() << '\n';
        }
        prev = dist;
      }
    };
  });

  // montecarlo
  std::string mc_case;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  auto* mc_cmd = app.add_subcommand("montecarlo", "Typical rank experiment on random real 2x2x2 tensors");
  mc_cmd->add_option("--case", mc_case, "sym222 or asym222")->required()->check(CLI::IsMember({"sym222", "asym222"}));
  mc_cmd->add_option("--samples", samples, "Number of trials")->required()->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", seed, "Seed")->required();
  mc_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 256U));
  mc_cmd->add_flag("--csv", csv, "CSV output");
  mc_cmd->callback([&] {
    action = [&] {
      const auto stats = typical_rank_experiment(mc_case == "sym222" ? ExperimentCase::Sym222 : ExperimentCase::Asym222,
                                                 samples, seed, workers);
      if (csv) {
        out << csv_header() << '\n' << csv_row(stats) << '\n';
        return;
      }
      out << json{{"case", case_name(stats.experiment)},
                  {"samples", stats.samples},
                  {"seed", stats.seed},
                  {"rank2", stats.rank2_count},
                  {"rank3", stats.rank3_count},
                  {"degenerate", stats.degenerate_count},
                  {"fraction", stats.fraction_rank2},
                  {"stderr", stats.stderr_}}
                 .dump()
          << '\n';
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    action();
  } catch (const Failure& f) {
    return f.code;
  } catch (const DegeneratePencilError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace symtensor::cli
