// layerlat: command-line access to bunches, chains, tables and densification.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "layerlat/decompose.hpp"
#include "layerlat/densify.hpp"
#include "layerlat/embed.hpp"
#include "layerlat/errors.hpp"
#include "layerlat/laws.hpp"
#include "layerlat/oracle.hpp"
#include "layerlat/serialize.hpp"
#include "layerlat/standardize.hpp"
#include "layerlat/table.hpp"

using namespace layerlat;

namespace {

std::optional<std::size_t> env_samples() {
  const char *s = std::getenv("LAYERLAT_SAMPLES");
  if (!s || !*s)
    return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (const std::exception &) {
    throw Error("LAYERLAT_SAMPLES must be a non-negative integer, got '" + std::string(s) + "'");
  }
}

Bunch load_bunch(const std::string &path) { return parse_bunch(read_file(path)); }

Chain load_chain(const std::string &path, const ValidationConfig &cfg) {
  return Chain::checked(load_bunch(path), cfg);
}

ValidationConfig validation_config() {
  ValidationConfig cfg;
  if (const auto s = env_samples()) {
    cfg.samples_per_layer = *s;
    cfg.hom_samples = *s;
  }
  return cfg;
}

const char *ordering_name(std::strong_ordering o) {
  return o < 0 ? "LT" : o > 0 ? "GT" : "EQ";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Bunches of layer groups and the involutive FL_e-chains they build"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for randomized sampling")->capture_default_str();

  std::string file, file2, file3;

  auto *validate_cmd = app.add_subcommand("validate", "Check a bunch file; exit 0 iff valid");
  validate_cmd->add_option("bunch", file, "Bunch file")->required();

  auto *type_cmd = app.add_subcommand("type", "Print Odd, EvenNonIdemF or EvenIdemF");
  type_cmd->add_option("bunch", file, "Bunch file")->required();

  auto *bounded_cmd = app.add_subcommand("bounded", "Report boundedness with top and bottom");
  bounded_cmd->add_option("bunch", file, "Bunch file")->required();

  std::string op, lhs, rhs;
  auto *eval_cmd = app.add_subcommand("eval", "Evaluate an operation on elements");
  eval_cmd->add_option("bunch", file, "Bunch file")->required();
  eval_cmd->add_option("--op", op, "mul | neg | res | cmp")
      ->required()
      ->check(CLI::IsMember({"mul", "neg", "res", "cmp"}));
  eval_cmd->add_option("--lhs", lhs, "Element, e.g. u:d:3")->required();
  eval_cmd->add_option("--rhs", rhs, "Second element for mul, res and cmp");

  std::optional<std::size_t> limit;
  std::string format = "csv";
  auto *table_cmd = app.add_subcommand("table", "Export the operation table");
  table_cmd->add_option("bunch", file, "Bunch file")->required();
  table_cmd->add_option("--limit", limit, "Window size for infinite chains");
  table_cmd->add_option("--format", format, "csv | json | dot")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json", "dot"}));

  auto *decompose_cmd = app.add_subcommand("decompose", "Bunch of a finite table");
  decompose_cmd->add_option("table", file, "Table CSV")->required();

  std::optional<std::size_t> samples;
  auto *embed_cmd = app.add_subcommand("embed-check", "Check an embedding spec");
  embed_cmd->add_option("src", file, "Source bunch")->required();
  embed_cmd->add_option("dst", file2, "Target bunch")->required();
  embed_cmd->add_option("spec", file3, "Embedding spec")->required();
  embed_cmd->add_option("--samples", samples, "Samples per clause");

  std::string xs, ys;
  auto *fill_cmd = app.add_subcommand("fill-gap", "Insert an element strictly between x < y");
  fill_cmd->add_option("bunch", file, "Bunch file")->required();
  fill_cmd->add_option("--x", xs, "Lower element")->required();
  fill_cmd->add_option("--y", ys, "Upper element")->required();

  std::size_t prefix = 0, rounds = 1, depth = 0;
  auto *densify_cmd = app.add_subcommand("densify", "Separate all pairs of a prefix");
  densify_cmd->add_option("bunch", file, "Bunch file")->required();
  densify_cmd->add_option("--prefix", prefix, "Enumerated elements to separate")->required();
  densify_cmd->add_option("--rounds", rounds, "Passes")->capture_default_str();

  std::size_t size = 0, bound = kDefaultEnumerationBound;
  auto *enumerate_cmd = app.add_subcommand("enumerate", "All odd/even involutive chains of a size");
  enumerate_cmd->add_option("--size", size, "Number of elements")->required();
  enumerate_cmd->add_option("--bound", bound, "Largest size allowed")->capture_default_str();

  auto *standardize_cmd = app.add_subcommand("standardize", "Place a bounded chain in [0,1]");
  standardize_cmd->add_option("bunch", file, "Bunch file")->required();
  standardize_cmd->add_option("--prefix", prefix, "Elements to place")->required();
  standardize_cmd->add_option("--depth", depth, "Extra product placements")->capture_default_str();

  std::optional<std::size_t> triples;
  auto *laws_cmd = app.add_subcommand("laws", "Check the chain axioms on samples");
  laws_cmd->add_option("bunch", file, "Bunch file")->required();
  laws_cmd->add_option("--triples", triples, "Sampled triples per law");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    const ValidationConfig vcfg = validation_config();

    if (*validate_cmd) {
      const Report r = validate(load_bunch(file), vcfg);
      r.print(std::cout);
      return r.ok() ? 0 : 1;
    }
    if (*type_cmd) {
      std::cout << to_string(load_chain(file, vcfg).bunch().type()) << '\n';
      return 0;
    }
    if (*bounded_cmd) {
      const Chain c = load_chain(file, vcfg);
      if (const auto b = c.bounds()) {
        std::cout << "true\ntop: " << c.format(b->top) << "\nbottom: " << c.format(b->bottom)
                  << '\n';
      } else {
        std::cout << "false\n";
      }
      return 0;
    }
    if (*eval_cmd) {
      const Chain c = load_chain(file, vcfg);
      const ChainElement x = c.parse(lhs);
      if (op == "neg") {
        std::cout << c.format(c.negate(x)) << '\n';
        return 0;
      }
      if (rhs.empty())
        throw CLI::RequiredError("--rhs");
      const ChainElement y = c.parse(rhs);
      if (op == "mul")
        std::cout << c.format(c.mul(x, y)) << '\n';
      else if (op == "res")
        std::cout << c.format(c.residuum(x, y)) << '\n';
      else
        std::cout << ordering_name(c.compare(x, y)) << '\n';
      return 0;
    }
    if (*table_cmd) {
      const Chain c = load_chain(file, vcfg);
      const Tabulation t = tabulate(c, limit);
      if (t.clipped)
        std::cerr << "note: window of " << t.elements.size()
                  << " elements; products outside it are clamped down\n";
      if (format == "csv")
        std::cout << format_table_csv(t.table);
      else if (format == "json")
        std::cout << tabulation_to_json(c, t).dump(2) << '\n';
      else
        std::cout << tabulation_to_dot(c, t);
      return 0;
    }
    if (*decompose_cmd) {
      const RoundTrip rt = roundtrip_table(parse_table_csv(read_file(file)));
      std::cout << serialize_bunch(rt.decomposition.bunch);
      const Chain c(rt.decomposition.bunch);
      std::cerr << "round trip: " << rt.cells_compared << " cells match\n";
      for (std::size_t i = 0; i < rt.image.size(); ++i)
        std::cerr << "  " << i << " -> " << c.format(rt.decomposition.layer_assignment[i]) << '\n';
      return 0;
    }
    if (*embed_cmd) {
      const Chain src = load_chain(file, vcfg);
      const Chain dst = load_chain(file2, vcfg);
      const EmbeddingSpec e = parse_embedding(read_file(file3), src.bunch(), dst.bunch());
      const Report r = check_embedding(src, dst, e, samples.value_or(env_samples().value_or(200)));
      r.print(std::cout);
      return r.ok() ? 0 : 1;
    }
    if (*fill_cmd) {
      const Chain c = load_chain(file, vcfg);
      const GapFillResult g = fill_gap(c, c.parse(xs), c.parse(ys));
      const Chain next(g.receipt.new_bunch);
      Json out;
      out["case"] = g.case_tag;
      out["witness"] = next.format(g.witness);
      out["inserted_layer"] = g.receipt.new_layer;
      out["bunch"] = bunch_to_json(g.receipt.new_bunch);
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (*densify_cmd) {
      const Chain c = load_chain(file, vcfg);
      const DensifyResult d = densify_driver(c, prefix, rounds);
      Json out;
      out["bunch"] = bunch_to_json(d.bunch);
      out["trace"] = trace_to_json(d.trace);
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (*enumerate_cmd) {
      const auto tables = enumerate_finite_chains(size, bound);
      for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i)
          std::cout << '\n';
        std::cout << format_table_csv(tables[i]);
        std::cerr << "table " << i << ": " << to_string(*check_flea_axioms(tables[i]).type)
                  << '\n';
      }
      if (tables.empty())
        std::cerr << "no odd or even involutive chain has " << size << " elements\n";
      return 0;
    }
    if (*standardize_cmd) {
      const Chain c = load_chain(file, vcfg);
      const RationalPlacement p = extend_products(c, cantor_map(c, prefix), depth);
      std::cout << placement_csv(c, p);
      return 0;
    }
    if (*laws_cmd) {
      const Chain c = load_chain(file, vcfg);
      LawConfig cfg;
      cfg.seed = seed;
      cfg.triples = triples.value_or(env_samples().value_or(cfg.triples));
      const Report r = check_chain_laws(c, cfg);
      r.print(std::cout);
      return r.ok() ? 0 : 1;
    }
  } catch (const CLI::Error &e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
