// Copyright 2026 The entk Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the core exclusively through the C API in
// entk.h; all inputs are JSON documents, all reports are deterministic
// key/value text on stdout (the trailing timing-ms line is the one field
// that varies between runs).

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "entk.h"

namespace {

struct CliError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot open '" + path + "'"};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{"cannot write '" + path + "'"};
  out << text;
}

// Owns strings coming back from the C API.
struct ApiString {
  char* ptr = nullptr;
  ~ApiString() { entk_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct RepHandle {
  entk_rep* rep = nullptr;
  ~RepHandle() { entk_rep_free(rep); }
};

void check(int status, const ApiString& err) {
  if (status != ENTK_OK) {
    std::string msg = err.ptr ? err.str() : "unspecified failure";
    throw CliError{msg};
  }
}

RepHandle parse_rep(const std::string& path) {
  RepHandle h;
  ApiString err;
  check(entk_rep_parse(read_file(path).c_str(), &h.rep, &err.ptr), err);
  return h;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void print_header(const std::string& command,
                  const std::vector<std::pair<std::string, std::string>>& inputs) {
  std::cout << "entk-report\n";
  std::cout << "command: " << command << "\n";
  for (const auto& [key, value] : inputs) std::cout << key << ": " << value << "\n";
}

void print_footer(const Timer& timer) {
  std::cout << "timing-ms: " << timer.ms() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for representations of the Toeplitz relations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", entk_version());

  // mult
  std::string mult_rep;
  auto* cmd_mult = app.add_subcommand("mult", "print the multiplicity of a representation");
  cmd_mult->add_option("rep", mult_rep, "representation file")->required();

  // wold
  std::string wold_rep;
  unsigned wold_depth = 4;
  auto* cmd_wold = app.add_subcommand("wold", "shift/essential decomposition report");
  cmd_wold->add_option("rep", wold_rep, "representation file")->required();
  cmd_wold->add_option("--depth", wold_depth, "defect scan depth (default 4)");

  // equiv
  std::string equiv_mode = "bh-quasifree", equiv_a, equiv_b, equiv_emit;
  unsigned equiv_depth = 4;
  auto* cmd_equiv = app.add_subcommand("equiv", "decide or certify equivalence of two "
                                                "representations");
  cmd_equiv->add_option("--mode", equiv_mode, "bh-quasifree or scalar-free");
  cmd_equiv->add_option("a", equiv_a, "left representation file")->required();
  cmd_equiv->add_option("b", equiv_b, "right representation file")->required();
  cmd_equiv->add_option("--depth", equiv_depth, "verification depth (default 4)");
  cmd_equiv->add_option("--emit-witness", equiv_emit, "write the witness document here");

  // verify
  std::string verify_a, verify_b, verify_w;
  unsigned verify_depth = 4;
  auto* cmd_verify = app.add_subcommand("verify", "verify a witness document against a pair");
  cmd_verify->add_option("a", verify_a, "left representation file")->required();
  cmd_verify->add_option("b", verify_b, "right representation file")->required();
  cmd_verify->add_option("w", verify_w, "witness file")->required();
  cmd_verify->add_option("--depth", verify_depth, "verification depth (default 4)");

  // endo-equal
  std::string ee_a, ee_b;
  unsigned ee_depth = 3;
  auto* cmd_ee = app.add_subcommand("endo-equal", "decide equality of the induced "
                                                  "endomorphisms");
  cmd_ee->add_option("a", ee_a, "left representation file")->required();
  cmd_ee->add_option("b", ee_b, "right representation file")->required();
  cmd_ee->add_option("--depth", ee_depth, "search/verification depth (default 3)");

  // endo-conjugate
  std::string ec_a, ec_b, ec_w;
  unsigned ec_depth = 3;
  auto* cmd_ec = app.add_subcommand("endo-conjugate", "decide conjugacy of the induced "
                                                      "endomorphisms");
  cmd_ec->add_option("a", ec_a, "left representation file")->required();
  cmd_ec->add_option("b", ec_b, "right representation file")->required();
  cmd_ec->add_option("--witness", ec_w, "optional witness file");
  cmd_ec->add_option("--depth", ec_depth, "verification depth (default 3)");

  // intertwiner
  std::string it_x, it_rep;
  unsigned it_depth = 3;
  auto* cmd_it = app.add_subcommand("intertwiner", "check an operator expression against the "
                                                   "intertwiner identity");
  cmd_it->add_option("x", it_x, "operator expression file")->required();
  cmd_it->add_option("rep", it_rep, "representation file")->required();
  cmd_it->add_option("--depth", it_depth, "check depth (default 3)");

  // algebra-eval
  std::string ae_elem, ae_rep, ae_vec;
  auto* cmd_ae = app.add_subcommand("algebra-eval", "apply an algebra element to a vector "
                                                    "through a representation");
  cmd_ae->add_option("elem", ae_elem, "algebra element file")->required();
  cmd_ae->add_option("rep", ae_rep, "representation file")->required();
  cmd_ae->add_option("vec", ae_vec, "vector file")->required();

  // module
  auto* cmd_module = app.add_subcommand("module", "Hilbert-module utilities");
  cmd_module->require_subcommand(1);
  std::string mcb_file;
  auto* cmd_mcb = cmd_module->add_subcommand("check-basis", "orthonormal-basis check");
  cmd_mcb->add_option("basis", mcb_file, "basis file")->required();
  std::string mtu_file, mtu_out;
  auto* cmd_mtu = cmd_module->add_subcommand("to-unitary", "unitary carrying the standard "
                                                           "basis onto the given one");
  cmd_mtu->add_option("basis", mtu_file, "basis file")->required();
  cmd_mtu->add_option("--out", mtu_out, "write the matrix document here");

  // ibn
  std::string ibn_k0, ibn_fd;
  auto* cmd_ibn = app.add_subcommand("ibn", "invariant basis number from K0 data");
  cmd_ibn->add_option("--k0", ibn_k0, "K0 data file");
  cmd_ibn->add_option("--fd", ibn_fd, "finite-dimensional algebra file");

  CLI11_PARSE(app, argc, argv);

  try {
    Timer timer;

    if (cmd_mult->parsed()) {
      RepHandle rep = parse_rep(mult_rep);
      unsigned m = 0;
      ApiString err;
      check(entk_rep_multiplicity(rep.rep, &m, &err.ptr), err);
      std::cout << m << "\n";
      return 0;
    }

    if (cmd_wold->parsed()) {
      RepHandle rep = parse_rep(wold_rep);
      ApiString report, err;
      check(entk_wold_report(rep.rep, wold_depth, &report.ptr, &err.ptr), err);
      print_header("wold", {{"input.rep", wold_rep}, {"depth", std::to_string(wold_depth)}});
      std::cout << report.str();
      print_footer(timer);
      return 0;
    }

    if (cmd_equiv->parsed()) {
      RepHandle a = parse_rep(equiv_a);
      RepHandle b = parse_rep(equiv_b);
      int decision = 0;
      ApiString witness, report, err;
      check(entk_equiv(a.rep, b.rep, equiv_mode.c_str(), equiv_depth, &decision, &witness.ptr,
                       &report.ptr, &err.ptr),
            err);
      print_header("equiv", {{"mode", equiv_mode},
                             {"input.omega", equiv_a},
                             {"input.tau", equiv_b},
                             {"depth", std::to_string(equiv_depth)}});
      std::cout << report.str();
      if (!equiv_emit.empty() && witness.ptr) {
        write_file(equiv_emit, witness.str() + "\n");
        std::cout << "witness-written: " << equiv_emit << "\n";
      }
      print_footer(timer);
      return decision;
    }

    if (cmd_verify->parsed()) {
      RepHandle a = parse_rep(verify_a);
      RepHandle b = parse_rep(verify_b);
      std::string wtext = read_file(verify_w);
      int decision = 0;
      ApiString report, err;
      check(entk_verify(a.rep, b.rep, wtext.c_str(), verify_depth, &decision, &report.ptr,
                        &err.ptr),
            err);
      print_header("verify", {{"input.omega", verify_a},
                              {"input.tau", verify_b},
                              {"input.witness", verify_w},
                              {"depth", std::to_string(verify_depth)}});
      std::cout << report.str();
      print_footer(timer);
      return decision;
    }

    if (cmd_ee->parsed()) {
      RepHandle a = parse_rep(ee_a);
      RepHandle b = parse_rep(ee_b);
      int decision = 0;
      ApiString report, err;
      check(entk_endo_equal(a.rep, b.rep, ee_depth, &decision, &report.ptr, &err.ptr), err);
      print_header("endo-equal", {{"input.omega", ee_a},
                                  {"input.tau", ee_b},
                                  {"depth", std::to_string(ee_depth)}});
      std::cout << report.str();
      print_footer(timer);
      return decision;
    }

    if (cmd_ec->parsed()) {
      RepHandle a = parse_rep(ec_a);
      RepHandle b = parse_rep(ec_b);
      std::optional<std::string> wtext;
      if (!ec_w.empty()) wtext = read_file(ec_w);
      int decision = 0;
      ApiString report, err;
      check(entk_endo_conjugate(a.rep, b.rep, wtext ? wtext->c_str() : nullptr, ec_depth,
                                &decision, &report.ptr, &err.ptr),
            err);
      std::vector<std::pair<std::string, std::string>> inputs{
          {"input.omega", ec_a}, {"input.tau", ec_b}, {"depth", std::to_string(ec_depth)}};
      if (!ec_w.empty()) inputs.insert(inputs.end() - 1, {"input.witness", ec_w});
      print_header("endo-conjugate", inputs);
      std::cout << report.str();
      print_footer(timer);
      return decision;
    }

    if (cmd_it->parsed()) {
      RepHandle rep = parse_rep(it_rep);
      std::string xtext = read_file(it_x);
      int decision = 0;
      ApiString report, err;
      check(entk_intertwiner(xtext.c_str(), rep.rep, it_depth, &decision, &report.ptr,
                             &err.ptr),
            err);
      print_header("intertwiner", {{"input.x", it_x},
                                   {"input.rep", it_rep},
                                   {"depth", std::to_string(it_depth)}});
      std::cout << report.str();
      print_footer(timer);
      return decision;
    }

    if (cmd_ae->parsed()) {
      RepHandle rep = parse_rep(ae_rep);
      std::string elem = read_file(ae_elem);
      std::string vec = read_file(ae_vec);
      ApiString result, err;
      check(entk_algebra_eval(elem.c_str(), rep.rep, vec.c_str(), &result.ptr, &err.ptr), err);
      print_header("algebra-eval", {{"input.elem", ae_elem},
                                    {"input.rep", ae_rep},
                                    {"input.vec", ae_vec}});
      std::cout << "result: " << result.str() << "\n";
      print_footer(timer);
      return 0;
    }

    if (cmd_mcb->parsed()) {
      std::string basis = read_file(mcb_file);
      int decision = 0;
      ApiString report, err;
      check(entk_module_check_basis(basis.c_str(), &decision, &report.ptr, &err.ptr), err);
      print_header("module check-basis", {{"input.basis", mcb_file}});
      std::cout << report.str();
      print_footer(timer);
      return decision;
    }

    if (cmd_mtu->parsed()) {
      std::string basis = read_file(mtu_file);
      ApiString matrix, report, err;
      check(entk_module_to_unitary(basis.c_str(), &matrix.ptr, &report.ptr, &err.ptr), err);
      print_header("module to-unitary", {{"input.basis", mtu_file}});
      std::cout << report.str();
      if (!mtu_out.empty()) {
        write_file(mtu_out, matrix.str() + "\n");
        std::cout << "matrix-written: " << mtu_out << "\n";
      }
      print_footer(timer);
      return 0;
    }

    if (cmd_ibn->parsed()) {
      if (ibn_k0.empty() == ibn_fd.empty())
        throw CliError{"ibn needs exactly one of --k0 or --fd"};
      int has_ibn = 0;
      ApiString order, report, err;
      if (!ibn_k0.empty()) {
        std::string text = read_file(ibn_k0);
        check(entk_ibn_k0(text.c_str(), &has_ibn, &order.ptr, &report.ptr, &err.ptr), err);
        print_header("ibn", {{"input.k0", ibn_k0}});
      } else {
        std::string text = read_file(ibn_fd);
        check(entk_ibn_fd(text.c_str(), &has_ibn, &order.ptr, &report.ptr, &err.ptr), err);
        print_header("ibn", {{"input.fd", ibn_fd}});
      }
      std::cout << report.str();
      print_footer(timer);
      return 0;
    }

    throw CliError{"no subcommand selected"};
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  }
}
