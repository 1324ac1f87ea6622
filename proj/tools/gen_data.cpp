// Regenerates data/: one all-light WGF file per named cage, their canonical
// digests, and the results seed.

#include <fstream>
#include <iostream>

#include "wcage/cli.hpp"

int main(int argc, char** argv) {
  using namespace wcage;
  const std::string dir = argc > 1 ? argv[1] : data_dir();
  std::ofstream certs(dir + "/cage_certificates.txt", std::ios::trunc);
  certs << "# r g order digest name\n";
  for (const auto& nc : named_cages()) {
    auto c = get_cage(nc.r, nc.g);
    WGraph w(c->graph, Graph(c->graph.order()));
    write_wgf_file(dir + "/" + cage_file_name(nc.r, nc.g), w);
    certs << nc.r << " " << nc.g << " " << nc.order << " " << digest_hex(canonical_certificate(w)) << " " << nc.name
          << "\n";
  }
  std::remove((dir + "/results.jsonl").c_str());
  cli::Context ctx{std::cout, std::cerr, false, dir + "/results.jsonl"};
  cli::cmd_seed(ctx);
  std::remove((dir + "/results.jsonl.lock").c_str());
  return 0;
}
