// samu-adapt: converts CoNLL-U dependency parses into the linkage
// interchange format the engine consumes. Replace freely; the interchange
// file is the only contract.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "samu/nlp.hpp"

int main(int argc, char** argv) {
  CLI::App app{"CoNLL-U to linkage interchange adapter"};
  std::string input, output;
  app.add_option("input", input, "CoNLL-U file (- for stdin)")->required();
  app.add_option("output", output, "linkage file to write (- for stdout)")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<samu::ParsedSentence> records;
    if (input == "-") {
      records = samu::conllu_to_linkages(std::cin, "<stdin>");
    } else {
      std::ifstream in(input);
      if (!in) {
        std::cerr << "samu-adapt: cannot open " << input << '\n';
        return 1;
      }
      records = samu::conllu_to_linkages(in, input);
    }
    if (output == "-")
      samu::write_linkages(std::cout, records);
    else
      samu::write_linkage_file(output, records);
  } catch (const std::exception& e) {
    std::cerr << "samu-adapt: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
