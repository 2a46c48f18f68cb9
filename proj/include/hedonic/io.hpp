#pragma once

#include "hedonic/core.hpp"
#include "hedonic/reductions.hpp"

#include <string>

namespace hedonic {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Line-oriented text formats, '#' starts a comment. Agent ids are 0-based.
//
// instance:  model (fe|fen) / agents N / friend U V ... / enemy U V ...
// partition: coalition U V W ...
// x3c seed:  elements 3N / set A B C [out|in] ...   (elements 1-based)
// clique:    vertices N / edge U V ... / target H

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst,
                               const std::vector<std::string>& name_map = {});

Partition parse_partition(const std::string& text, int n);
std::string serialize_partition(const Partition& pi);

X3CInstance parse_x3c_seed(const std::string& text);
std::string serialize_x3c_seed(const X3CInstance& seed);

CliqueInstance parse_clique_seed(const std::string& text);
std::string serialize_clique_seed(const CliqueInstance& seed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hedonic
