#include "test_support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "symgame/json_io.hpp"

namespace testsupport {

std::string fixture_dir() { return SYMGAME_FIXTURE_DIR; }

std::string fixture_path(const std::string& name) { return fixture_dir() + "/" + name; }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

symgame::Game load_fixture(const std::string& name) {
    return symgame::game_from_json_text(read_text_file(fixture_path(name + ".json")));
}

symgame::GameShape small_uniform_shape(int players, int strategies) {
    static const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
    if (players * strategies > static_cast<int>(alphabet.size()))
        throw std::runtime_error("shape too large for single-letter labels");
    std::vector<std::vector<std::string>> labels;
    int next = 0;
    for (int i = 0; i < players; ++i) {
        std::vector<std::string> row;
        for (int s = 0; s < strategies; ++s) row.push_back(std::string(1, alphabet[next++]));
        labels.push_back(std::move(row));
    }
    return symgame::GameShape(std::move(labels));
}

symgame::Game random_game(Rng& rng, const symgame::GameShape& shape, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<std::vector<symgame::Rational>> payoffs;
    payoffs.reserve(static_cast<std::size_t>(shape.profile_count()));
    for (std::int64_t idx = 0; idx < shape.profile_count(); ++idx) {
        std::vector<symgame::Rational> row;
        for (int i = 0; i < shape.players(); ++i) row.emplace_back(dist(rng));
        payoffs.push_back(std::move(row));
    }
    return symgame::Game(shape, std::move(payoffs));
}

symgame::Game random_shared_label_game(Rng& rng, int players, int strategies, SeedKind kind,
                                       int lo, int hi) {
    std::vector<std::string> row;
    for (int s = 0; s < strategies; ++s) row.push_back(std::string(1, static_cast<char>('a' + s)));
    symgame::GameShape shape(std::vector<std::vector<std::string>>(
        static_cast<std::size_t>(players), row));
    if (kind == SeedKind::random) return random_game(rng, shape, lo, hi);

    std::uniform_int_distribution<int> dist(lo, hi);
    std::map<std::vector<int>, symgame::Rational> table;
    const auto value_for = [&](std::vector<int> key) -> symgame::Rational {
        auto [it, inserted] = table.emplace(std::move(key), symgame::Rational());
        if (inserted) it->second = symgame::Rational(dist(rng));
        return it->second;
    };

    std::vector<std::vector<symgame::Rational>> payoffs;
    for (std::int64_t idx = 0; idx < shape.profile_count(); ++idx) {
        const symgame::Profile profile = shape.profile_of_index(idx);
        std::vector<symgame::Rational> cell;
        for (int i = 0; i < players; ++i) {
            std::vector<int> key;
            switch (kind) {
                case SeedKind::cyclic:
                    key = {profile[static_cast<std::size_t>(i)],
                           profile[static_cast<std::size_t>((i + 1) % players)]};
                    break;
                case SeedKind::anonymous: {
                    std::vector<int> others;
                    for (int j = 0; j < players; ++j)
                        if (j != i) others.push_back(profile[static_cast<std::size_t>(j)]);
                    std::sort(others.begin(), others.end());
                    key.push_back(profile[static_cast<std::size_t>(i)]);
                    key.insert(key.end(), others.begin(), others.end());
                    break;
                }
                case SeedKind::common: {
                    key = profile;
                    std::sort(key.begin(), key.end());
                    break;
                }
                case SeedKind::random:
                    break;
            }
            cell.push_back(value_for(std::move(key)));
        }
        payoffs.push_back(std::move(cell));
    }
    return symgame::Game(std::move(shape), std::move(payoffs));
}

namespace {

std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    const char* binary = std::getenv("SYMGAME_CLI_PATH");
    if (!binary) throw std::runtime_error("SYMGAME_CLI_PATH is not set");

    static int counter = 0;
    const std::string stem = "/tmp/symgame_cli_" + std::to_string(getpid()) + "_" +
                             std::to_string(counter++);
    const std::string out_file = stem + ".out";
    const std::string err_file = stem + ".err";

    std::string command = shell_quote(binary);
    for (const std::string& arg : args) command += " " + shell_quote(arg);
    command += " >" + shell_quote(out_file) + " 2>" + shell_quote(err_file);

    const int status = std::system(command.c_str());
    if (status == -1) throw std::runtime_error("failed to launch: " + command);

    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_text_file(out_file);
    result.err = read_text_file(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return result;
}

} // namespace testsupport
