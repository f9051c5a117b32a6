// rss: split files into threshold share files (with an optional hidden
// payload and integrity digest), reconstruct them, inspect shares, and run
// the 2-of-2 XOR scheme. Exit codes: 0 success, 2 usage/validation,
// 3 I/O failure, 4 integrity failure (tampering/corruption detected).

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rss/codec.hpp"
#include "rss/dispersal.hpp"
#include "rss/errors.hpp"
#include "rss/xor2.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitIntegrity = 4;

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw rss::IoError("cannot open " + path.string());
  }
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw rss::IoError("error reading " + path.string());
  }
  return data;
}

void write_file(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw rss::IoError("cannot create " + path.string());
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) {
    throw rss::IoError("error writing " + path.string());
  }
}

void write_file(const fs::path& path, const std::vector<std::uint8_t>& data) {
  write_file(path, std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

/// Removes this invocation's output files unless commit() was reached, so a
/// failed command never leaves partial results behind.
class OutputGuard {
 public:
  ~OutputGuard() {
    if (committed_) return;
    for (const fs::path& p : paths_) {
      std::error_code ec;
      fs::remove(p, ec);
    }
  }

  void track(fs::path path) { paths_.push_back(std::move(path)); }
  void commit() { committed_ = true; }

 private:
  std::vector<fs::path> paths_;
  bool committed_ = false;
};

std::uint64_t parse_seed(const std::string& hex) {
  if (hex.empty() || hex.size() > 16) {
    throw rss::ParameterError("--seed must be 1..16 hex digits");
  }
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), seed, 16);
  if (ec != std::errc{} || ptr != hex.data() + hex.size()) {
    throw rss::ParameterError("--seed must be 1..16 hex digits");
  }
  return seed;
}

std::unique_ptr<rss::RandomSource> make_rng(const std::string& seed_hex) {
  if (seed_hex.empty()) {
    return std::make_unique<rss::SystemRandomSource>();
  }
  std::cerr << "rss: warning: --seed makes the share randomness predictable; "
               "use it only for tests and reproduction\n";
  return std::make_unique<rss::SeededRandomSource>(parse_seed(seed_hex));
}

struct SplitArgs {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint64_t prime = rss::kDefaultPrime;
  std::string hide_path;
  bool embed_digest = false;
  std::string seed_hex;
  std::string out_dir;
  std::string input;
};

void cmd_split(const SplitArgs& args) {
  const rss::recursive::Params params(rss::PrimeModulus(args.prime), args.k, args.n);
  const std::vector<std::uint8_t> message = read_file(args.input);
  std::vector<std::uint8_t> aux;
  if (!args.hide_path.empty()) {
    aux = read_file(args.hide_path);
  }
  auto rng = make_rng(args.seed_hex);

  const auto files = rss::split_message(message, aux, params, args.embed_digest, *rng);

  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec) {
    throw rss::IoError("cannot create output directory " + args.out_dir);
  }
  const std::string stem = fs::path(args.input).stem().string();

  OutputGuard guard;
  for (const auto& file : files) {
    fs::path path = fs::path(args.out_dir) / (stem + ".s" + std::to_string(file.x) + ".rss");
    guard.track(path);
    write_file(path, rss::codec::serialize_share(file));
  }
  guard.commit();
  std::cout << "wrote " << files.size() << " share files to " << args.out_dir << "\n";
}

struct ReconstructArgs {
  bool check_digest = false;
  std::string out_path;
  std::string hidden_out;
  std::vector<std::string> share_paths;
};

/// Abscissa embedded in a `<stem>.s<x>.rss` filename, if it follows the
/// convention; lets duplicate shares be rejected before any parsing.
std::optional<std::uint64_t> abscissa_from_filename(const fs::path& path) {
  const std::string name = path.filename().string();
  constexpr std::string_view ext = ".rss";
  if (name.size() <= ext.size() || !name.ends_with(ext)) return std::nullopt;
  const std::string_view base(name.data(), name.size() - ext.size());
  const std::size_t dot = base.rfind(".s");
  if (dot == std::string_view::npos || dot + 2 >= base.size()) return std::nullopt;
  const std::string_view digits = base.substr(dot + 2);
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), x);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return x;
}

void cmd_reconstruct(const ReconstructArgs& args) {
  std::vector<std::uint64_t> named;
  for (const std::string& p : args.share_paths) {
    if (auto x = abscissa_from_filename(p)) named.push_back(*x);
  }
  std::sort(named.begin(), named.end());
  if (std::adjacent_find(named.begin(), named.end()) != named.end()) {
    throw rss::DuplicateAbscissaError("two input files name the same share abscissa");
  }

  std::vector<rss::codec::RecursiveShareFile> shares;
  shares.reserve(args.share_paths.size());
  for (const std::string& p : args.share_paths) {
    const std::vector<std::uint8_t> raw = read_file(p);
    rss::codec::ShareFile file = rss::codec::parse_share(
        std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
    auto* rec = std::get_if<rss::codec::RecursiveShareFile>(&file);
    if (!rec) {
      throw rss::ParameterError(p + " is an xor2 share; use `rss xor2 join`");
    }
    shares.push_back(std::move(*rec));
  }

  const rss::ReconstructedMessage result = rss::reconstruct_message(shares, args.check_digest);

  OutputGuard guard;
  guard.track(args.out_path);
  write_file(args.out_path, result.message);
  if (!args.hidden_out.empty() || !result.aux.empty()) {
    const fs::path hidden_path =
        args.hidden_out.empty() ? fs::path(args.out_path + ".hidden") : fs::path(args.hidden_out);
    guard.track(hidden_path);
    write_file(hidden_path, result.aux);
  }
  guard.commit();
  if (result.digest_verified) {
    std::cout << "digest verified\n";
  }
}

void cmd_inspect(const std::string& path, bool full) {
  const std::vector<std::uint8_t> raw = read_file(path);
  const rss::codec::ShareFile file = rss::codec::parse_share(
      std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));

  if (const auto* rec = std::get_if<rss::codec::RecursiveShareFile>(&file)) {
    std::cout << "scheme: recursive\n"
              << "p: " << rec->p << "\n"
              << "k: " << rec->k << "\n"
              << "n: " << rec->n << "\n"
              << "x: " << rec->x << "\n"
              << "chunks: " << rec->y.size() << "\n"
              << "msglen: " << rec->msglen << "\n"
              << "auxlen: " << rec->auxlen << "\n"
              << "digest: " << (rec->digest == rss::codec::DigestAlgorithm::sha256 ? "sha256" : "none")
              << "\n";
    if (full) {
      for (std::size_t i = 0; i < rec->y.size(); ++i) {
        std::cout << "y[" << i << "]: " << rec->y[i] << "\n";
      }
    }
  } else {
    const auto& x2 = std::get<rss::codec::Xor2ShareFile>(file);
    std::cout << "scheme: xor2\n"
              << "levels: " << x2.levels << "\n"
              << "index: " << x2.index << "\n";
    if (full) {
      std::cout << "bits: " << rss::xor2::format_bits(x2.bits) << "\n";
    }
  }
}

struct Xor2SplitArgs {
  std::string seed_hex;
  std::string out_dir;
  std::string input;
};

rss::xor2::SecretSequence read_secret_list(const fs::path& path) {
  const std::vector<std::uint8_t> raw = read_file(path);
  const std::string_view text(reinterpret_cast<const char*>(raw.data()), raw.size());
  rss::xor2::SecretSequence secrets;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    if (line.empty()) {
      throw rss::ParameterError("empty line in secret list " + path.string());
    }
    secrets.push_back(rss::xor2::parse_bits(line));
    pos = nl + 1;
  }
  return secrets;
}

void cmd_xor2_split(const Xor2SplitArgs& args) {
  const rss::xor2::SecretSequence secrets = read_secret_list(args.input);
  auto rng = make_rng(args.seed_hex);
  const rss::xor2::SharePair pair = rss::xor2::split(secrets, *rng);

  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec) {
    throw rss::IoError("cannot create output directory " + args.out_dir);
  }
  const std::string stem = fs::path(args.input).stem().string();
  const auto levels = static_cast<std::uint32_t>(secrets.size());

  OutputGuard guard;
  const fs::path path1 = fs::path(args.out_dir) / (stem + ".x1.rss");
  const fs::path path2 = fs::path(args.out_dir) / (stem + ".x2.rss");
  guard.track(path1);
  write_file(path1, rss::codec::serialize_share(rss::codec::Xor2ShareFile{levels, 1, pair.share1}));
  guard.track(path2);
  write_file(path2, rss::codec::serialize_share(rss::codec::Xor2ShareFile{levels, 2, pair.share2}));
  guard.commit();
  std::cout << "wrote " << path1.string() << " and " << path2.string() << "\n";
}

void cmd_xor2_join(const std::string& out_path, const std::vector<std::string>& share_paths) {
  std::optional<rss::codec::Xor2ShareFile> parts[2];
  for (const std::string& p : share_paths) {
    const std::vector<std::uint8_t> raw = read_file(p);
    rss::codec::ShareFile file = rss::codec::parse_share(
        std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
    auto* x2 = std::get_if<rss::codec::Xor2ShareFile>(&file);
    if (!x2) {
      throw rss::ParameterError(p + " is not an xor2 share");
    }
    auto& slot = parts[x2->index - 1];
    if (slot) {
      throw rss::ParameterError("two files carry share index " + std::to_string(x2->index));
    }
    slot = std::move(*x2);
  }
  if (!parts[0] || !parts[1]) {
    throw rss::ParameterError("need share index 1 and share index 2");
  }
  if (parts[0]->levels != parts[1]->levels) {
    throw rss::ParameterError("share files disagree on level count");
  }

  const rss::xor2::SecretSequence secrets = rss::xor2::reconstruct(
      {parts[0]->bits, parts[1]->bits}, parts[0]->levels);

  std::string out;
  for (const rss::xor2::BitString& s : secrets) {
    out += rss::xor2::format_bits(s) + "\n";
  }
  OutputGuard guard;
  guard.track(out_path);
  write_file(out_path, out);
  guard.commit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recursive multi-secret sharing toolkit"};
  app.require_subcommand(1);

  SplitArgs split_args;
  auto* split = app.add_subcommand("split", "split a file into n share files");
  split->add_option("--k", split_args.k, "reconstruction threshold")->required();
  split->add_option("--n", split_args.n, "number of shares")->required();
  split->add_option("--prime", split_args.prime, "field modulus (default 2^61-1)");
  split->add_option("--hide", split_args.hide_path, "file to embed in the hidden channel");
  split->add_flag("--embed-digest", split_args.embed_digest,
                  "embed a sha256 digest of the input in the hidden channel");
  split->add_option("--seed", split_args.seed_hex, "hex seed for deterministic output (test mode)");
  split->add_option("--out", split_args.out_dir, "output directory")->required();
  split->add_option("input", split_args.input, "file to split")->required();
  split->callback([&] { cmd_split(split_args); });

  ReconstructArgs rec_args;
  auto* rec = app.add_subcommand("reconstruct", "rebuild a file from k or more shares");
  rec->add_flag("--check-digest", rec_args.check_digest, "verify the embedded digest");
  rec->add_option("--out", rec_args.out_path, "output file")->required();
  rec->add_option("--hidden-out", rec_args.hidden_out,
                  "where to write the hidden payload (default <out>.hidden)");
  rec->add_option("shares", rec_args.share_paths, "share files")->required()->expected(-1);
  rec->callback([&] { cmd_reconstruct(rec_args); });

  std::string inspect_path;
  bool inspect_full = false;
  auto* inspect = app.add_subcommand("inspect", "print a share file's header");
  inspect->add_flag("--full", inspect_full, "also print the share values");
  inspect->add_option("share", inspect_path, "share file")->required();
  inspect->callback([&] { cmd_inspect(inspect_path, inspect_full); });

  auto* xor2 = app.add_subcommand("xor2", "2-of-2 XOR scheme for doubling-size secrets");
  xor2->require_subcommand(1);

  Xor2SplitArgs x2_split_args;
  auto* x2_split = xor2->add_subcommand("split", "share a doubling-size secret list");
  x2_split->add_option("--seed", x2_split_args.seed_hex, "hex seed for deterministic output");
  x2_split->add_option("--out", x2_split_args.out_dir, "output directory")->required();
  x2_split->add_option("secrets", x2_split_args.input, "secret list file (one bit-string per line)")
      ->required();
  x2_split->callback([&] { cmd_xor2_split(x2_split_args); });

  std::string x2_join_out;
  std::vector<std::string> x2_join_paths;
  auto* x2_join = xor2->add_subcommand("join", "recover the secret list from both shares");
  x2_join->add_option("--out", x2_join_out, "output secret list file")->required();
  x2_join->add_option("shares", x2_join_paths, "the two share files")->required()->expected(2);
  x2_join->callback([&] { cmd_xor2_join(x2_join_out, x2_join_paths); });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kExitUsage;
  } catch (const rss::InconsistencyError& e) {
    std::cerr << "rss: integrity failure: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const rss::CorruptionError& e) {
    std::cerr << "rss: integrity failure: " << e.what() << "\n";
    return kExitIntegrity;
  } catch (const rss::IoError& e) {
    std::cerr << "rss: i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "rss: i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const rss::Error& e) {
    std::cerr << "rss: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "rss: unexpected error: " << e.what() << "\n";
    return kExitIo;
  }
}
