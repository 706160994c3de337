#include "twobridge/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "twobridge/btree.hpp"
#include "twobridge/errors.hpp"

namespace twobridge {

namespace {

// Parse/domain problems are usage errors; everything else that escapes a
// command is a broken mathematical invariant.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "mathematical assertion failure: " << e.what() << "\n";
    return kExitMath;
  }
}

int write_to_path_or_stream(const std::optional<std::string>& out_path,
                            std::ostream& out, std::ostream& err,
                            const std::string& payload) {
  if (!out_path) {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(*out_path);
  if (!file) {
    err << "error: cannot open " << *out_path << " for writing\n";
    return kExitUsage;
  }
  file << payload;
  if (!file.flush()) {
    err << "error: short write to " << *out_path << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int cmd_analyze(const std::string& fraction, ReportFormat format,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SlopeReport rep = analyze(parse_fraction(fraction));
    out << (format == ReportFormat::json ? report_to_json(rep)
                                         : report_to_text(rep));
    return kExitOk;
  });
}

int cmd_sweep(const SweepOptions& opt,
              const std::optional<std::string>& out_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    SweepResult res = run_sweep(opt);
    if (!res.ok()) {
      err << "sweep aborted: " << *res.failure << "\n";
      return kExitMath;
    }
    std::ostringstream csv;
    write_csv(csv, res.rows);
    int rc = write_to_path_or_stream(out_path, out, err, csv.str());
    if (rc != kExitOk) return rc;
    (out_path ? out : err) << "sweep q <= " << opt.max_q << ": "
                           << res.summary.str() << "\n";
    return res.summary.fail == 0 ? kExitOk : kExitMath;
  });
}

int cmd_tree(const std::string& fraction,
             const std::optional<std::string>& out_path, bool ascii,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Rational r = parse_fraction(fraction);
    auto root = build_tree(r);
    int rc = write_to_path_or_stream(out_path, out, err, to_dot(*root, ascii));
    if (rc != kExitOk) return rc;
    TreeStats st = tree_stats(*root);
    (out_path ? out : err) << "tree for " << r.str() << ": "
                           << st.live_leaves << " boundary expansions, "
                           << st.dead_leaves << " dead ends\n";
    return kExitOk;
  });
}

int cmd_canonicalize(const std::string& fraction, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    out << canonicalize(parse_fraction(fraction)).str() << "\n";
    return kExitOk;
  });
}

}  // namespace twobridge
