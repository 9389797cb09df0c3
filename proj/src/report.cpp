#include "graphlie/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "graphlie/errors.hpp"
#include "graphlie/serialize.hpp"

namespace graphlie {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  throw DomainError("unknown report format \"" + name + "\" (expected json or text)");
}

namespace {

std::string certificate_summary(const RigidityVerdict& v) {
  if (!v.certificate) return "-";
  const Certificate& c = *v.certificate;
  std::string s = certificate_tag(c);
  if (const auto* cr = std::get_if<CitedResult>(&c)) s += "(" + cr->name + ")";
  if (const auto* gw = std::get_if<GradedWitness>(&c))
    s += "(v" + std::to_string(gw->a1 + 1) + ",v" + std::to_string(gw->a2 + 1) + "," + gw->y_label + ")";
  if (const auto* tw = std::get_if<TwoStepWitness>(&c))
    s += "(v" + std::to_string(tw->v + 1) + ",v" + std::to_string(tw->w + 1) + "," +
         (tw->z_label.empty() ? std::string("z") : tw->z_label) + ")";
  return s;
}

std::string render_text(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "graph6" << std::setw(4) << "m" << std::setw(4) << "k" << std::setw(6)
     << "dim" << std::setw(11) << "verdict" << std::setw(5) << "h2"
     << "certificate\n";
  for (const auto& r : rows) {
    os << std::setw(10) << r.graph6 << std::setw(4) << r.m << std::setw(4) << r.k << std::setw(6) << r.dim
       << std::setw(11) << to_string(r.verdict.verdict) << std::setw(5)
       << (r.verdict.h2 ? std::to_string(r.verdict.h2->h2_dim) : std::string("-")) << certificate_summary(r.verdict)
       << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_report(const std::vector<SweepRow>& rows, ReportFormat format) {
  if (format == ReportFormat::Text) return render_text(rows);
  Json doc = Json::array();
  for (const auto& r : rows) doc.push_back(sweep_row_to_json(r));
  return doc.dump(2) + "\n";
}

void write_report(const std::vector<SweepRow>& rows, const std::string& path, ReportFormat format,
                  std::ostream& out) {
  const std::string text = render_report(rows, format);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open \"" + path + "\" for writing");
  f << text;
  if (!f) throw DomainError("write to \"" + path + "\" failed");
}

}  // namespace graphlie
