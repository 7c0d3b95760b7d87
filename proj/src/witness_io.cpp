#include "plcircle/witness_io.hpp"

#include <map>
#include <sstream>

namespace plc {

namespace {

constexpr const char* kHeader = "plcircle-witness v1";

std::string kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::pingpong: return "pingpong";
    case WitnessKind::fixedpoint: return "fixedpoint";
    case WitnessKind::powerfree: return "powerfree";
  }
  throw std::logic_error("unreachable");
}

WitnessKind kind_from_name(const std::string& s) {
  if (s == "pingpong") return WitnessKind::pingpong;
  if (s == "fixedpoint") return WitnessKind::fixedpoint;
  if (s == "powerfree") return WitnessKind::powerfree;
  throw std::invalid_argument("unknown witness kind: " + s);
}

void emit_side(std::ostream& os, const std::string& prefix,
               const SideCondition& s) {
  os << prefix << ".table: " << s.table.to_string() << "\n";
  os << prefix << ".torsion: ";
  if (s.torsion_order)
    os << *s.torsion_order;
  else
    os << "-";
  os << "\n";
  os << prefix << ".plus: "
     << (s.split ? s.split->first.to_string() : std::string("-")) << "\n";
  os << prefix << ".minus: "
     << (s.split ? s.split->second.to_string() : std::string("-")) << "\n";
}

void emit_cert(std::ostream& os, const std::string& prefix,
               const PingPongCertificate& c) {
  emit_side(os, prefix + ".a", c.a_side);
  emit_side(os, prefix + ".b", c.b_side);
}

class Fields {
 public:
  explicit Fields(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (first) {
        if (line != kHeader)
          throw std::invalid_argument("missing witness header");
        first = false;
        continue;
      }
      size_t colon = line.find(": ");
      if (colon == std::string::npos)
        throw std::invalid_argument("malformed witness line: " + line);
      fields_[line.substr(0, colon)] = line.substr(colon + 2);
    }
    if (first) throw std::invalid_argument("empty witness");
  }

  const std::string& get(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end())
      throw std::invalid_argument("missing witness field: " + key);
    return it->second;
  }

  long get_long(const std::string& key) const {
    const std::string& v = get(key);
    size_t pos = 0;
    long out = std::stol(v, &pos);
    if (pos != v.size())
      throw std::invalid_argument("malformed integer in field " + key);
    return out;
  }

 private:
  std::map<std::string, std::string> fields_;
};

SideCondition parse_side(const Fields& f, const std::string& prefix) {
  SideCondition s;
  s.table = ArcSet::parse(f.get(prefix + ".table"));
  const std::string& tor = f.get(prefix + ".torsion");
  if (tor != "-") s.torsion_order = std::stol(tor);
  const std::string& plus = f.get(prefix + ".plus");
  const std::string& minus = f.get(prefix + ".minus");
  if ((plus == "-") != (minus == "-"))
    throw std::invalid_argument("half-specified split in " + prefix);
  if (plus != "-")
    s.split = std::make_pair(ArcSet::parse(plus), ArcSet::parse(minus));
  return s;
}

PingPongCertificate parse_cert(const Fields& f, const std::string& prefix) {
  PingPongCertificate c;
  c.a_side = parse_side(f, prefix + ".a");
  c.b_side = parse_side(f, prefix + ".b");
  return c;
}

VerifyResult fail(const std::string& reason) { return {false, reason}; }

VerifyResult check_cert(const PLCircleMap& a, const PLCircleMap& b,
                        const PingPongCertificate& cert,
                        const std::string& label) {
  try {
    VerifyResult r = verify_certificate(a, b, cert);
    if (!r.ok) r.reason = label + ": " + r.reason;
    return r;
  } catch (const std::invalid_argument& e) {
    return fail(label + ": malformed certificate: " + e.what());
  }
}

}  // namespace

Witness make_witness(const PLCircleMap& a, const PLCircleMap& b,
                     const FreePowerResult& res) {
  Witness w;
  w.kind = WitnessKind::pingpong;
  w.a = a;
  w.b = b;
  w.k = res.k;
  w.cert = res.cert;
  return w;
}

Witness make_witness(const ConstructionResult& res, const CirclePoint& point) {
  Witness w;
  w.kind = WitnessKind::fixedpoint;
  w.g = res.g;
  w.point = point;
  w.theta = res.theta;
  w.conjugators = res.conjugators;
  w.per_h = res.per_h;
  return w;
}

Witness make_witness(const PowerfreeResult& res) {
  Witness w;
  w.kind = WitnessKind::powerfree;
  w.g = res.g;
  w.theta = res.z;
  w.base_points = res.base_points;
  w.conjugators = res.conjugators;
  w.per_h = res.per_h;
  return w;
}

std::string serialize_witness(const Witness& w) {
  std::ostringstream os;
  os << kHeader << "\n";
  os << "kind: " << kind_name(w.kind) << "\n";
  if (w.kind == WitnessKind::pingpong) {
    os << "a: " << w.a.to_string() << "\n";
    os << "b: " << w.b.to_string() << "\n";
    os << "k: " << w.k << "\n";
    emit_cert(os, "cert", w.cert);
    return os.str();
  }
  os << "g: " << w.g.to_string() << "\n";
  if (w.kind == WitnessKind::fixedpoint) {
    os << "point: " << to_string(w.point.value()) << "\n";
    os << "theta: " << w.theta << "\n";
  } else {
    os << "z: " << w.theta << "\n";
    os << "base.count: " << w.base_points.size() << "\n";
    for (size_t i = 0; i < w.base_points.size(); ++i)
      os << "base." << i + 1 << ": " << to_string(w.base_points[i].value())
         << "\n";
  }
  os << "conjugators: " << w.conjugators.size() << "\n";
  for (size_t i = 0; i < w.conjugators.size(); ++i)
    os << "conjugator." << i + 1 << ": " << w.conjugators[i].to_string()
       << "\n";
  os << "elements: " << w.per_h.size() << "\n";
  for (size_t i = 0; i < w.per_h.size(); ++i) {
    std::string p = "h." + std::to_string(i + 1);
    os << p << ": " << w.per_h[i].first.to_string() << "\n";
    os << p << ".k: " << w.per_h[i].second.k_h.to_string() << "\n";
    os << p << ".rho: " << w.per_h[i].second.rho_h << "\n";
    emit_cert(os, p + ".cert", w.per_h[i].second.cert);
  }
  return os.str();
}

Witness parse_witness(const std::string& text) {
  Fields f(text);
  Witness w;
  w.kind = kind_from_name(f.get("kind"));
  if (w.kind == WitnessKind::pingpong) {
    w.a = PLCircleMap::parse(f.get("a"));
    w.b = PLCircleMap::parse(f.get("b"));
    w.k = f.get_long("k");
    w.cert = parse_cert(f, "cert");
    return w;
  }
  w.g = PLCircleMap::parse(f.get("g"));
  if (w.kind == WitnessKind::fixedpoint) {
    w.point = CirclePoint(parse_rational(f.get("point")));
    w.theta = f.get_long("theta");
  } else {
    w.theta = f.get_long("z");
    long nb = f.get_long("base.count");
    for (long i = 1; i <= nb; ++i)
      w.base_points.emplace_back(
          parse_rational(f.get("base." + std::to_string(i))));
  }
  long nc = f.get_long("conjugators");
  for (long i = 1; i <= nc; ++i)
    w.conjugators.push_back(
        PLCircleMap::parse(f.get("conjugator." + std::to_string(i))));
  long ne = f.get_long("elements");
  for (long i = 1; i <= ne; ++i) {
    std::string p = "h." + std::to_string(i);
    PerElementData d;
    PLCircleMap h = PLCircleMap::parse(f.get(p));
    d.k_h = PLCircleMap::parse(f.get(p + ".k"));
    d.rho_h = f.get_long(p + ".rho");
    d.cert = parse_cert(f, p + ".cert");
    w.per_h.emplace_back(h, d);
  }
  return w;
}

VerifyResult verify_witness(const Witness& w) {
  if (w.kind == WitnessKind::pingpong) {
    if (w.k < 1) return fail("power k must be positive");
    return check_cert(w.a, power(w.b, w.k), w.cert, "pair certificate");
  }

  const long step = w.theta;
  if (step < 1) return fail("conjugator step must be positive");
  if (w.per_h.empty()) return fail("no certified elements");

  long p = 1;
  if (w.kind == WitnessKind::fixedpoint) {
    if (!(fixed_set(w.g) == ArcSet::point(w.point)))
      return fail("g does not fix exactly the marked point");
  } else {
    p = static_cast<long>(w.base_points.size());
    if (p < 1) return fail("empty base orbit");
    ArcSet orbit = ArcSet::empty();
    for (const CirclePoint& b : w.base_points)
      orbit = set_union(orbit, ArcSet::point(b));
    if (!(fixed_set(power(w.g, p)) == orbit))
      return fail("base orbit is not exactly the periodic set of g");
    for (long i = 0; i < p; ++i)
      if (!(w.g(w.base_points[i]) == w.base_points[(i + 1) % p]))
        return fail("g does not cycle the base orbit in order");
  }

  for (size_t i = 0; i < w.per_h.size(); ++i) {
    const auto& [h, d] = w.per_h[i];
    std::string label = "element " + std::to_string(i + 1);
    if (!(d.k_h == compose(w.g, h)))
      return fail(label + ": stored product is not g.h");
    if (d.rho_h < 1 || step % d.rho_h != 0)
      return fail(label + ": conjugator step is not a multiple of its power");
    PLCircleMap left =
        (w.kind == WitnessKind::fixedpoint) ? d.k_h : power(d.k_h, p);
    VerifyResult r =
        check_cert(left, power(w.g, d.rho_h), d.cert, label);
    if (!r.ok) return r;
  }
  for (size_t i = 0; i < w.conjugators.size(); ++i)
    if (!(w.conjugators[i] == power(w.g, static_cast<long>(i + 1) * step)))
      return fail("conjugator " + std::to_string(i + 1) +
                  " is not the stated power of g");
  return {true, ""};
}

}  // namespace plc
