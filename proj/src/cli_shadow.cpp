#include "cli_report.hpp"
#include "jinf/character_table.hpp"

namespace jinf::cli {

namespace {

json witness_json(ShadowVerdict const &v)
{
  json j{{"just_infinite", v.just_infinite}};
  if (v.witness)
    j["basal_witness"] = {{"family_index", v.witness->family_index}, {"orbits", v.witness->orbits}};
  return j;
}

} // namespace

Report shadow(std::string const &path, Options const &opt)
{
  Report r;
  auto ws = file_wreath(parse_profile(read_file(path)));
  auto const &model = ws.model;
  r.data["shadow"] = {{"factor", ws.factor_tag},
                      {"top_degree", ws.top.degree()},
                      {"top_order", ws.top.order().str()},
                      {"order", model.group.order().str()}};
  r.line("shadow " + ws.factor_tag + " wr (degree " + std::to_string(ws.top.degree()) + ", order " +
         ws.top.order().str() + "): order " + model.group.order().str());

  json family = json::array();
  for (auto const &cert : model.basal_family) {
    bool ok = recheck_certificate(model.group, cert);
    family.push_back({{"label", cert.label},
                      {"conjugates", cert.conjugates.size()},
                      {"subgroup_order", cert.subgroup.order().str()},
                      {"rechecked", ok}});
    r.line("basal " + cert.label + ": " + std::to_string(cert.conjugates.size()) + " conjugates, " +
           (ok ? "direct-product identity rechecked" : "RECHECK FAILED"));
    r.failed = r.failed || !ok;
  }
  r.data["basal_family"] = family;

  auto g = shadow_ji_verdict(model, model.group);
  r.data["G"] = witness_json(g);
  r.line(std::string("G: ") + (g.just_infinite ? "ji" : "not_ji"));

  json normals = json::array();
  std::size_t agree = 0, total = 0;
  for (auto const &h : shadow_normal_subgroups(model, opt.order_gate)) {
    auto rep = maxcor_equivalence_check(model, h, true, opt.order_gate);
    ++total;
    agree += rep.agree;
    normals.push_back({{"order", h.order().str()},
                       {"lhs", witness_json(rep.lhs)},
                       {"maximals_above", rep.maximals.size()},
                       {"rhs", rep.rhs},
                       {"agree", rep.agree}});
  }
  r.data["normal_subgroups"] = normals;
  r.data["normal_agreement"] = {{"agree", agree}, {"total", total}};
  r.line((agree == total ? "PASS" : "FAIL") + std::string(" maximal-subgroup criterion over normal subgroups: ") +
         std::to_string(agree) + "/" + std::to_string(total) + " agree");
  r.failed = r.failed || agree != total;

  if (model.quotient) {
    auto sep = find_non_normal_separation(model, opt.order_gate);
    if (sep) {
      r.data["non_normal_separation"] = {{"order", sep->first.order().str()},
                                         {"lhs", witness_json(sep->second.lhs)},
                                         {"maximals_above", sep->second.maximals.size()}};
      r.line("non-normal H of order " + sep->first.order().str() + ": not ji while all " +
             std::to_string(sep->second.maximals.size()) + " maximal subgroups above it are ji");
    } else {
      r.data["non_normal_separation"] = nullptr;
      r.line("no non-normal separation among top-group subgroup classes");
    }
  }
  return r;
}

Report chartab(std::string const &path, Options const &opt)
{
  Report r;
  auto file = parse_profile(read_file(path));
  PermGroup g = file_group(file);
  auto t = character_table(g, opt.order_gate);
  bool consistent = table_is_consistent(t);
  std::size_t mfd = min_faithful_degree(t);
  json values = json::array();
  for (auto const &row : t.values) {
    json jr = json::array();
    for (auto const &x : row)
      jr.push_back(format_cyclotomic(x));
    values.push_back(jr);
  }
  r.data = {{"order", t.group_order},
            {"class_sizes", t.class_sizes},
            {"element_orders", t.element_orders},
            {"degrees", t.degrees},
            {"values", values},
            {"root_order", t.root_order},
            {"consistent", consistent},
            {"min_faithful_degree", mfd}};
  r.line("order " + std::to_string(t.group_order) + ", " + std::to_string(t.degrees.size()) +
         " classes, values in Q(zeta_" + std::to_string(t.root_order) + ")");
  std::string sizes = "class sizes:", orders = "element orders:";
  for (std::size_t j = 0; j < t.class_sizes.size(); ++j) {
    sizes += " " + std::to_string(t.class_sizes[j]);
    orders += " " + std::to_string(t.element_orders[j]);
  }
  r.line(sizes);
  r.line(orders);
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    std::string s = "chi" + std::to_string(i) + ":";
    for (auto const &x : t.values[i])
      s += " " + format_cyclotomic(x);
    r.line(s);
  }
  r.line("minimal faithful degree: " + std::to_string(mfd));
  r.line(std::string("orthogonality check: ") + (consistent ? "passed" : "FAILED"));
  r.failed = !consistent;
  return r;
}

Report verify(std::string const &which, Options const &opt)
{
  Report r;
  json claims = json::array();
  for (auto const &c : verify_paper(which, opt.precision, opt.order_gate)) {
    claims.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
    r.line((c.pass ? "PASS " : "FAIL ") + c.label + (c.pass || c.detail.empty() ? "" : " [" + c.detail + "]"));
    r.failed = r.failed || !c.pass;
  }
  r.data = {{"suite", which}, {"claims", claims}, {"precision", opt.precision}};
  return r;
}

} // namespace jinf::cli
