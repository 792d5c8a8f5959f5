// Named group constructors and the JSON GroupSpec front end.

#include <algorithm>
#include <map>
#include <numeric>

#include "f2c/errors.hpp"
#include "f2c/group.hpp"

namespace f2c {

namespace {

using Perm = std::vector<int>;

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

void check_perm(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) fail_input("permutation has wrong degree");
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) fail_input("generator is not a permutation");
    seen[v] = 1;
  }
}

std::vector<int> table_from(int n, const std::function<int(int, int)>& mul) {
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  return t;
}

}  // namespace

GroupRef cyclic_group(int n) {
  if (n < 1) fail_input("cyclic group order must be positive");
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back(std::to_string(k));
  return FiniteGroup::from_table(n, table_from(n, [n](int a, int b) { return (a + b) % n; }),
                                 std::move(labels), {{"kind", "cyclic"}, {"n", n}});
}

GroupRef dihedral_group(int order) {
  if (order < 2 || order % 2) fail_input("dihedral order must be even and at least 2");
  const int m = order / 2;
  // index k < m is r^k, index m + k is r^k s
  auto mul = [m](int a, int b) {
    const int ra = a % m, sa = a / m, rb = b % m, sb = b / m;
    const int r = ((sa ? ra - rb : ra + rb) % m + m) % m;
    return r + m * ((sa + sb) % 2);
  };
  std::vector<std::string> labels;
  for (int x = 0; x < order; ++x) {
    const int r = x % m;
    std::string l = r == 0 ? "" : (r == 1 ? "r" : "r^" + std::to_string(r));
    if (x >= m) l += "s";
    labels.push_back(l.empty() ? "e" : l);
  }
  return FiniteGroup::from_table(order, table_from(order, mul), std::move(labels),
                                 {{"kind", "dihedral"}, {"order", order}});
}

GroupRef permutation_group(int degree, const std::vector<Perm>& generators, int order_cap) {
  if (degree < 1) fail_input("permutation degree must be positive");
  for (auto& p : generators) check_perm(p, degree);

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  auto compose = [degree](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (int x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto& s : generators) {
      Perm y = compose(elems[i], s);
      if (index.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (static_cast<int>(elems.size()) > order_cap)
          fail_input("generators do not close within order cap " + std::to_string(order_cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  for (auto& p : elems) labels.push_back(cycle_label(p));
  auto tab = table_from(n, [&](int a, int b) { return index.at(compose(elems[a], elems[b])); });
  return FiniteGroup::from_table(n, std::move(tab), std::move(labels),
                                 {{"kind", "permutation"}, {"degree", degree}, {"generators", generators}});
}

GroupRef symmetric_group(int n) {
  if (n < 1 || n > 7) fail_input("symmetric group degree must be in 1..7");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(t);
    if (n > 2) gens.push_back(c);
  }
  auto g = permutation_group(n, gens);
  return FiniteGroup::from_table(g->order(), g->table(), g->labels(),
                                 {{"kind", "symmetric"}, {"n", n}});
}

GroupRef alternating_group(int n) {
  if (n < 1 || n > 7) fail_input("alternating group degree must be in 1..7");
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  auto g = permutation_group(n, gens);
  return FiniteGroup::from_table(g->order(), g->table(), g->labels(),
                                 {{"kind", "alternating"}, {"n", n}});
}

GroupRef product_group(const std::vector<GroupRef>& factors) {
  if (factors.empty()) fail_input("product needs at least one factor");
  long long total = 1;
  for (auto& f : factors) total *= f->order();
  if (total > 10000) fail_input("product order exceeds cap 10000");
  const int n = static_cast<int>(total);
  const std::size_t k = factors.size();
  // first factor is most significant
  auto split = [&](int x) {
    std::vector<int> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = x % factors[i]->order();
      x /= factors[i]->order();
    }
    return c;
  };
  auto join = [&](const std::vector<int>& c) {
    int x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * factors[i]->order() + c[i];
    return x;
  };
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    auto c = split(x);
    std::string l = "(";
    for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + factors[i]->label(c[i]);
    labels.push_back(l + ")");
  }
  auto tab = table_from(n, [&](int a, int b) {
    auto ca = split(a), cb = split(b);
    for (std::size_t i = 0; i < k; ++i) ca[i] = factors[i]->mul(ca[i], cb[i]);
    return join(ca);
  });
  nlohmann::json fs = nlohmann::json::array();
  for (auto& f : factors) fs.push_back(f->provenance());
  return FiniteGroup::from_table(n, std::move(tab), std::move(labels),
                                 {{"kind", "product"}, {"factors", fs}});
}

GroupRef semidirect_group(const GroupRef& normal, const GroupRef& acting,
                          const std::vector<std::vector<int>>& action) {
  const int nn = normal->order(), nk = acting->order();
  if (static_cast<int>(action.size()) != nk)
    fail_input("semidirect action must list one automorphism per acting element");
  for (auto& phi : action) {
    check_perm(phi, nn);
    Homomorphism h{normal, normal, phi};
    if (!h.is_homomorphism()) fail_input("semidirect action entry is not an automorphism");
  }
  for (int x = 0; x < nn; ++x)
    if (action[0][x] != x) fail_input("identity of the acting group must act trivially");
  for (int a = 0; a < nk; ++a)
    for (int b = 0; b < nk; ++b)
      for (int x = 0; x < nn; ++x)
        if (action[acting->mul(a, b)][x] != action[a][action[b][x]])
          fail_input("semidirect action is not a homomorphism into Aut(N)");

  const long long total = static_cast<long long>(nn) * nk;
  if (total > 10000) fail_input("semidirect order exceeds cap 10000");
  const int n = static_cast<int>(total);
  // (n1,k1)(n2,k2) = (n1 * phi_k1(n2), k1 k2), index n*|K| + k
  auto tab = table_from(n, [&](int a, int b) {
    const int n1 = a / nk, k1 = a % nk, n2 = b / nk, k2 = b % nk;
    return normal->mul(n1, action[k1][n2]) * nk + acting->mul(k1, k2);
  });
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x)
    labels.push_back("(" + normal->label(x / nk) + ";" + acting->label(x % nk) + ")");
  return FiniteGroup::from_table(n, std::move(tab), std::move(labels),
                                 {{"kind", "semidirect"},
                                  {"normal", normal->provenance()},
                                  {"acting", acting->provenance()},
                                  {"action", action}});
}

GroupRef wreath2_group(const GroupRef& base) {
  const int m = base->order();
  auto hh = product_group({base, base});
  std::vector<std::vector<int>> action(2, std::vector<int>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      action[0][a * m + b] = a * m + b;
      action[1][a * m + b] = b * m + a;
    }
  auto g = semidirect_group(hh, cyclic_group(2), action);
  std::vector<std::string> labels;
  for (int x = 0; x < g->order(); ++x) {
    const int pair = x / 2;
    labels.push_back("(" + base->label(pair / m) + "," + base->label(pair % m) +
                     (x % 2 ? ";σ)" : ";e)"));
  }
  return FiniteGroup::from_table(g->order(), g->table(), std::move(labels),
                                 {{"kind", "wreath2"}, {"base", base->provenance()}});
}

GroupRef build_group(const nlohmann::json& spec, int order_cap) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    fail_input("group spec must be an object with a string \"kind\"");
  const std::string kind = spec["kind"];
  auto get_int = [&](const char* key) {
    if (!spec.contains(key) || !spec[key].is_number_integer())
      fail_input(std::string("group spec of kind ") + kind + " needs integer \"" + key + "\"");
    return spec[key].get<int>();
  };
  GroupRef g;
  if (kind == "cyclic") {
    g = cyclic_group(get_int("n"));
  } else if (kind == "dihedral") {
    g = dihedral_group(get_int("order"));
  } else if (kind == "symmetric") {
    g = symmetric_group(get_int("n"));
  } else if (kind == "alternating") {
    g = alternating_group(get_int("n"));
  } else if (kind == "product") {
    if (!spec.contains("factors") || !spec["factors"].is_array())
      fail_input("product spec needs \"factors\" array");
    std::vector<GroupRef> fs;
    for (auto& f : spec["factors"]) fs.push_back(build_group(f, order_cap));
    g = product_group(fs);
  } else if (kind == "semidirect") {
    if (!spec.contains("normal") || !spec.contains("acting") || !spec.contains("action"))
      fail_input("semidirect spec needs \"normal\", \"acting\" and \"action\"");
    auto nrm = build_group(spec["normal"], order_cap);
    auto act = build_group(spec["acting"], order_cap);
    std::vector<std::vector<int>> action;
    try {
      action = spec["action"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception&) {
      fail_input("semidirect \"action\" must be a list of integer lists");
    }
    g = semidirect_group(nrm, act, action);
  } else if (kind == "wreath2") {
    if (!spec.contains("base")) fail_input("wreath2 spec needs \"base\"");
    g = wreath2_group(build_group(spec["base"], order_cap));
  } else if (kind == "permutation") {
    std::vector<std::vector<int>> gens;
    try {
      gens = spec.at("generators").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception&) {
      fail_input("permutation spec needs \"generators\" as a list of integer lists");
    }
    g = permutation_group(get_int("degree"), gens, order_cap);
  } else if (kind == "table") {
    const int n = get_int("order");
    std::vector<int> flat;
    try {
      for (auto& row : spec.at("table")) {
        auto r = row.get<std::vector<int>>();
        if (static_cast<int>(r.size()) != n) fail_input("table row has wrong length");
        flat.insert(flat.end(), r.begin(), r.end());
      }
    } catch (const nlohmann::json::exception&) {
      fail_input("table spec needs \"table\" as a list of integer rows");
    }
    g = FiniteGroup::from_table(n, std::move(flat), {}, spec);
  } else {
    fail_input("unknown group kind \"" + kind + "\"");
  }
  if (g->order() > order_cap) fail_input("group order exceeds cap " + std::to_string(order_cap));
  return g;
}

}  // namespace f2c
