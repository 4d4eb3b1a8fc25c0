#include "relalg/indexcore.hpp"

#include <random>

#include "relalg/isomorph.hpp"

namespace relalg {

namespace {

void require_per(const Relation& p, const char* op) {
  const std::string prefix = std::string(op) + ": ";
  if (!p.is_homogeneous()) {
    throw NotAPer(prefix + "relation " + p.src().name() + "~" + p.dst().name() + " is not homogeneous", "homogeneous");
  }
  if (!(converse(p) == p)) throw NotAPer(prefix + "relation is not symmetric (P = P° fails)", "symmetric");
  if (!is_subset(compose(p, p), p)) throw NotAPer(prefix + "relation is not transitive (P∘P ⊆ P fails)", "transitive");
}

std::string class_label(const Carrier& c, const std::vector<std::size_t>& members) {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k != 0) out += ",";
    out += c.label(members[k]);
  }
  return out + "}";
}

// λ: X~A relating each class id to its members.
Relation class_map(const Relation& per, const Carrier& base, const CarrierPtr& base_ptr, const std::string& name) {
  const auto classes = per_classes(per);
  std::vector<std::string> labels;
  labels.reserve(classes.size());
  for (const auto& cls : classes) labels.push_back(class_label(base, cls));
  auto quotient = make_carrier(name, std::move(labels));
  Relation lambda(quotient, base_ptr);
  for (std::size_t x = 0; x < classes.size(); ++x) {
    for (auto a : classes[x]) lambda.insert(x, a);
  }
  return lambda;
}

}  // namespace

Policy parse_policy(const std::string& name) {
  if (name == "min" || name == "smallest") return Policy::Smallest;
  if (name == "max" || name == "largest") return Policy::Largest;
  if (name == "random") return Policy::Random;
  throw std::invalid_argument("unknown policy '" + name + "' (expected min, max or random)");
}

std::string policy_name(Policy p) {
  switch (p) {
    case Policy::Smallest: return "min";
    case Policy::Largest: return "max";
    case Policy::Random: return "random";
  }
  return "min";
}

std::vector<std::vector<std::size_t>> per_classes(const Relation& p) {
  require_per(p, "per_classes");
  std::vector<std::vector<std::size_t>> out;
  Relation::Row seen = 0;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    const Relation::Row bit = Relation::Row{1} << i;
    if ((seen & bit) != 0 || p.row(i) == 0) continue;
    seen |= p.row(i);
    out.push_back(bits_of(p.row(i)));
  }
  return out;
}

Coreflexive per_index(const Relation& p, const Chooser& chooser) {
  require_per(p, "per_index");
  std::mt19937_64 rng(chooser.seed);
  Relation j(p.src_ptr(), p.dst_ptr());
  for (const auto& cls : per_classes(p)) {
    std::size_t pick = cls.front();
    switch (chooser.policy) {
      case Policy::Smallest: break;
      case Policy::Largest: pick = cls.back(); break;
      case Policy::Random: {
        std::uniform_int_distribution<std::size_t> dist(0, cls.size() - 1);
        pick = cls[dist(rng)];
        break;
      }
    }
    j.insert(pick, pick);
  }
  return Coreflexive(std::move(j));
}

PerIndexChecks check_per_index(const Relation& p, const Relation& j) {
  PerIndexChecks c;
  c.within_domain = is_subset(j, ldom(p));
  c.separates = compose(j, p, j) == j;
  c.covers = compose(p, j, p) == p;
  return c;
}

IndexCertificate verify_index(const Relation& r, const Relation& j) {
  if (!same_type(r, j)) {
    throw TypeError("verify_index: index must have the type of the relation (" + r.src().name() + "~" +
                    r.dst().name() + ")");
  }
  const Relation pl = per_ldom(r);
  const Relation pr = per_rdom(r);
  const Relation jl = ldom(j);
  const Relation jr = rdom(j);
  IndexCertificate cert{r, j, {}};
  cert.checks.contained = is_subset(j, r);
  cert.checks.reconstructs = compose(pl, j, pr) == r;
  cert.checks.left = compose(jl, pl, jl) == jl;
  cert.checks.right = compose(jr, pr, jr) == jr;
  return cert;
}

IndexCertificate relation_index(const Relation& r, const Chooser& chooser) {
  const Relation j = per_index(per_ldom(r), chooser);
  const Relation k = per_index(per_rdom(r), chooser);
  auto cert = verify_index(r, compose(j, r, k));
  if (!cert.checks.all()) throw std::logic_error("relation_index: constructed index failed verification");
  return cert;
}

std::vector<Relation> all_indexes(const Relation& r, std::size_t max_bits) {
  const auto pairs = r.pairs();
  if (pairs.size() > max_bits) {
    throw EnumerationBoundError("all_indexes: relation has " + std::to_string(pairs.size()) +
                                " pairs; the bound is " + std::to_string(max_bits));
  }
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Relation j(r.src_ptr(), r.dst_ptr());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) j.insert(pairs[k].first, pairs[k].second);
    }
    if (verify_index(r, j).checks.all()) out.push_back(std::move(j));
  }
  return out;
}

Relation splitting(const Relation& p, const Chooser& chooser) {
  return compose(per_index(p, chooser), p);
}

CoreMode parse_core_mode(const std::string& name) {
  if (name == "same-type") return CoreMode::SameType;
  if (name == "quotient") return CoreMode::Quotient;
  throw std::invalid_argument("unknown core mode '" + name + "' (expected same-type or quotient)");
}

std::string core_mode_name(CoreMode m) { return m == CoreMode::SameType ? "same-type" : "quotient"; }

CoreChecks check_core(const Relation& r, const Relation& lambda, const Relation& rho, const Relation& c) {
  CoreChecks k;
  k.core_equation = c == compose(lambda, r, converse(rho));
  k.lambda_per = per_ldom(r) == compose(converse(lambda), lambda);
  k.lambda_domain = ldom(lambda).relation() == compose(lambda, converse(lambda));
  k.rho_per = per_rdom(r) == compose(converse(rho), rho);
  k.rho_domain = ldom(rho).relation() == compose(rho, converse(rho));
  return k;
}

CoreDecomposition core_of(const Relation& r, CoreMode mode, const Chooser& chooser) {
  const Relation pl = per_ldom(r);
  const Relation pr = per_rdom(r);
  CoreDecomposition d{r, r, r, r, mode, {}};
  if (mode == CoreMode::SameType) {
    const Relation j = relation_index(r, chooser).index;
    d.lambda = compose(ldom(j), pl);
    d.rho = compose(rdom(j), pr);
    d.core = j;
  } else {
    const std::string type = r.src().name() + "~" + r.dst().name();
    d.lambda = class_map(pl, r.src(), r.src_ptr(), "X(" + type + ",left)");
    d.rho = class_map(pr, r.dst(), r.dst_ptr(), "Y(" + type + ",right)");
    d.core = compose(d.lambda, r, converse(d.rho));
  }
  d.checks = check_core(r, d.lambda, d.rho, d.core);
  if (!d.checks.all()) throw std::logic_error("core_of: witnesses failed verification");
  return d;
}

std::vector<NamedCheck> core_theorem_suite(const Relation& r) {
  std::vector<NamedCheck> out;
  const Relation j = relation_index(r).index;
  const Relation pl = per_ldom(r);
  const Relation pr = per_rdom(r);
  const Relation jl = ldom(j);
  const Relation jr = rdom(j);
  const Relation rc = converse(r);

  out.push_back({"J is an index of J", verify_index(j, j).checks.all()});
  out.push_back({"J≺ ⊆ R≺ ∧ J≻ ⊆ R≻", is_subset(per_ldom(j), pl) && is_subset(per_rdom(j), pr)});
  out.push_back({"J is a core relation", is_core_relation(j)});
  out.push_back({"J = J<∘R∘J>", j == compose(jl, r, jr)});
  out.push_back({"R∘J°∘R = R∘R°∘R", compose(r, converse(j), r) == compose(r, rc, r)});
  {
    const Relation m = compose(pl, jl, pl);
    const Relation n = compose(pr, jr, pr);
    out.push_back({"R≺∘J<∘R≺ and R≻∘J>∘R≻ are pers", is_per(m) && is_per(n)});
    out.push_back({"(R≺∘J<∘R≺)< = R< ∧ (R≻∘J>∘R≻)> = R>",
                   ldom(m).relation() == ldom(r).relation() && rdom(n).relation() == rdom(r).relation()});
    out.push_back({"R≺∘J<∘R≺ = R≺ ∧ R≻∘J>∘R≻ = R≻", m == pl && n == pr});
  }
  out.push_back({"J< is an index of R≺ and J> of R≻",
                 verify_index(pl, jl).checks.all() && verify_index(pr, jr).checks.all()});

  for (CoreMode mode : {CoreMode::SameType, CoreMode::Quotient}) {
    const auto d = core_of(r, mode);
    const std::string tag = " [" + core_mode_name(mode) + "]";
    out.push_back({"core witnesses" + tag, d.checks.all()});
    out.push_back({"R< = λ> ∧ C< = λ< ∧ R> = ρ> ∧ C> = ρ<" + tag,
                   ldom(r) == rdom(d.lambda) && ldom(d.core) == ldom(d.lambda) && rdom(r) == rdom(d.rho) &&
                       rdom(d.core) == ldom(d.rho)});
    out.push_back({"C is a core relation" + tag, is_core_relation(d.core)});
    const IsoWitness w{compose(d.lambda, jl), compose(d.rho, jr)};
    out.push_back({"C ≅ J via λ∘J< and ρ∘J>" + tag, verify_witness(d.core, j, w)});
  }
  out.push_back({"same-type core is the index", core_of(r, CoreMode::SameType).core == j});

  if (r.count() <= 16) {
    const auto all = all_indexes(r);
    bool unique_by_domains = true;
    bool isomorphic = true;
    bool contains_j = false;
    for (std::size_t a = 0; a < all.size(); ++a) {
      contains_j = contains_j || all[a] == j;
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        const bool same_domains = ldom(all[a]) == ldom(all[b]) && rdom(all[a]) == rdom(all[b]);
        if ((all[a] == all[b]) != same_domains) unique_by_domains = false;
        if (!find_isomorphism(all[a], all[b], 64)) isomorphic = false;
      }
    }
    out.push_back({"constructed index is among all indexes", contains_j});
    out.push_back({"J = K ≡ J< = K< ∧ J> = K>", unique_by_domains});
    out.push_back({"all indexes are isomorphic", isomorphic});
  }
  return out;
}

std::vector<NamedCheck> difunction_index_suite(const Relation& r) {
  if (!is_difunctional(r)) throw std::invalid_argument("difunction_index_suite: relation is not difunctional");
  std::vector<NamedCheck> out;
  const Relation j = relation_index(r).index;
  const Relation rc = converse(r);
  const Relation jl = ldom(j);
  const Relation jr = rdom(j);
  out.push_back({"J ⊆ R", is_subset(j, r)});
  out.push_back({"R∘J°∘R = R", compose(r, converse(j), r) == r});
  out.push_back({"J<∘R∘R°∘J< = J<", compose(compose(jl, r, rc), jl) == jl});
  out.push_back({"J>∘R°∘R∘J> = J>", compose(compose(jr, rc, r), jr) == jr});
  out.push_back({"J is a bijection", is_bijection(j)});
  out.push_back({"J∘J° = J< ∧ J°∘J = J>", compose(j, converse(j)) == jl && compose(converse(j), j) == jr});
  if (r.count() <= 16) {
    bool all_difunctional = true;
    for (const auto& k : all_indexes(r)) all_difunctional = all_difunctional && is_difunctional(k);
    out.push_back({"every index is difunctional", all_difunctional});
  }
  return out;
}

}  // namespace relalg
