#include "schmidt/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "schmidt/arith.hpp"
#include "schmidt/cayley.hpp"
#include "schmidt/construct.hpp"
#include "schmidt/endo.hpp"
#include "schmidt/json_export.hpp"
#include "schmidt/symbolic.hpp"

namespace schmidt {

  void RunConfig::apply_environment() {
    char const* env = std::getenv("SCHMIDT_LAB_MAX_ORDER");
    if (env == nullptr || *env == '\0') {
      return;
    }
    char*              end = nullptr;
    unsigned long long n   = std::strtoull(env, &end, 10);
    if (*end != '\0' || n == 0) {
      throw std::invalid_argument("SCHMIDT_LAB_MAX_ORDER must be a positive integer");
    }
    max_group_order = max_subgroup_order = max_construct_order = n;
  }

  CheckOptions RunConfig::check_options() const {
    CheckOptions o;
    o.endo.max_group_order = max_group_order;
    o.endo.threads         = threads;
    return o;
  }

  OracleOptions RunConfig::oracle_options() const {
    return OracleOptions{max_subgroup_order};
  }

  namespace {

    bool json(RunConfig const& cfg) {
      return cfg.format == OutputFormat::json;
    }

    // Maps exceptions to exit codes. invalid_argument is tested before its
    // base logic_error: bad input versus a failed internal check.
    template <class F>
    int guarded(std::ostream& err, F&& body) {
      try {
        return body();
      } catch (CayleyParseError const& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
      } catch (std::invalid_argument const& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
      } catch (std::domain_error const& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
      } catch (std::logic_error const& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitDisagreement;
      } catch (std::exception const& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
      }
    }

    EndoOptions endo_options(RunConfig const& cfg) {
      return cfg.check_options().endo;
    }

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

  }  // namespace

  std::vector<NamedGroup> constructed_corpus(std::size_t max_order, std::size_t construct_cap) {
    struct Item {
      std::size_t order;
      unsigned    p, q, v;
    };
    std::vector<Item> items;
    for (unsigned q = 2; q <= max_order; ++q) {
      if (!is_prime(q)) {
        continue;
      }
      for (unsigned p = 2; p <= max_order; ++p) {
        if (!is_prime(p) || p == q) {
          continue;
        }
        std::size_t pu = ipow(p, multiplicative_order(p, q));
        if (pu > max_order) {
          continue;
        }
        std::size_t qv = q;
        for (unsigned v = 1; pu * qv <= max_order; ++v, qv *= q) {
          items.push_back({pu * qv, p, q, v});
        }
      }
    }
    std::sort(items.begin(), items.end(), [](Item const& a, Item const& b) {
      return std::tie(a.order, a.p, a.q, a.v) < std::tie(b.order, b.p, b.q, b.v);
    });
    std::vector<NamedGroup> out;
    ConstructOptions        opts;
    opts.max_order = construct_cap;
    for (auto const& it : items) {
      auto mm = miller_moreno(MMGroupSpec::make(it.p, it.q, it.v), opts);
      out.push_back({"M(" + std::to_string(it.p) + "," + std::to_string(it.q) + ","
                         + std::to_string(it.v) + ")",
                     std::move(mm.group)});
    }
    return out;
  }

  int cmd_construct(unsigned                                    p,
                    unsigned                                    q,
                    unsigned                                    v,
                    std::optional<std::filesystem::path> const& out_path,
                    RunConfig const&                            cfg,
                    std::ostream&                               out,
                    std::ostream&                               err) {
    return guarded(err, [&] {
      ConstructOptions opts;
      opts.max_order          = cfg.max_construct_order;
      opts.subgroup_check_cap = cfg.max_subgroup_order;
      auto mm                 = miller_moreno(MMGroupSpec::make(p, q, v), opts);
      if (out_path) {
        write_cayley(mm.group, *out_path);
      }
      auto const z = center(mm.group).order();
      auto const d = derived_subgroup(mm.group).order();
      if (json(cfg)) {
        Json doc{{"schema", kJsonSchema},
                 {"p", p},
                 {"q", q},
                 {"v", v},
                 {"order", mm.group.order()},
                 {"u", mm.spec.ring.u()},
                 {"psi", poly_to_json(mm.spec.ring.psi())},
                 {"psi_text", mm.spec.ring.psi().to_string()},
                 {"center_order", z},
                 {"derived_order", d},
                 {"b", mm.b},
                 {"warnings", mm.warnings}};
        out << doc.dump(2) << "\n";
      } else {
        out << "order: " << mm.group.order() << "\n"
            << "u: " << mm.spec.ring.u() << "\n"
            << "psi: " << mm.spec.ring.psi().to_string() << "\n"
            << "|Z(G)|: " << z << "\n"
            << "|G'|: " << d << "\n";
        for (auto const& w : mm.warnings) {
          out << "warning: " << w << "\n";
        }
        if (out_path) {
          out << "wrote " << out_path->string() << "\n";
        }
      }
      return kExitOk;
    });
  }

  int cmd_endos(std::filesystem::path const& file,
                RunConfig const&             cfg,
                std::ostream&                out,
                std::ostream&                err) {
    return guarded(err, [&] {
      auto g  = read_cayley(file);
      auto m  = EndoMonoid::enumerate(g, endo_options(cfg));
      auto i0 = idempotents_I0(m);
      if (json(cfg)) {
        Json doc = endo_monoid_to_json(m);
        doc["aut_size"] = m.automorphisms().size();
        Json idem       = Json::array();
        for (auto x : i0) {
          auto ik = image_kernel(g, m.map(x));
          idem.push_back(
              Json{{"index", x}, {"image_order", ik.image.order()}, {"kernel_order", ik.kernel.order()}});
        }
        doc["I0"] = std::move(idem);
        out << doc.dump(2) << "\n";
      } else {
        out << "|End|: " << m.size() << "\n"
            << "|Aut|: " << m.automorphisms().size() << "\n"
            << "|I0|: " << i0.size() << "\n";
        for (auto x : i0) {
          auto ik = image_kernel(g, m.map(x));
          out << "  idempotent #" << x << ": |Im| = " << ik.image.order()
              << ", |Ker| = " << ik.kernel.order() << "\n";
        }
      }
      return kExitOk;
    });
  }

  namespace {

    void print_report_text(CharacterizationReport const& r, std::ostream& out) {
      out << "|G| = " << r.group_order << ", |End| = " << r.end_size
          << ", |Aut| = " << r.aut_size << ", |I0| = " << r.idempotents.size() << "\n";
      if (r.params) {
        out << "parameters: " << to_string(*r.params) << ", u = " << r.u
            << (r.inferred ? " (inferred)" : "") << "\n";
      } else {
        out << "parameters: none\n";
      }
      for (auto const& c : r.candidates) {
        out << "x = #" << c.x << ":";
        for (std::size_t i = 0; i < 8; ++i) {
          out << " " << (i + 1) << (c.props[i] ? "+" : "-");
        }
        out << (c.passes() ? "  all hold" : "") << "\n";
        for (std::size_t i = 0; i < 8; ++i) {
          if (!c.props[i]) {
            out << "    " << (i + 1) << " (" << kPropertyNames[i] << "): " << c.witnesses[i]
                << "\n";
          }
        }
      }
      if (!r.diagnostic.empty()) {
        out << "note: " << r.diagnostic << "\n";
      }
      out << "characterization: " << (r.verdict ? "pass" : "fail") << "\n";
    }

  }  // namespace

  int cmd_check_schmidt(std::filesystem::path const&        file,
                        std::optional<SchmidtParams> const& params,
                        RunConfig const&                    cfg,
                        std::ostream&                       out,
                        std::ostream&                       err) {
    return guarded(err, [&] {
      auto g      = read_cayley(file);
      auto oracle = brute_is_schmidt(g, cfg.oracle_options());
      auto rep    = check_characterization(g, params, cfg.check_options());

      bool oracle_pass = oracle.is_schmidt && (!params || oracle.params == params);
      bool agree       = oracle_pass == rep.verdict
                   && (!rep.verdict || !oracle.params || rep.params == oracle.params);
      int code = !agree ? kExitDisagreement : rep.verdict ? kExitOk : kExitFail;

      if (json(cfg)) {
        Json doc      = report_to_json(rep);
        doc["oracle"] = verdict_to_json(oracle);
        doc["agree"]  = agree;
        out << doc.dump(2) << "\n";
      } else {
        print_report_text(rep, out);
        out << "oracle: "
            << (oracle.is_schmidt ? "Schmidt " + to_string(*oracle.params)
                                  : "not Schmidt (" + oracle.witness + ")")
            << "\n";
        out << "agreement: " << (agree ? "agree" : "DISAGREE") << "\n";
      }
      return code;
    });
  }

  int cmd_compare_end(std::filesystem::path const& file1,
                      std::filesystem::path const& file2,
                      RunConfig const&             cfg,
                      std::ostream&                out,
                      std::ostream&                err) {
    return guarded(err, [&] {
      auto g1 = read_cayley(file1);
      auto g2 = read_cayley(file2);
      auto m1 = EndoMonoid::enumerate(g1, endo_options(cfg));
      auto m2 = EndoMonoid::enumerate(g2, endo_options(cfg));
      bool end_iso = m1.size() == m2.size()
                     && find_isomorphism(m1.semigroup(), m2.semigroup()).has_value();
      bool grp_iso = find_group_isomorphism(g1, g2).has_value();
      if (json(cfg)) {
        Json doc{{"schema", kJsonSchema},
                 {"end_sizes", {m1.size(), m2.size()}},
                 {"end_isomorphic", end_iso},
                 {"groups_isomorphic", grp_iso},
                 {"end_iso_but_groups_not", end_iso && !grp_iso}};
        out << doc.dump(2) << "\n";
      } else {
        out << "|End(G1)| = " << m1.size() << ", |End(G2)| = " << m2.size() << "\n"
            << "End isomorphic: " << yes_no(end_iso) << "\n"
            << "groups isomorphic: " << yes_no(grp_iso) << "\n";
        if (end_iso && !grp_iso) {
          out << "*** endomorphism semigroups isomorphic but the groups are not ***\n";
        }
      }
      return kExitOk;
    });
  }

  int cmd_sweep(std::string const& corpus,
                std::size_t        max_order,
                RunConfig const&   cfg,
                std::ostream&      out,
                std::ostream&      err) {
    return guarded(err, [&] {
      std::vector<NamedGroup> groups;
      if (corpus == "catalog") {
        for (auto& e : catalog_up_to(max_order)) {
          groups.push_back({e.name, std::move(e.group)});
        }
      } else if (corpus == "constructed") {
        groups = constructed_corpus(max_order, cfg.max_construct_order);
      } else {
        throw std::invalid_argument("unknown corpus: " + corpus
                                    + " (expected catalog or constructed)");
      }

      auto opts = cfg.check_options();
      auto rows = oracle_agreement(groups, opts);
      std::size_t disagreements = std::count_if(
          rows.begin(), rows.end(), [](auto const& r) { return !r.agree; });

      std::vector<EndoMonoid> monoids;
      for (auto const& g : groups) {
        monoids.push_back(EndoMonoid::enumerate(g.group, opts.endo));
      }
      struct Uniqueness {
        std::size_t              index;
        unsigned                 u;
        std::vector<std::size_t> partners;     // End-isomorphic, group-isomorphic
        std::vector<std::size_t> counterparts; // End-isomorphic, not group-isomorphic
      };
      std::vector<Uniqueness> uniq;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (!rows[i].oracle.is_schmidt) {
          continue;
        }
        auto const& prm = *rows[i].oracle.params;
        Uniqueness  un{i, multiplicative_order(prm.p, prm.q), {}, {}};
        for (std::size_t j = 0; j < groups.size(); ++j) {
          if (j == i || monoids[i].size() != monoids[j].size()) {
            continue;
          }
          if (!find_isomorphism(monoids[i].semigroup(), monoids[j].semigroup())) {
            continue;
          }
          if (find_group_isomorphism(groups[i].group, groups[j].group)) {
            un.partners.push_back(j);
          } else {
            un.counterparts.push_back(j);
          }
        }
        uniq.push_back(std::move(un));
      }

      if (json(cfg)) {
        Json doc;
        doc["schema"]    = kJsonSchema;
        doc["corpus"]    = corpus;
        doc["max_order"] = max_order;
        Json jr          = Json::array();
        for (auto const& r : rows) {
          jr.push_back(Json{{"name", r.name},
                            {"order", r.order},
                            {"oracle", verdict_to_json(r.oracle)},
                            {"end_verdict", r.end_verdict},
                            {"end_params", params_to_json(r.end_params)},
                            {"agree", r.agree},
                            {"note", r.note}});
        }
        doc["rows"]          = std::move(jr);
        doc["disagreements"] = disagreements;
        Json ju              = Json::array();
        for (auto const& un : uniq) {
          Json partners = Json::array(), counter = Json::array();
          for (auto j : un.partners) {
            partners.push_back(groups[j].name);
          }
          for (auto j : un.counterparts) {
            counter.push_back(groups[j].name);
          }
          ju.push_back(Json{{"name", groups[un.index].name},
                            {"u", un.u},
                            {"isomorphic_copies", std::move(partners)},
                            {"end_isomorphic_non_isomorphic", std::move(counter)}});
        }
        doc["end_uniqueness"] = std::move(ju);
        out << doc.dump(2) << "\n";
      } else {
        out << "corpus: " << corpus << ", max order " << max_order << ", " << groups.size()
            << " groups\n";
        for (auto const& r : rows) {
          out << "  " << r.name << " (order " << r.order << "): oracle "
              << (r.oracle.is_schmidt ? "Schmidt " + to_string(*r.oracle.params)
                                      : std::string("non-Schmidt"))
              << ", End test " << (r.end_verdict ? "pass" : "fail") << ", "
              << (r.agree ? "agree" : "DISAGREE");
          if (!r.note.empty()) {
            out << " [" << r.note << "]";
          }
          out << "\n";
        }
        out << "disagreements: " << disagreements << "\n";
        for (auto const& un : uniq) {
          out << "  " << groups[un.index].name << " (u = " << un.u << "): ";
          if (un.counterparts.empty()) {
            out << "End-unique within corpus";
          } else {
            out << "End-isomorphic to non-isomorphic";
            for (auto j : un.counterparts) {
              out << " " << groups[j].name;
            }
          }
          if (!un.partners.empty()) {
            out << " (isomorphic copies:";
            for (auto j : un.partners) {
              out << " " << groups[j].name;
            }
            out << ")";
          }
          out << "\n";
        }
      }
      return disagreements == 0 ? kExitOk : kExitDisagreement;
    });
  }

  int cmd_catalog(std::optional<std::filesystem::path> const& out_dir,
                  RunConfig const&                            cfg,
                  std::ostream&                               out,
                  std::ostream&                               err) {
    return guarded(err, [&] {
      if (out_dir) {
        std::filesystem::create_directories(*out_dir);
      }
      Json list = Json::array();
      for (auto const& name : catalog_names()) {
        auto e = catalog_entry(name);
        if (out_dir) {
          write_cayley(e.group, *out_dir / (name + ".cayley"));
        }
        if (json(cfg)) {
          list.push_back(
              Json{{"name", name}, {"order", e.group.order()}, {"provenance", e.provenance}});
        } else {
          out << name << " " << e.group.order() << "\n";
        }
      }
      if (json(cfg)) {
        out << Json{{"schema", kJsonSchema}, {"groups", std::move(list)}}.dump(2) << "\n";
      }
      return kExitOk;
    });
  }

  int cmd_symbolic(unsigned         p,
                   unsigned         q,
                   unsigned         v,
                   RunConfig const& cfg,
                   std::ostream&    out,
                   std::ostream&    err) {
    return guarded(err, [&] {
      auto spec  = MMGroupSpec::make(p, q, v);
      auto model = SymbolicModel::build(spec);
      auto vs    = model.v_triplets();
      auto ds    = model.d_triplets();
      if (json(cfg)) {
        Json doc         = model_to_json(model);
        doc["v_count"]   = vs.size();
        doc["d_count"]   = ds.size();
        out << doc.dump(2) << "\n";
      } else {
        out << "ring: Z_" << p << "[x]/(" << spec.ring.psi().to_string() << "), u = "
            << spec.ring.u() << "\n"
            << "proper endomorphisms: " << model.size() << "\n";
        for (auto const& e : model.elems()) {
          out << "  " << to_string(e) << "\n";
        }
        out << "triplets fixing [1; 0] from the left: " << vs.size() << "\n"
            << "of which also fixing it from the right: " << ds.size() << "\n";
      }
      return kExitOk;
    });
  }

}  // namespace schmidt
