#include <random>

#include "identity.hpp"

namespace cosetalg::verify {

namespace {

template <class E>
using ScalarOf = typename std::decay_t<E>::Scalar;

Verdict pass() { return {}; }

Verdict truth(bool holds, Json lhs, Json rhs) { return {holds, std::move(lhs), std::move(rhs), {}}; }

Verdict at(Verdict v, Json detail) {
  v.detail = std::move(detail);
  return v;
}

/// The first verdict that does not hold, or the last one.
Verdict all(std::initializer_list<Verdict> verdicts) {
  for (const auto& v : verdicts) {
    if (!v.holds) return v;
  }
  return verdicts.size() ? *(verdicts.end() - 1) : pass();
}

template <Scalar S, class Tag>
Verdict same(const Env<S>& e, const PointValues<S, Tag>& lhs, const PointValues<S, Tag>& rhs) {
  return truth(approx_equal(lhs, rhs, e.tol), to_json(lhs), to_json(rhs));
}

template <Scalar S, class Tag>
Verdict differ(const Env<S>& e, const PointValues<S, Tag>& lhs, const PointValues<S, Tag>& rhs) {
  return truth(!approx_equal(lhs, rhs, e.tol), to_json(lhs), to_json(rhs));
}

template <Scalar S>
Verdict same_scalar(const Env<S>& e, const S& lhs, const S& rhs) {
  return truth(ScalarTraits<S>::equal(lhs, rhs, e.tol), scalar_to_json(lhs), scalar_to_json(rhs));
}

template <Scalar S>
Verdict same_real(const Env<S>& e, const RealOf<S>& lhs, const RealOf<S>& rhs) {
  return truth(ScalarTraits<S>::equal(lhs, rhs, e.tol), real_to_json(lhs), real_to_json(rhs));
}

template <Scalar S>
Verdict at_most(const Env<S>& e, const RealOf<S>& lhs, const RealOf<S>& rhs) {
  return truth(ScalarTraits<S>::less_equal(lhs, rhs, e.tol), real_to_json(lhs), real_to_json(rhs));
}

template <Scalar S>
Verdict below(const Env<S>& e, const RealOf<S>& lhs, const RealOf<S>& rhs) {
  return truth(ScalarTraits<S>::less(lhs, rhs, e.tol), real_to_json(lhs), real_to_json(rhs));
}

template <Scalar S, class Tag>
Verdict member(const Env<S>& e, const PointValues<S, Tag>& v, SpaceTag tag) {
  return truth(membership(e.ctx, v, tag, e.tol), to_json(v), std::string(to_string(tag)));
}

template <Scalar S>
Json element(const Env<S>& e, const char* key, GroupElement x) {
  Json out;
  out[key] = e.g().element_name(x);
  return out;
}

/// f holds for every element of G (or of H when `subgroup_only`).
template <Scalar S, class F>
Verdict for_each_element(const Env<S>& e, const char* key, F f, bool subgroup_only = false) {
  std::vector<GroupElement> xs;
  if (subgroup_only) {
    xs.assign(e.ctx.subgroup().members().begin(), e.ctx.subgroup().members().end());
  } else {
    for (auto x : e.g().elements()) xs.push_back(x);
  }
  for (auto x : xs) {
    Verdict v = f(x);
    if (!v.holds) return at(std::move(v), element(e, key, x));
  }
  return pass();
}

template <Scalar S, class F>
Verdict over_shuffles(const Env<S>& e, F f) {
  std::size_t k = 0;
  for (const auto& reps : e.params.at("representatives")) {
    std::vector<GroupElement> r;
    for (const auto& v : reps) r.push_back(GroupElement{v.template get<std::uint32_t>()});
    Verdict v = f(e.ctx.with_representatives(std::move(r)));
    if (!v.holds) {
      Json d;
      d["shuffle"] = k;
      d["representatives"] = reps;
      return at(std::move(v), std::move(d));
    }
    ++k;
  }
  return pass();
}

Json representative_shuffles(const TransferContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Json sets = Json::array();
  for (int k = 0; k < 5; ++k) {
    Json reps = Json::array();
    for (std::size_t i = 0; i < ctx.cosets().size(); ++i) {
      auto coset = ctx.cosets().coset(i);
      std::uniform_int_distribution<std::size_t> pick(0, coset.size() - 1);
      reps.push_back(coset[pick(rng)].index);
    }
    sets.push_back(std::move(reps));
  }
  Json out;
  out["representatives"] = std::move(sets);
  return out;
}

template <Scalar S>
Measure<S> on_cosets(const TransferContext& ctx, const Measure<S>& m) {
  return Measure<S>(ctx.coset_space(), std::vector<S>(m.values().begin(), m.values().end()));
}

template <Scalar S>
Function<S> on_cosets(const TransferContext& ctx, const Function<S>& f) {
  return Function<S>(ctx.coset_space(), std::vector<S>(f.values().begin(), f.values().end()));
}

template <Scalar S, class Tag>
PointValues<S, Tag> on_group(const FiniteGroup& q, const PointValues<S, Tag>& v) {
  return PointValues<S, Tag>(group_space(q), std::vector<S>(v.values().begin(), v.values().end()));
}

using OK = OperandKind;
constexpr OK fG = OK::kFunctionG;
constexpr OK fQ = OK::kFunctionGH;
constexpr OK mG = OK::kMeasureG;
constexpr OK mQ = OK::kMeasureGH;
constexpr OK iQ = OK::kInvariantMeasureGH;
constexpr OK lG = OK::kLeftInvariantG;
constexpr OK rG = OK::kRightInvariantG;
constexpr OK aQ = OK::kInvariantFunctionGH;

class Builder {
 public:
  explicit Builder(std::vector<Identity>& out) : out_(out) {}

  template <class F>
  Identity& add(CheckId check, std::string name, std::vector<OperandKind> ops, F f,
                Scope scope = Scope::kAlways, Quantifier q = Quantifier::kForAll) {
    Identity id;
    id.name = std::move(name);
    id.check = check;
    id.operands = std::move(ops);
    id.scope = scope;
    id.quantifier = q;
    id.exact = [f](const Env<ExactComplex>& e) { return f(e); };
    id.approx = [f](const Env<FloatComplex>& e) { return f(e); };
    out_.push_back(std::move(id));
    return out_.back();
  }

  template <class F>
  Identity& exists(CheckId check, std::string name, std::vector<OperandKind> ops, F f, Scope scope) {
    return add(check, std::move(name), std::move(ops), f, scope, Quantifier::kExists);
  }

 private:
  std::vector<Identity>& out_;
};

void add_w(Builder& b) {
  using enum CheckId;
  auto shuffles = [](const TransferContext& ctx, std::uint64_t seed) {
    return representative_shuffles(ctx, seed);
  };
  b.add(kW0, "W0.th_function", {fG}, [](const auto& e) {
    auto base = th_function(e.ctx, e.fg(0));
    return over_shuffles(e, [&](const TransferContext& o) { return same(e, th_function(o, e.fg(0)), base); });
  }).make_params = shuffles;
  b.add(kW0, "W0.j_function", {fQ}, [](const auto& e) {
    auto base = j_function(e.ctx, e.fq(0));
    return over_shuffles(e, [&](const TransferContext& o) { return same(e, j_function(o, e.fq(0)), base); });
  }).make_params = shuffles;
  b.add(kW0, "W0.function_convolution", {fQ, fQ}, [](const auto& e) {
    auto base = conv_coset_functions(e.ctx, e.fq(0), e.fq(1));
    return over_shuffles(e, [&](const TransferContext& o) {
      return same(e, conv_coset_functions(o, e.fq(0), e.fq(1)), base);
    });
  }).make_params = shuffles;
  b.add(kW0, "W0.function_involution", {fQ}, [](const auto& e) {
    auto base = inv_coset_function(e.ctx, e.fq(0));
    return over_shuffles(e, [&](const TransferContext& o) { return same(e, inv_coset_function(o, e.fq(0)), base); });
  }).make_params = shuffles;
  b.add(kW0, "W0.measure_convolution", {mQ, mQ}, [](const auto& e) {
    auto base = conv_coset_measures(e.ctx, e.mq(0), e.mq(1));
    return over_shuffles(e, [&](const TransferContext& o) {
      return same(e, conv_coset_measures(o, e.mq(0), e.mq(1)), base);
    });
  }).make_params = shuffles;
  b.add(kW0, "W0.measure_involution", {mQ}, [](const auto& e) {
    auto base = inv_coset_measure(e.ctx, e.mq(0));
    return over_shuffles(e, [&](const TransferContext& o) { return same(e, inv_coset_measure(o, e.mq(0)), base); });
  }).make_params = shuffles;

  b.add(kW1, "W1.weil", {fG}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto f = e.fg(0);
    auto th = th_function(e.ctx, f);
    S lhs{}, rhs{};
    for (const auto& v : th.values()) lhs += v * e.scalar(e.haar().coset_weight());
    for (const auto& v : f.values()) rhs += v * e.scalar(e.haar().group_weight());
    return same_scalar(e, lhs, rhs);
  }).min_random = 50;
  b.add(kW1, "W1.probability_on_subgroup", {}, [](const auto& e) {
    Rational total = e.haar().subgroup_weight() * static_cast<unsigned long>(e.ctx.subgroup().order());
    return truth(total == 1, format_rational(total), "1/1");
  });
}

void add_r(Builder& b) {
  using enum CheckId;
  b.add(kR1, "R1.functional_norm_on_cosets", {mQ},
        [](const auto& e) { return same_real(e, functional_norm(e.mq(0)), tv_norm(e.mq(0))); });
  b.add(kR1, "R1.functional_norm_on_group", {mG},
        [](const auto& e) { return same_real(e, functional_norm(e.mg(0)), tv_norm(e.mg(0))); });
  b.add(kR1, "R1.unit_ball_bound", {mQ, fQ}, [](const auto& e) {
    using T = ScalarTraits<ScalarOf<decltype(e)>>;
    return at_most(e, T::modulus(riesz_pair(e.mq(0), e.fq(1))), tv_norm(e.mq(0)) * sup_norm(e.fq(1)));
  });
  b.add(kR1, "R1.linear_in_measure", {mQ, mQ, fQ}, [](const auto& e) {
    auto a = e.scalar(2, -3);
    return same_scalar(e, riesz_pair(e.mq(0) + a * e.mq(1), e.fq(2)),
                       riesz_pair(e.mq(0), e.fq(2)) + a * riesz_pair(e.mq(1), e.fq(2)));
  });
  b.add(kR1, "R1.linear_in_function", {mQ, fQ, fQ}, [](const auto& e) {
    auto a = e.scalar(-1, 4);
    return same_scalar(e, riesz_pair(e.mq(0), e.fq(1) + a * e.fq(2)),
                       riesz_pair(e.mq(0), e.fq(1)) + a * riesz_pair(e.mq(0), e.fq(2)));
  });
  b.add(kR1, "R1.total_mass", {mQ}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto lambda = e.mq(0);
    Function<S> one(lambda.space(), std::vector<S>(lambda.size(), e.scalar(1)));
    S mass{};
    for (const auto& v : lambda.values()) mass += v;
    return same_scalar(e, riesz_pair(lambda, one), mass);
  });
  b.add(kR1, "R1.translation_isometry_on_group", {mG}, [](const auto& e) {
    auto nu = e.mg(0);
    auto norm = tv_norm(nu);
    return for_each_element(e, "x", [&](GroupElement x) {
      return all({same_real(e, tv_norm(translate_measure_left(e.c(), x, nu)), norm),
                  same_real(e, tv_norm(translate_measure_right(e.g(), x, nu)), norm)});
    });
  });
  b.add(kR1, "R1.translation_isometry_on_cosets", {mQ}, [](const auto& e) {
    auto lambda = e.mq(0);
    auto norm = tv_norm(lambda);
    return for_each_element(e, "x", [&](GroupElement x) {
      return same_real(e, tv_norm(translate_measure_left(e.c(), x, lambda)), norm);
    });
  });
  b.add(kR1, "R1.left_action_on_cosets", {fQ}, [](const auto& e) {
    auto phi = e.fq(0);
    return for_each_element(e, "y", [&](GroupElement y) {
      return for_each_element(e, "z", [&](GroupElement z) {
        return same(e, translate_function(e.c(), y, translate_function(e.c(), z, phi)),
                    translate_function(e.c(), e.g().product(y, z), phi));
      });
    });
  });
  b.add(kR1, "R1.left_action_on_group", {fG}, [](const auto& e) {
    auto f = e.fg(0);
    return for_each_element(e, "z", [&](GroupElement z) {
      return same(e, translate_function(e.c(), z, translate_function(e.c(), e.g().inverse(z), f)), f);
    });
  });
  b.add(kR1, "R1.left_right_translations_commute", {mG}, [](const auto& e) {
    auto nu = e.mg(0);
    return for_each_element(e, "x", [&](GroupElement x) {
      return for_each_element(e, "g", [&](GroupElement g) {
        return same(e, translate_measure_right(e.g(), g, translate_measure_left(e.c(), x, nu)),
                    translate_measure_left(e.c(), x, translate_measure_right(e.g(), g, nu)));
      });
    });
  });
}

void add_t(Builder& b) {
  using enum CheckId;
  b.add(kT1, "T1.sup_norm_decreases", {fG},
        [](const auto& e) { return at_most(e, sup_norm(th_function(e.ctx, e.fg(0))), sup_norm(e.fg(0))); });
  b.add(kT1, "T1.l1_norm_decreases", {fG}, [](const auto& e) {
    return at_most(e, l1_norm(th_function(e.ctx, e.fg(0)), e.haar()), l1_norm(e.fg(0), e.haar()));
  });
  b.add(kT1, "T1.transfer_of_lift", {fQ},
        [](const auto& e) { return same(e, th_function(e.ctx, lift_function(e.ctx, e.fq(0))), e.fq(0)); });
  b.add(kT1, "T1.lift_keeps_sup_norm", {fQ},
        [](const auto& e) { return same_real(e, sup_norm(lift_function(e.ctx, e.fq(0))), sup_norm(e.fq(0))); });

  b.add(kT2, "T2.transfer_of_lift", {mQ},
        [](const auto& e) { return same(e, th_measure(e.ctx, lift_measure(e.ctx, e.mq(0))), e.mq(0)); });
  b.add(kT2, "T2.lift_is_right_invariant", {mQ, fG}, [](const auto& e) {
    auto lifted = lift_measure(e.ctx, e.mq(0));
    auto f = e.fg(1);
    return for_each_element(e, "h", [&](GroupElement h) {
      return same_scalar(e, riesz_pair(lifted, right_translate_function(e.g(), h, f)), riesz_pair(lifted, f));
    }, true);
  });
  b.add(kT2, "T2.lift_pairing", {mQ, fG}, [](const auto& e) {
    return same_scalar(e, riesz_pair(lift_measure(e.ctx, e.mq(0)), e.fg(1)),
                       riesz_pair(e.mq(0), th_function(e.ctx, e.fg(1))));
  });
  b.add(kT2, "T2.lift_keeps_norm", {mQ},
        [](const auto& e) { return same_real(e, tv_norm(lift_measure(e.ctx, e.mq(0))), tv_norm(e.mq(0))); });

  b.add(kT3, "T3.pushforward_pairing", {mG, fQ}, [](const auto& e) {
    return same_scalar(e, riesz_pair(th_measure(e.ctx, e.mg(0)), e.fq(1)),
                       riesz_pair(e.mg(0), lift_function(e.ctx, e.fq(1))));
  });
  b.add(kT3, "T3.pushforward_norm_decreases", {mG},
        [](const auto& e) { return at_most(e, tv_norm(th_measure(e.ctx, e.mg(0))), tv_norm(e.mg(0))); });
  b.exists(kT3, "T3.strict_decrease_exists", {mG},
           [](const auto& e) { return below(e, tv_norm(th_measure(e.ctx, e.mg(0))), tv_norm(e.mg(0))); },
           Scope::kNontrivialSubgroup);

  b.add(kT4, "T4.pushforward_equivariance", {mG}, [](const auto& e) {
    auto nu = e.mg(0);
    return for_each_element(e, "x", [&](GroupElement x) {
      return same(e, th_measure(e.ctx, translate_measure_left(e.c(), x, nu)),
                  translate_measure_left(e.c(), x, th_measure(e.ctx, nu)));
    });
  });
  b.add(kT4, "T4.lift_equivariance", {mQ}, [](const auto& e) {
    auto lambda = e.mq(0);
    return for_each_element(e, "x", [&](GroupElement x) {
      return same(e, lift_measure(e.ctx, translate_measure_left(e.c(), x, lambda)),
                  translate_measure_left(e.c(), x, lift_measure(e.ctx, lambda)));
    });
  });

  b.add(kT5, "T5.embedding_isometry", {fQ},
        [](const auto& e) { return same_real(e, tv_norm(embed_function_GH(e.fq(0), e.haar())), l1_norm(e.fq(0), e.haar())); });
  b.add(kT5, "T5.embedding_linear", {fQ, fQ}, [](const auto& e) {
    auto a = e.scalar(3, 1);
    return same(e, embed_function_GH(e.fq(0) + a * e.fq(1), e.haar()),
                embed_function_GH(e.fq(0), e.haar()) + a * embed_function_GH(e.fq(1), e.haar()));
  });
  b.add(kT5, "T5.embedding_injective", {fQ}, [](const auto& e) {
    Rational inv = 1 / e.haar().coset_weight();
    auto recovered = as_function(e.scalar(Rational(inv)) * embed_function_GH(e.fq(0), e.haar()));
    return same(e, recovered, e.fq(0));
  });
  b.add(kT5, "T5.lift_of_embedding", {fQ}, [](const auto& e) {
    return same(e, lift_measure(e.ctx, embed_function_GH(e.fq(0), e.haar())),
                embed_function_G(lift_function(e.ctx, e.fq(0)), e.haar()));
  });
  b.add(kT5, "T5.embedding_pairing", {fQ, fQ}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto phi = e.fq(0), psi = e.fq(1);
    S rhs{};
    for (std::size_t i = 0; i < phi.size(); ++i) rhs += psi[i] * phi[i] * e.scalar(e.haar().coset_weight());
    return same_scalar(e, riesz_pair(embed_function_GH(phi, e.haar()), psi), rhs);
  });
}

void add_j(Builder& b) {
  using enum CheckId;
  b.add(kJ1, "J1.sup_norm_decreases", {fQ},
        [](const auto& e) { return at_most(e, sup_norm(j_function(e.ctx, e.fq(0))), sup_norm(e.fq(0))); });
  b.add(kJ1, "J1.l1_norm_decreases", {fQ}, [](const auto& e) {
    return at_most(e, l1_norm(j_function(e.ctx, e.fq(0)), e.haar()), l1_norm(e.fq(0), e.haar()));
  });
  b.add(kJ1, "J1.range_is_invariant", {fQ},
        [](const auto& e) { return member(e, j_function(e.ctx, e.fq(0)), SpaceTag::kAGH); });
  b.add(kJ1, "J1.idempotent", {fQ}, [](const auto& e) {
    auto j = j_function(e.ctx, e.fq(0));
    return same(e, j_function(e.ctx, j), j);
  });
  b.add(kJ1, "J1.fixes_invariant_functions", {aQ},
        [](const auto& e) { return same(e, j_function(e.ctx, e.fq(0)), e.fq(0)); });
  b.add(kJ1, "J1.identity_when_normal", {fQ},
        [](const auto& e) { return same(e, j_function(e.ctx, e.fq(0)), e.fq(0)); }, Scope::kNormalOnly);
  b.exists(kJ1, "J1.moves_some_function", {fQ},
           [](const auto& e) { return differ(e, j_function(e.ctx, e.fq(0)), e.fq(0)); },
           Scope::kNonNormalOnly);
}

void add_f(Builder& b) {
  using enum CheckId;
  b.add(kF1, "F1.transfer_of_lifted_convolution", {fQ, fQ}, [](const auto& e) {
    auto lifted = conv_g_functions(e.g(), e.haar(), lift_function(e.ctx, e.fq(0)), lift_function(e.ctx, e.fq(1)));
    return same(e, conv_coset_functions(e.ctx, e.fq(0), e.fq(1)), th_function(e.ctx, lifted));
  });
  b.add(kF1, "F1.lift_of_convolution", {fQ, fQ}, [](const auto& e) {
    return same(e, lift_function(e.ctx, conv_coset_functions(e.ctx, e.fq(0), e.fq(1))),
                conv_g_functions(e.g(), e.haar(), lift_function(e.ctx, e.fq(0)), lift_function(e.ctx, e.fq(1))));
  });

  b.add(kF2, "F2.left_equivariance", {fQ, fQ}, [](const auto& e) {
    auto conv = conv_coset_functions(e.ctx, e.fq(0), e.fq(1));
    return for_each_element(e, "z", [&](GroupElement z) {
      return same(e, translate_function(e.c(), z, conv),
                  conv_coset_functions(e.ctx, translate_function(e.c(), z, e.fq(0)), e.fq(1)));
    });
  });
  b.add(kF2, "F2.l1_submultiplicative", {fQ, fQ}, [](const auto& e) {
    return at_most(e, l1_norm(conv_coset_functions(e.ctx, e.fq(0), e.fq(1)), e.haar()),
                   l1_norm(e.fq(0), e.haar()) * l1_norm(e.fq(1), e.haar()));
  });
  b.add(kF2, "F2.associative", {fQ, fQ, fQ}, [](const auto& e) {
    const auto& ctx = e.ctx;
    return same(e, conv_coset_functions(ctx, conv_coset_functions(ctx, e.fq(0), e.fq(1)), e.fq(2)),
                conv_coset_functions(ctx, e.fq(0), conv_coset_functions(ctx, e.fq(1), e.fq(2))));
  });
  b.add(kF2, "F2.invariant_functions_closed", {aQ, aQ},
        [](const auto& e) { return member(e, conv_coset_functions(e.ctx, e.fq(0), e.fq(1)), SpaceTag::kAGH); });
  b.add(kF2, "F2.linear_in_group_weight", {fQ, fQ}, [](const auto& e) {
    auto doubled = e.ctx.with_group_weight(e.haar().group_weight() * 2);
    return same(e, conv_coset_functions(doubled, e.fq(0), e.fq(1)),
                e.scalar(2) * conv_coset_functions(e.ctx, e.fq(0), e.fq(1)));
  });

  b.add(kF3, "F3.double_star_is_j", {fQ}, [](const auto& e) {
    return same(e, inv_coset_function(e.ctx, inv_coset_function(e.ctx, e.fq(0))), j_function(e.ctx, e.fq(0)));
  });
  b.add(kF3, "F3.transfer_of_lifted_star", {fQ}, [](const auto& e) {
    return same(e, inv_coset_function(e.ctx, e.fq(0)),
                th_function(e.ctx, inv_g_function(e.g(), lift_function(e.ctx, e.fq(0)))));
  });
  b.add(kF3, "F3.l1_norm_decreases", {fQ}, [](const auto& e) {
    return at_most(e, l1_norm(inv_coset_function(e.ctx, e.fq(0)), e.haar()), l1_norm(e.fq(0), e.haar()));
  });
  b.add(kF3, "F3.conjugate_linear", {fQ, fQ}, [](const auto& e) {
    using T = ScalarTraits<ScalarOf<decltype(e)>>;
    auto a = e.scalar(1, 2);
    return same(e, inv_coset_function(e.ctx, e.fq(0) + a * e.fq(1)),
                inv_coset_function(e.ctx, e.fq(0)) + T::conj(a) * inv_coset_function(e.ctx, e.fq(1)));
  });
  b.add(kF3, "F3.invariant_double_star", {aQ}, [](const auto& e) {
    return same(e, inv_coset_function(e.ctx, inv_coset_function(e.ctx, e.fq(0))), e.fq(0));
  });
  b.add(kF3, "F3.invariant_isometry", {aQ}, [](const auto& e) {
    return same_real(e, l1_norm(inv_coset_function(e.ctx, e.fq(0)), e.haar()), l1_norm(e.fq(0), e.haar()));
  });
  b.add(kF3, "F3.invariant_lift_of_star", {aQ}, [](const auto& e) {
    return same(e, lift_function(e.ctx, inv_coset_function(e.ctx, e.fq(0))),
                inv_g_function(e.g(), lift_function(e.ctx, e.fq(0))));
  });

  b.add(kF4, "F4.anti_homomorphism", {fQ, fQ}, [](const auto& e) {
    const auto& ctx = e.ctx;
    return same(e, inv_coset_function(ctx, conv_coset_functions(ctx, e.fq(0), e.fq(1))),
                conv_coset_functions(ctx, inv_coset_function(ctx, e.fq(1)), inv_coset_function(ctx, e.fq(0))));
  });
  b.add(kF4, "F4.invariant_functions_closed_under_star", {aQ},
        [](const auto& e) { return member(e, inv_coset_function(e.ctx, e.fq(0)), SpaceTag::kAGH); });
}

void add_g(Builder& b) {
  using enum CheckId;
  b.add(kG1, "G1.function_l1_submultiplicative", {fG, fG}, [](const auto& e) {
    return at_most(e, l1_norm(conv_g_functions(e.g(), e.haar(), e.fg(0), e.fg(1)), e.haar()),
                   l1_norm(e.fg(0), e.haar()) * l1_norm(e.fg(1), e.haar()));
  });
  b.add(kG1, "G1.function_associative", {fG, fG, fG}, [](const auto& e) {
    const auto& g = e.g();
    const auto& h = e.haar();
    return same(e, conv_g_functions(g, h, conv_g_functions(g, h, e.fg(0), e.fg(1)), e.fg(2)),
                conv_g_functions(g, h, e.fg(0), conv_g_functions(g, h, e.fg(1), e.fg(2))));
  });
  b.add(kG1, "G1.function_double_star", {fG},
        [](const auto& e) { return same(e, inv_g_function(e.g(), inv_g_function(e.g(), e.fg(0))), e.fg(0)); });
  b.add(kG1, "G1.function_anti_homomorphism", {fG, fG}, [](const auto& e) {
    const auto& g = e.g();
    const auto& h = e.haar();
    return same(e, inv_g_function(g, conv_g_functions(g, h, e.fg(0), e.fg(1))),
                conv_g_functions(g, h, inv_g_function(g, e.fg(1)), inv_g_function(g, e.fg(0))));
  });
  b.add(kG1, "G1.measure_convolution_pairing", {mG, mG}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto a = e.mg(0), b2 = e.mg(1);
    // Pairing against each point indicator f = 1_z: sum over x, y of f(xy) a(x) b(y).
    auto expected = Measure<S>::zero(a.space());
    for (auto x : e.g().elements()) {
      for (auto y : e.g().elements()) expected[e.g().product(x, y).index] += a[x.index] * b2[y.index];
    }
    return same(e, conv_g_measures(e.g(), a, b2), expected);
  });
  b.add(kG1, "G1.measure_unit", {mG}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto delta = Measure<S>::indicator(e.ctx.group_space(), e.g().identity().index);
    return all({same(e, conv_g_measures(e.g(), delta, e.mg(0)), e.mg(0)),
                same(e, conv_g_measures(e.g(), e.mg(0), delta), e.mg(0))});
  });
  b.add(kG1, "G1.measure_associative", {mG, mG, mG}, [](const auto& e) {
    const auto& g = e.g();
    return same(e, conv_g_measures(g, conv_g_measures(g, e.mg(0), e.mg(1)), e.mg(2)),
                conv_g_measures(g, e.mg(0), conv_g_measures(g, e.mg(1), e.mg(2))));
  });
  b.add(kG1, "G1.measure_star", {mG}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto nu = e.mg(0);
    auto star = inv_g_measure(e.g(), nu);
    // nu*(1_z) = conj(nu({z^-1})).
    auto expected = Measure<S>::zero(nu.space());
    for (auto x : e.g().elements()) expected[e.g().inverse(x).index] += ScalarTraits<S>::conj(nu[x.index]);
    return all({same(e, star, expected), same(e, inv_g_measure(e.g(), star), nu),
                same_real(e, tv_norm(star), tv_norm(nu))});
  });
  b.add(kG1, "G1.measure_anti_homomorphism", {mG, mG}, [](const auto& e) {
    const auto& g = e.g();
    return same(e, inv_g_measure(g, conv_g_measures(g, e.mg(0), e.mg(1))),
                conv_g_measures(g, inv_g_measure(g, e.mg(1)), inv_g_measure(g, e.mg(0))));
  });
  b.add(kG1, "G1.measure_submultiplicative", {mG, mG}, [](const auto& e) {
    return at_most(e, tv_norm(conv_g_measures(e.g(), e.mg(0), e.mg(1))), tv_norm(e.mg(0)) * tv_norm(e.mg(1)));
  });
  b.add(kG1, "G1.embedding_isometry", {fG},
        [](const auto& e) { return same_real(e, tv_norm(embed_function_G(e.fg(0), e.haar())), l1_norm(e.fg(0), e.haar())); });
  b.add(kG1, "G1.embedding_homomorphism", {fG, fG}, [](const auto& e) {
    const auto& h = e.haar();
    return same(e, embed_function_G(conv_g_functions(e.g(), h, e.fg(0), e.fg(1)), h),
                conv_g_measures(e.g(), embed_function_G(e.fg(0), h), embed_function_G(e.fg(1), h)));
  });
  b.add(kG1, "G1.embedding_star", {fG}, [](const auto& e) {
    return same(e, embed_function_G(inv_g_function(e.g(), e.fg(0)), e.haar()),
                inv_g_measure(e.g(), embed_function_G(e.fg(0), e.haar())));
  });
}

void add_m(Builder& b) {
  using enum CheckId;
  b.add(kM1, "M1.convolution_pairing", {mQ, mQ}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto a = e.mq(0), b2 = e.mq(1);
    const auto& c = e.c();
    const auto& g = e.g();
    auto hs = e.ctx.subgroup().members();
    // Pairing against 1_z of the defining double integral, averaged over
    // every member of both cosets so no representative is singled out.
    Rational w(1, static_cast<unsigned long>(hs.size() * hs.size() * hs.size()));
    w.canonicalize();
    auto expected = Measure<S>::zero(a.space());
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (ScalarTraits<S>::is_zero(a[i]) || ScalarTraits<S>::is_zero(b2[j])) continue;
        S term = a[i] * b2[j] * e.scalar(w);
        for (auto x : c.coset(i)) {
          for (auto y : c.coset(j)) {
            for (auto h : hs) expected[c.coset_of(g.product(g.product(x, h), y))] += term;
          }
        }
      }
    }
    return same(e, conv_coset_measures(e.ctx, a, b2), expected);
  });
  b.add(kM1, "M1.bilinear", {mQ, mQ, mQ}, [](const auto& e) {
    const auto& ctx = e.ctx;
    auto s = e.scalar(-2, 5);
    return all({same(e, conv_coset_measures(ctx, e.mq(0) + s * e.mq(1), e.mq(2)),
                     conv_coset_measures(ctx, e.mq(0), e.mq(2)) + s * conv_coset_measures(ctx, e.mq(1), e.mq(2))),
                same(e, conv_coset_measures(ctx, e.mq(0), e.mq(1) + s * e.mq(2)),
                     conv_coset_measures(ctx, e.mq(0), e.mq(1)) + s * conv_coset_measures(ctx, e.mq(0), e.mq(2)))});
  });
  b.add(kM1, "M1.associative", {mQ, mQ, mQ}, [](const auto& e) {
    const auto& ctx = e.ctx;
    return same(e, conv_coset_measures(ctx, conv_coset_measures(ctx, e.mq(0), e.mq(1)), e.mq(2)),
                conv_coset_measures(ctx, e.mq(0), conv_coset_measures(ctx, e.mq(1), e.mq(2))));
  });
  b.add(kM1, "M1.right_unit", {mQ}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto unit = Measure<S>::indicator(e.ctx.coset_space(), e.c().coset_of(e.g().identity()));
    return same(e, conv_coset_measures(e.ctx, e.mq(0), unit), e.mq(0));
  });
  b.add(kM1, "M1.left_unit_gives_double_star", {mQ}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto unit = Measure<S>::indicator(e.ctx.coset_space(), e.c().coset_of(e.g().identity()));
    return same(e, conv_coset_measures(e.ctx, unit, e.mq(0)),
                inv_coset_measure(e.ctx, inv_coset_measure(e.ctx, e.mq(0))));
  });
  b.add(kM1, "M1.two_sided_unit_on_invariant", {iQ}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto unit = Measure<S>::indicator(e.ctx.coset_space(), e.c().coset_of(e.g().identity()));
    return all({same(e, conv_coset_measures(e.ctx, unit, e.mq(0)), e.mq(0)),
                same(e, conv_coset_measures(e.ctx, e.mq(0), unit), e.mq(0))});
  });

  b.add(kM2, "M2.submultiplicative", {mQ, mQ}, [](const auto& e) {
    return at_most(e, tv_norm(conv_coset_measures(e.ctx, e.mq(0), e.mq(1))), tv_norm(e.mq(0)) * tv_norm(e.mq(1)));
  });
  b.add(kM2, "M2.lift_homomorphism", {mQ, mQ}, [](const auto& e) {
    return same(e, lift_measure(e.ctx, conv_coset_measures(e.ctx, e.mq(0), e.mq(1))),
                conv_g_measures(e.g(), lift_measure(e.ctx, e.mq(0)), lift_measure(e.ctx, e.mq(1))));
  });
  b.add(kM2, "M2.left_equivariance", {mQ, mQ}, [](const auto& e) {
    auto conv = conv_coset_measures(e.ctx, e.mq(0), e.mq(1));
    return for_each_element(e, "x", [&](GroupElement x) {
      return same(e, translate_measure_left(e.c(), x, conv),
                  conv_coset_measures(e.ctx, translate_measure_left(e.c(), x, e.mq(0)), e.mq(1)));
    });
  });
  b.add(kM2, "M2.transfer_with_group_measure", {mQ, mG}, [](const auto& e) {
    return same(e, th_measure(e.ctx, conv_g_measures(e.g(), lift_measure(e.ctx, e.mq(0)), e.mg(1))),
                conv_coset_measures(e.ctx, e.mq(0), th_measure(e.ctx, e.mg(1))));
  });
  b.add(kM2, "M2.transfer_of_lifts", {mQ, mQ}, [](const auto& e) {
    return same(e, th_measure(e.ctx, conv_g_measures(e.g(), lift_measure(e.ctx, e.mq(0)), lift_measure(e.ctx, e.mq(1)))),
                conv_coset_measures(e.ctx, e.mq(0), e.mq(1)));
  });
  b.add(kM2, "M2.double_integral_forms", {mG, lG}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    const auto& g = e.g();
    const auto& c = e.c();
    auto nu = e.mg(0), nu2 = e.mg(1);
    auto hs = e.ctx.subgroup().members();
    S w = e.scalar(e.haar().subgroup_weight());
    auto lhs = th_measure(e.ctx, conv_g_measures(g, nu, nu2));
    // Both double integrals, paired with every indicator 1_zH at once.
    auto first = Measure<S>::zero(e.ctx.coset_space());
    for (auto x : g.elements()) {
      for (auto y : g.elements()) {
        if (ScalarTraits<S>::is_zero(nu[x.index]) || ScalarTraits<S>::is_zero(nu2[y.index])) continue;
        S term = nu[x.index] * nu2[y.index] * w;
        for (auto h : hs) first[c.coset_of(g.product(g.product(x, h), y))] += term;
      }
    }
    auto pushed = th_measure(e.ctx, nu2);
    auto second = Measure<S>::zero(e.ctx.coset_space());
    for (auto x : g.elements()) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (ScalarTraits<S>::is_zero(nu[x.index]) || ScalarTraits<S>::is_zero(pushed[j])) continue;
        S term = nu[x.index] * pushed[j] * w;
        for (auto h : hs) second[c.coset_of(g.product(g.product(x, h), c.representative(j)))] += term;
      }
    }
    return all({at(same(e, lhs, first), "first form"), at(same(e, lhs, second), "second form")});
  });

  b.add(kM3, "M3.embedding_convolution", {fQ, fQ}, [](const auto& e) {
    const auto& h = e.haar();
    return same(e, conv_coset_measures(e.ctx, embed_function_GH(e.fq(0), h), embed_function_GH(e.fq(1), h)),
                embed_function_GH(conv_coset_functions(e.ctx, e.fq(0), e.fq(1)), h));
  });
  b.add(kM3, "M3.embedding_involution", {fQ}, [](const auto& e) {
    return same(e, inv_coset_measure(e.ctx, embed_function_GH(e.fq(0), e.haar())),
                embed_function_GH(inv_coset_function(e.ctx, e.fq(0)), e.haar()));
  });
  b.add(kM3, "M3.invariant_functions_embed_invariantly", {aQ},
        [](const auto& e) { return member(e, embed_function_GH(e.fq(0), e.haar()), SpaceTag::kMInvGH); });

  b.add(kM4, "M4.star_pairing", {mQ, fQ}, [](const auto& e) {
    using T = ScalarTraits<ScalarOf<decltype(e)>>;
    return same_scalar(e, riesz_pair(inv_coset_measure(e.ctx, e.mq(0)), e.fq(1)),
                       T::conj(riesz_pair(e.mq(0), inv_coset_function(e.ctx, e.fq(1)))));
  });
  b.add(kM4, "M4.star_definition", {mQ}, [](const auto& e) {
    using S = ScalarOf<decltype(e)>;
    auto lambda = e.mq(0);
    const auto& c = e.c();
    const auto& g = e.g();
    auto hs = e.ctx.subgroup().members();
    Rational w(1, static_cast<unsigned long>(hs.size() * hs.size()));
    w.canonicalize();
    auto expected = Measure<S>::zero(lambda.space());
    for (std::size_t i = 0; i < c.size(); ++i) {
      S term = ScalarTraits<S>::conj(lambda[i]) * e.scalar(w);
      for (auto x : c.coset(i)) {
        for (auto h : hs) expected[c.coset_of(g.product(g.inverse(h), g.inverse(x)))] += term;
      }
    }
    return same(e, inv_coset_measure(e.ctx, lambda), expected);
  });
  b.add(kM4, "M4.conjugate_linear", {mQ, mQ}, [](const auto& e) {
    using T = ScalarTraits<ScalarOf<decltype(e)>>;
    auto a = e.scalar(2, 1);
    return same(e, inv_coset_measure(e.ctx, e.mq(0) + a * e.mq(1)),
                inv_coset_measure(e.ctx, e.mq(0)) + T::conj(a) * inv_coset_measure(e.ctx, e.mq(1)));
  });

  b.add(kM5, "M5.double_star_is_composition_with_j", {mQ}, [](const auto& e) {
    return same(e, inv_coset_measure(e.ctx, inv_coset_measure(e.ctx, e.mq(0))), compose_with_j(e.ctx, e.mq(0)));
  });
  b.add(kM5, "M5.invariant_double_star", {iQ}, [](const auto& e) {
    return same(e, inv_coset_measure(e.ctx, inv_coset_measure(e.ctx, e.mq(0))), e.mq(0));
  });
  b.exists(kM5, "M5.double_star_moves_some_measure", {mQ}, [](const auto& e) {
    return differ(e, inv_coset_measure(e.ctx, inv_coset_measure(e.ctx, e.mq(0))), e.mq(0));
  }, Scope::kNonNormalOnly);

  b.add(kM6, "M6.anti_homomorphism", {mQ, mQ}, [](const auto& e) {
    const auto& ctx = e.ctx;
    return same(e, inv_coset_measure(ctx, conv_coset_measures(ctx, e.mq(0), e.mq(1))),
                conv_coset_measures(ctx, inv_coset_measure(ctx, e.mq(1)), inv_coset_measure(ctx, e.mq(0))));
  });
  b.add(kM6, "M6.invariant_closed_under_convolution", {iQ, iQ},
        [](const auto& e) { return member(e, conv_coset_measures(e.ctx, e.mq(0), e.mq(1)), SpaceTag::kMInvGH); });
  b.add(kM6, "M6.invariant_closed_under_star", {iQ},
        [](const auto& e) { return member(e, inv_coset_measure(e.ctx, e.mq(0)), SpaceTag::kMInvGH); });

  b.add(kM7, "M7.transfer_of_lifted_star", {mQ}, [](const auto& e) {
    return same(e, th_measure(e.ctx, inv_g_measure(e.g(), lift_measure(e.ctx, e.mq(0)))),
                inv_coset_measure(e.ctx, e.mq(0)));
  });
  b.add(kM7, "M7.star_norm_decreases", {mQ},
        [](const auto& e) { return at_most(e, tv_norm(inv_coset_measure(e.ctx, e.mq(0))), tv_norm(e.mq(0))); });
  b.add(kM7, "M7.invariant_star_isometry", {iQ},
        [](const auto& e) { return same_real(e, tv_norm(inv_coset_measure(e.ctx, e.mq(0))), tv_norm(e.mq(0))); });
  b.exists(kM7, "M7.strict_decrease_exists", {mQ},
           [](const auto& e) { return below(e, tv_norm(inv_coset_measure(e.ctx, e.mq(0))), tv_norm(e.mq(0))); },
           Scope::kNonNormalOnly);

  b.add(kM8, "M8.lifts_are_right_invariant", {mQ},
        [](const auto& e) { return member(e, lift_measure(e.ctx, e.mq(0)), SpaceTag::kMGroup); });
  b.add(kM8, "M8.right_invariant_measures_are_lifts", {rG},
        [](const auto& e) { return same(e, lift_measure(e.ctx, th_measure(e.ctx, e.mg(0))), e.mg(0)); });
  b.add(kM8, "M8.invariance_iff_fixed_by_j", {mQ}, [](const auto& e) {
    auto lambda = e.mq(0);
    bool invariant = true;
    for (auto h : e.ctx.subgroup().members()) {
      invariant = invariant && approx_equal(translate_measure_left(e.c(), h, lambda), lambda, e.tol);
    }
    bool fixed = approx_equal(compose_with_j(e.ctx, lambda), lambda, e.tol);
    Json lhs, rhs;
    lhs["left_invariant"] = invariant;
    rhs["fixed_by_j"] = fixed;
    return truth(invariant == fixed, lhs, rhs);
  });
  b.add(kM8, "M8.invariant_measures_lift_and_return", {iQ}, [](const auto& e) {
    auto lifted = lift_measure(e.ctx, e.mq(0));
    return all({member(e, lifted, SpaceTag::kMInvGroup), same(e, th_measure(e.ctx, lifted), e.mq(0))});
  });
  b.add(kM8, "M8.pushforward_of_left_invariant", {lG},
        [](const auto& e) { return member(e, th_measure(e.ctx, e.mg(0)), SpaceTag::kMInvGH); });
}

void add_n(Builder& b) {
  using enum CheckId;
  constexpr Scope normal = Scope::kNormalOnly;
  b.add(kN1, "N1.quotient_measure_convolution", {mQ, mQ}, [](const auto& e) {
    return same(e, conv_coset_measures(e.ctx, e.mq(0), e.mq(1)), quotient_group_oracle(e.ctx, e.mq(0), e.mq(1)));
  }, normal);
  b.add(kN1, "N1.quotient_measure_involution", {mQ}, [](const auto& e) {
    auto q = quotient_group(e.ctx);
    return same(e, inv_coset_measure(e.ctx, e.mq(0)), on_cosets(e.ctx, inv_g_measure(*q, on_group(*q, e.mq(0)))));
  }, normal);
  b.add(kN1, "N1.quotient_function_convolution", {fQ, fQ}, [](const auto& e) {
    auto q = quotient_group(e.ctx);
    HaarStructure haar_q(e.haar().coset_weight(), 1);
    return same(e, conv_coset_functions(e.ctx, e.fq(0), e.fq(1)),
                on_cosets(e.ctx, conv_g_functions(*q, haar_q, on_group(*q, e.fq(0)), on_group(*q, e.fq(1)))));
  }, normal);
  b.add(kN1, "N1.quotient_function_involution", {fQ}, [](const auto& e) {
    auto q = quotient_group(e.ctx);
    return same(e, inv_coset_function(e.ctx, e.fq(0)), on_cosets(e.ctx, inv_g_function(*q, on_group(*q, e.fq(0)))));
  }, normal);
  b.add(kN1, "N1.j_is_identity", {fQ},
        [](const auto& e) { return same(e, j_function(e.ctx, e.fq(0)), e.fq(0)); }, normal);
  b.add(kN1, "N1.every_measure_invariant", {mQ},
        [](const auto& e) { return member(e, e.mq(0), SpaceTag::kMInvGH); }, normal);
  b.add(kN1, "N1.right_invariant_are_left_invariant", {rG},
        [](const auto& e) { return member(e, e.mg(0), SpaceTag::kMInvGroup); }, normal);
  b.add(kN1, "N1.left_invariant_are_right_invariant", {lG},
        [](const auto& e) { return member(e, e.mg(0), SpaceTag::kMGroup); }, normal);
}

std::vector<Identity> build() {
  std::vector<Identity> out;
  Builder b(out);
  add_w(b);
  add_t(b);
  add_j(b);
  add_f(b);
  add_m(b);
  add_n(b);
  add_g(b);
  add_r(b);
  return out;
}

}  // namespace

bool is_measure(OperandKind kind) {
  switch (kind) {
    case OperandKind::kMeasureG:
    case OperandKind::kMeasureGH:
    case OperandKind::kInvariantMeasureGH:
    case OperandKind::kLeftInvariantG:
    case OperandKind::kRightInvariantG:
      return true;
    default:
      return false;
  }
}

Space space_of(OperandKind kind, const TransferContext& ctx) {
  switch (kind) {
    case OperandKind::kFunctionG:
    case OperandKind::kMeasureG:
    case OperandKind::kLeftInvariantG:
    case OperandKind::kRightInvariantG:
      return ctx.group_space();
    default:
      return ctx.coset_space();
  }
}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> identities = build();
  return identities;
}

const Identity& find_identity(std::string_view name) {
  for (const auto& id : registry()) {
    if (id.name == name) return id;
  }
  throw Error(ErrorCode::kUnknownCheck, "no identity named '" + std::string(name) + "'");
}

bool applicable(const Identity& id, const TransferContext& ctx) {
  switch (id.scope) {
    case Scope::kAlways: return true;
    case Scope::kNormalOnly: return ctx.subgroup_is_normal();
    case Scope::kNonNormalOnly: return !ctx.subgroup_is_normal();
    case Scope::kNontrivialSubgroup: return ctx.subgroup().order() > 1;
  }
  return true;
}

std::string scope_reason(Scope scope) {
  switch (scope) {
    case Scope::kNormalOnly: return "H not normal";
    case Scope::kNonNormalOnly: return "H normal";
    case Scope::kNontrivialSubgroup: return "H trivial";
    case Scope::kAlways: break;
  }
  return "";
}

}  // namespace cosetalg::verify
