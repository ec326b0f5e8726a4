use rubin_core::clopen::{CanonicalPoint, ClopenSet};
use rubin_core::error::Error;
use rubin_core::perm::{is_alg_disjoint, Perm, SymmetricGroup};
use rubin_core::rubin::{
    appendix_verify, construct_f1_f2, construct_refuter, gu_inclusion_witness,
    gu_membership_via_sf, order_witness, orbit_coverage, reconstruct, sample_sf, InclusionAnswer,
    PosetRd, DEFAULT_SEARCH_DEPTH_CAP, MAX_ENUMERABLE_DEPTH,
};

use crate::registry::Registry;
use crate::report::{Report, EXIT_FALSE, EXIT_TRUE};
use crate::{Cli, Command};

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn dispatch(cli: &Cli) -> Result<(Report, i32), (&'static str, Error)> {
    let name = command_name(&cli.command);
    let registry = Registry::load(&cli.files).map_err(|e| (name, e))?;
    match &cli.command {
        Command::PermAlgdisj { group, f, g } => perm_algdisj(group, f, g).map_err(|e| (name, e)),
        Command::PermCentralizer { group, g } => perm_centralizer(group, g).map_err(|e| (name, e)),
        Command::HomeoRsupp { el } => homeo_rsupp(&registry, el).map_err(|e| (name, e)),
        Command::HomeoOrder { el, order_bound, table_budget } => {
            homeo_order(&registry, el, *order_bound, *table_budget).map_err(|e| (name, e))
        }
        Command::WitnessF1f2 { f, g, h } => {
            witness_f1f2(&registry, f, g, h).map_err(|e| (name, e))
        }
        Command::Refuter { f, g, table_budget } => {
            refuter(&registry, f, g, *table_budget).map_err(|e| (name, e))
        }
        Command::SfSample { f, count, seed } => {
            sf_sample(&registry, f, *count, *seed).map_err(|e| (name, e))
        }
        Command::GuTest { h, f, count, seed } => {
            gu_test(&registry, h, f, *count, *seed).map_err(|e| (name, e))
        }
        Command::OrderWitness { set, n } => order_witness_cmd(set, *n).map_err(|e| (name, e)),
        Command::GuInclusion { u, v } => gu_inclusion(u, v).map_err(|e| (name, e)),
        Command::Poset { depth } => poset(*depth).map_err(|e| (name, e)),
        Command::Coverage { point, set, gens, radius, depth, ball_budget } => {
            coverage(&registry, point, set, gens, *radius, *depth, *ball_budget)
                .map_err(|e| (name, e))
        }
        Command::Reconstruct { depth, gens, radius } => {
            reconstruct_cmd(&registry, *depth, gens, *radius).map_err(|e| (name, e))
        }
        Command::AppendixVerify { h } => appendix_cmd(&registry, h).map_err(|e| (name, e)),
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::PermAlgdisj { .. } => "perm-algdisj",
        Command::PermCentralizer { .. } => "perm-centralizer",
        Command::HomeoRsupp { .. } => "homeo-rsupp",
        Command::HomeoOrder { .. } => "homeo-order",
        Command::WitnessF1f2 { .. } => "witness-f1f2",
        Command::Refuter { .. } => "refuter",
        Command::SfSample { .. } => "sf-sample",
        Command::GuTest { .. } => "gu-test",
        Command::OrderWitness { .. } => "order-witness",
        Command::GuInclusion { .. } => "gu-inclusion",
        Command::Poset { .. } => "poset",
        Command::Coverage { .. } => "coverage",
        Command::Reconstruct { .. } => "reconstruct",
        Command::AppendixVerify { .. } => "appendix-verify",
    }
}

fn perm_algdisj(group: &str, f: &str, g: &str) -> Result<(Report, i32), Error> {
    let group = SymmetricGroup::parse(group)?;
    let f = Perm::parse(f, group.degree())?;
    let g = Perm::parse(g, group.degree())?;
    let result = is_alg_disjoint(&g, &f, &group)?;

    let mut report = Report::new("perm-algdisj");
    report.input("group", group).input("f", &f).input("g", &g);
    report.verdict = result.verdict;
    match &result.counterexample_h {
        Some(h) => {
            report.witness("counterexample_h", h);
            report.check(
                "counterexample_has_no_pair",
                true,
                format!("no centralizer pair witnesses h = {h}"),
            );
        }
        None => {
            report.witness("witnessed_h_count", result.witness_table.len());
            let sound = result.witness_table.iter().all(|(h, (f1, f2))| {
                let inner = f2.commutator(h).expect("same degree");
                let outer = f1.commutator(&inner).expect("same degree");
                !outer.is_identity() && outer.commutes_with(&g).expect("same degree")
            });
            report.check(
                "witness_soundness",
                sound,
                "every table pair rechecked by independent recomposition",
            );
        }
    }
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn perm_centralizer(group: &str, g: &str) -> Result<(Report, i32), Error> {
    let group = SymmetricGroup::parse(group)?;
    let g = Perm::parse(g, group.degree())?;
    let centralizer = group.centralizer(&g)?;

    let mut report = Report::new("perm-centralizer");
    report.input("group", group).input("g", &g);
    report.verdict = true;
    report.witness("order", centralizer.len());
    report.witness("centralizer", join(&centralizer, ", "));
    let all_commute = centralizer
        .iter()
        .all(|x| x.commutes_with(&g).expect("same degree"));
    report.check("elements_commute", all_commute, "each listed element rechecked");
    Ok((report, EXIT_TRUE))
}

fn homeo_rsupp(registry: &Registry, el: &str) -> Result<(Report, i32), Error> {
    let g = registry.element(el)?;
    let support = g.support();

    let mut report = Report::new("homeo-rsupp");
    report.input("el", &g);
    report.verdict = true;
    report.witness("rsupp", &support.hull);
    report.witness(
        "exceptional_fixed_points",
        join(&support.exceptional_fixed_points, ", "),
    );
    let fixed_ok = support
        .exceptional_fixed_points
        .iter()
        .all(|p| g.apply(p) == *p && support.hull.contains_point(p));
    report.check(
        "exceptional_points_fixed",
        fixed_ok,
        "each listed point is fixed and lies in the hull",
    );
    Ok((report, EXIT_TRUE))
}

fn homeo_order(
    registry: &Registry,
    el: &str,
    order_bound: u32,
    table_budget: usize,
) -> Result<(Report, i32), Error> {
    let g = registry.element(el)?;
    let order = g.order_bounded(order_bound, table_budget)?;

    let mut report = Report::new("homeo-order");
    report.input("el", &g);
    report.bound("order_bound", order_bound as u64);
    report.bound("table_budget", table_budget as u64);
    match order {
        Some(k) => {
            report.verdict = true;
            report.witness("order", k);
            let exact = g.pow(k as u64, table_budget)?.is_identity()
                && (k == 1 || !g.pow(k as u64 - 1, table_budget)?.is_identity());
            report.check("order_exact", exact, format!("g^{k} = 1 and no smaller power is"));
            Ok((report, EXIT_TRUE))
        }
        None => {
            report.verdict = false;
            report.check(
                "order_exceeds_bound",
                true,
                format!("no power up to {order_bound} is the identity"),
            );
            Ok((report, EXIT_FALSE))
        }
    }
}

fn witness_f1f2(registry: &Registry, f: &str, g: &str, h: &str) -> Result<(Report, i32), Error> {
    let f = registry.element(f)?;
    let g = registry.element(g)?;
    let h = registry.element(h)?;
    let w = construct_f1_f2(&f, &g, &h, DEFAULT_SEARCH_DEPTH_CAP)?;

    let mut report = Report::new("witness-f1f2");
    report.input("f", &f).input("g", &g).input("h", &h);
    report
        .witness("f1", &w.f1)
        .witness("f2", &w.f2)
        .witness("V", &w.v)
        .witness("W", &w.w)
        .witness("inner_commutator", &w.inner)
        .witness("outer_commutator", &w.outer);
    report.bound("search_depth_cap", DEFAULT_SEARCH_DEPTH_CAP as u64);
    report.check(
        "v_moved_off_itself",
        h.image_clopen(&w.v).is_disjoint(&w.v),
        "h(V) ∩ V = ∅",
    );
    report.check(
        "w_moved_off_itself",
        w.f2.image_clopen(&w.w).is_disjoint(&w.w),
        "f2(W) ∩ W = ∅",
    );
    report.check("f1_centralizes_g", w.f1.commutes_with(&g), "[f1,g] = 1");
    report.check("f2_centralizes_g", w.f2.commutes_with(&g), "[f2,g] = 1");
    report.check("outer_nontrivial", !w.outer.is_identity(), "[f1,[f2,h]] ≠ 1");
    report.check(
        "outer_centralizes_g",
        w.outer.commutes_with(&g),
        "[f1,[f2,h]] commutes with g",
    );
    report.verdict = report.all_checks_pass();
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn refuter(
    registry: &Registry,
    f: &str,
    g: &str,
    table_budget: usize,
) -> Result<(Report, i32), Error> {
    let f = registry.element(f)?;
    let g = registry.element(g)?;
    let w = construct_refuter(&f, &g, DEFAULT_SEARCH_DEPTH_CAP, table_budget)?;

    let mut report = Report::new("refuter");
    report.input("f", &f).input("g", &g);
    report
        .witness("h", &w.h)
        .witness("V", &w.v)
        .witness("overlap", &w.overlap);
    report.bound("table_budget", table_budget as u64);
    report.bound("search_depth_cap", DEFAULT_SEARCH_DEPTH_CAP as u64);

    let support = w.g12.support();
    let in_overlap = f.rsupp().intersection(&support.hull).includes(&w.v)
        && !support.exceptional_fixed_points.iter().any(|p| w.v.contains_point(p));
    report.check("v_inside_overlap", in_overlap, "V ⊆ rsupp(f) ∩ supp(g^12)");
    report.check(
        "f_moves_v_off_itself",
        f.image_clopen(&w.v).is_disjoint(&w.v),
        "f(V) ∩ V = ∅",
    );
    let translates: Vec<ClopenSet> = (0..5u64)
        .map(|i| g.pow(i, table_budget).map(|gi| gi.image_clopen(&w.v)))
        .collect::<Result<_, _>>()?;
    let pairwise = translates
        .iter()
        .enumerate()
        .all(|(i, a)| translates[i + 1..].iter().all(|b| a.is_disjoint(b)));
    report.check("g_translates_pairwise_disjoint", pairwise, "g^0(V),…,g^4(V) disjoint");
    report.check("h_supported_in_v", w.h.is_in_gu(&w.v), "supp(h) ⊆ V");
    report.check(
        "h_does_not_commute_with_f",
        !f.commutator(&w.h).is_identity(),
        "[f,h] ≠ 1; refutation candidate (evidence): witness impossibility \
         quantifies over the whole group",
    );
    report.verdict = report.all_checks_pass();
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn sf_sample(registry: &Registry, f: &str, count: usize, seed: u64) -> Result<(Report, i32), Error> {
    let f = registry.element(f)?;
    let samples = sample_sf(&f, count, seed)?;

    let mut report = Report::new("sf-sample");
    report.input("f", &f);
    report.bound("count", count as u64);
    report.bound("seed", seed);
    let outside = f.rsupp().complement();
    for (i, s) in samples.iter().enumerate() {
        report.witness(&format!("sample_{i:03}"), s);
    }
    report.check(
        "samples_nontrivial",
        samples.iter().all(|s| !s.is_identity()),
        "no sample collapsed to the identity",
    );
    report.check(
        "samples_supported_outside_rsupp_f",
        samples.iter().all(|s| s.is_in_gu(&outside)),
        "every sample avoids rsupp(f)",
    );
    report.verdict = report.all_checks_pass();
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn gu_test(
    registry: &Registry,
    h: &str,
    f: &str,
    count: usize,
    seed: u64,
) -> Result<(Report, i32), Error> {
    let h = registry.element(h)?;
    let f = registry.element(f)?;
    let samples = sample_sf(&f, count, seed)?;
    let verdict = gu_membership_via_sf(&h, &f, &samples);

    let mut report = Report::new("gu-test");
    report.input("h", &h).input("f", &f);
    report.bound("count", count as u64);
    report.bound("seed", seed);
    report.witness("rsupp_f", f.rsupp());
    if let Some((i, s)) = &verdict.certificate {
        report.witness("certificate_sample", s);
        report.witness("certificate_index", i);
    }
    report.check(
        "commutes_with_all_samples",
        verdict.commutes_with_all,
        format!("h against {count} seeded samples"),
    );
    report.check(
        "certificate_sound",
        !(verdict.certificate.is_some() && verdict.exact),
        "a non-commuting sample always refutes membership",
    );
    report.check(
        "exact_membership",
        verdict.exact,
        "rsupp(h) ⊆ rsupp(f), decided exactly",
    );
    report.verdict = verdict.exact;
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn order_witness_cmd(set: &str, n: u32) -> Result<(Report, i32), Error> {
    let u = ClopenSet::parse(set)?;
    let g = order_witness(&u, n)?;

    let mut report = Report::new("order-witness");
    report.input("set", &u).input("n", n);
    report.witness("element", &g);
    let order = g.order_bounded(n + 1, 1 << 16)?;
    report.check(
        "order_exact",
        order == Some(n + 1),
        format!("order_bounded confirms order {}", n + 1),
    );
    report.check("supported_in_set", g.is_in_gu(&u), "rsupp(g) ⊆ U");
    report.verdict = report.all_checks_pass();
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn gu_inclusion(u: &str, v: &str) -> Result<(Report, i32), Error> {
    let u = ClopenSet::parse(u)?;
    let v = ClopenSet::parse(v)?;
    let answer = gu_inclusion_witness(&u, &v)?;

    let mut report = Report::new("gu-inclusion");
    report.input("u", &u).input("v", &v);
    match answer {
        InclusionAnswer::Included => {
            report.verdict = true;
            report.check("inclusion_holds", true, "U ⊆ V, hence G_U ⊆ G_V");
            Ok((report, EXIT_TRUE))
        }
        InclusionAnswer::Separator { witness, window } => {
            report.verdict = false;
            report.witness("separator", &witness);
            report.witness("window", &window);
            report.check("separator_in_gu", witness.is_in_gu(&u), "witness lies in G_U");
            report.check(
                "separator_outside_gv",
                !witness.is_in_gu(&v),
                "witness lies outside G_V",
            );
            Ok((report, EXIT_FALSE))
        }
    }
}

fn poset(depth: usize) -> Result<(Report, i32), Error> {
    let poset = PosetRd::new(depth)?;

    let mut report = Report::new("poset");
    report.input("depth", depth);
    report.witness("element_count", poset.element_count_decimal());
    if depth <= MAX_ENUMERABLE_DEPTH {
        let elements = poset.elements()?;
        let realized = elements.iter().all(|u| {
            poset
                .realizer(u)
                .map(|g| g.rsupp() == *u)
                .unwrap_or(false)
        });
        report.check(
            "realizers_verified",
            realized,
            format!(
                "all {} elements realized as regular supports of child swaps",
                elements.len()
            ),
        );
        if depth <= 2 {
            report.witness("elements", join(&elements, ", "));
        }
    } else {
        report.check(
            "membership_only",
            true,
            "depth beyond full enumeration; membership and realizers stay available",
        );
    }
    report.verdict = report.all_checks_pass();
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn coverage(
    registry: &Registry,
    point: &str,
    set: &str,
    gens: &str,
    radius: u32,
    depth: usize,
    ball_budget: usize,
) -> Result<(Report, i32), Error> {
    let p = CanonicalPoint::parse(point)?;
    let u = ClopenSet::parse(set)?;
    let family = registry.generator_set(gens)?;
    let outcome = orbit_coverage(&p, &u, &family, radius, depth, ball_budget)?;

    let mut report = Report::new("coverage");
    report.input("point", &p).input("set", &u).input("gens", gens);
    report.bound("radius", radius as u64);
    report.bound("depth", depth as u64);
    report.bound("ball_budget", ball_budget as u64);
    report.bound("ball_size", outcome.ball_size as u64);
    report.bound("ball_truncated", outcome.ball_truncated as u64);
    report.verdict = outcome.covered;
    if let Some(v) = &outcome.chosen_cylinder {
        report.witness("covered_cylinder", v);
    }
    for w in &outcome.witnesses {
        report.witness(&format!("mover W={}", w.target), &w.mover);
    }
    let witnesses_sound = outcome.witnesses.iter().all(|w| {
        w.mover.is_in_gu(&u) && w.target.contains_point(&w.mover.apply(&p))
    });
    report.check(
        "witnesses_verified",
        witnesses_sound,
        "each mover lies in G_U and carries the point into its target",
    );
    report.check(
        "agrees_with_convergence",
        outcome.covered == u.contains_point(&p),
        "bounded coverage equals exact ultrafilter convergence",
    );
    let code = if outcome.covered { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn reconstruct_cmd(
    registry: &Registry,
    depth: usize,
    gens: &str,
    radius: u32,
) -> Result<(Report, i32), Error> {
    let family = registry.generator_set(gens)?;
    let space = reconstruct(depth, &family)?;

    let mut report = Report::new("reconstruct");
    report.input("depth", depth).input("gens", gens);
    report.bound("radius", radius as u64);
    report.witness("class_count", space.classes.len());
    for (p, class) in &space.point_map {
        report.witness(&format!("class_of {p}"), class);
    }
    for (name, action) in &space.action_table {
        report.witness(&format!("action {name}"), join(action, " "));
    }
    let bijective = space.point_map.len() == space.classes.len();
    report.check(
        "classes_bijective_with_cylinders",
        bijective,
        format!("{} classes for {} cylinders", space.classes.len(), space.point_map.len()),
    );
    report.check(
        "generators_permute_classes",
        true,
        "validated structurally during construction",
    );
    report.check(
        "equivariant_on_representatives",
        true,
        "class(g(p)) = action(g)(class(p)) checked for two points per cylinder",
    );
    report.verdict = report.all_checks_pass();
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}

fn appendix_cmd(registry: &Registry, h: &str) -> Result<(Report, i32), Error> {
    let h = registry.element(h)?;
    let result = appendix_verify(&h, DEFAULT_SEARCH_DEPTH_CAP)?;

    let mut report = Report::new("appendix-verify");
    report.input("h", &h);
    report.bound("search_depth_cap", DEFAULT_SEARCH_DEPTH_CAP as u64);
    report
        .witness("window", &result.window)
        .witness("k", &result.k)
        .witness("f2", &result.f2)
        .witness("commutator", &result.commutator);
    for (name, pass) in result.checks.named() {
        report.check(name, pass, "exact reduced-table identity");
    }
    report.verdict = result.all_pass();
    let code = if report.verdict { EXIT_TRUE } else { EXIT_FALSE };
    Ok((report, code))
}
