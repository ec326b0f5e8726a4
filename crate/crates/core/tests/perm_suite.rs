//! Whole-group checks for the symmetric-group engine: the commuting
//! consequence of algebraic disjointness, witness soundness, and the frozen
//! small-degree verdicts.

use rubin_core::perm::{is_alg_disjoint, Perm, SymmetricGroup};

#[test]
fn alg_disjointness_implies_commuting_over_all_of_s4() {
    // If g is algebraically disjoint from f then [f,g] = 1: otherwise h = g
    // itself defeats the definition.
    let s4 = SymmetricGroup::new(4).unwrap();
    let elements = s4.elements().unwrap();
    for f in &elements {
        for g in &elements {
            let report = is_alg_disjoint(g, f, &s4).unwrap();
            if report.verdict {
                assert!(
                    f.commutes_with(g).unwrap(),
                    "verdict true but [f,g] ≠ 1 for f={f}, g={g}"
                );
            }
        }
    }
}

#[test]
fn alg_disjointness_implies_commuting_on_s5_class_representatives() {
    let s5 = SymmetricGroup::new(5).unwrap();
    let reps: Vec<Perm> = [
        "id",
        "(1 2)",
        "(1 2)(3 4)",
        "(1 2 3)",
        "(1 2 3)(4 5)",
        "(1 2 3 4)",
        "(1 2 3 4 5)",
    ]
    .iter()
    .map(|s| Perm::parse(s, 5).unwrap())
    .collect();
    for f in &reps {
        for g in &reps {
            let report = is_alg_disjoint(g, f, &s5).unwrap();
            if report.verdict {
                assert!(f.commutes_with(g).unwrap());
            }
        }
    }
}

#[test]
fn s4_exponent_divides_twelve() {
    let s4 = SymmetricGroup::new(4).unwrap();
    for g in s4.elements().unwrap() {
        assert!(g.pow(12).is_identity());
    }
}

#[test]
fn witnesses_recheck_independently_across_s4() {
    let s4 = SymmetricGroup::new(4).unwrap();
    let f = Perm::parse("(1 2)(3 4)", 4).unwrap();
    let g = Perm::parse("(1 2)", 4).unwrap();
    let report = is_alg_disjoint(&g, &f, &s4).unwrap();
    assert!(report.verdict);
    // Every h with [f,h] ≠ 1 is covered.
    let noncommuting = s4
        .elements()
        .unwrap()
        .into_iter()
        .filter(|h| !f.commutator(h).unwrap().is_identity())
        .count();
    assert_eq!(report.witness_table.len(), noncommuting);
    for (h, (f1, f2)) in &report.witness_table {
        let inner = f2.commutator(h).unwrap();
        let outer = f1.commutator(&inner).unwrap();
        assert!(!outer.is_identity());
        assert!(outer.commutes_with(&g).unwrap());
        assert!(f1.commutes_with(&g).unwrap());
        assert!(f2.commutes_with(&g).unwrap());
    }
}

#[test]
fn transposition_self_disjointness_by_degree() {
    // n = 3 and n = 4 were decided once by the exhaustive search and are
    // frozen here; n = 2 and n ≥ 5 hold.
    let expected = [(2, true), (3, false), (4, false), (5, true), (6, true)];
    for (n, verdict) in expected {
        let group = SymmetricGroup::new(n).unwrap();
        let t = Perm::parse("(1 2)", n).unwrap();
        let report = is_alg_disjoint(&t, &t, &group).unwrap();
        assert_eq!(report.verdict, verdict, "degree {n}");
    }
}

#[test]
fn frozen_counterexamples_for_small_degrees() {
    let s3 = SymmetricGroup::new(3).unwrap();
    let t3 = Perm::parse("(1 2)", 3).unwrap();
    let report = is_alg_disjoint(&t3, &t3, &s3).unwrap();
    assert_eq!(report.counterexample_h, Some(Perm::parse("(2 3)", 3).unwrap()));

    let s4 = SymmetricGroup::new(4).unwrap();
    let t4 = Perm::parse("(1 2)", 4).unwrap();
    let report = is_alg_disjoint(&t4, &t4, &s4).unwrap();
    assert_eq!(
        report.counterexample_h,
        Some(Perm::parse("(1 3)(2 4)", 4).unwrap())
    );
}
