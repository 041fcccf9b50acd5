use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use super::*;
use crate::fixtures::*;
use crate::poset::build_poset;

fn check(g: &Group, p: u64, claim: Claim) -> Verdict {
    Analysis::new(g, "g", p).unwrap().run(claim).unwrap()
}

#[test]
fn brown_examples() {
    let v = check(&a5(), 2, Claim::Brown);
    assert_eq!((v.status, v.get("chi"), v.get("modulus")), (Status::Verified, Some("5"), Some("4")));
    let v = check(&a5(), 5, Claim::Brown);
    assert_eq!((v.status, v.get("chi")), (Status::Verified, Some("6")));
    let v = check(&symmetric(4), 2, Claim::Brown);
    assert_eq!((v.status, v.get("chi")), (Status::Verified, Some("1")));
    assert!(Analysis::new(&a5(), "a5", 7).unwrap().run(Claim::Brown).is_err());
}

#[test]
fn quillen_examples() {
    let v = check(&a5(), 2, Claim::Quillen);
    assert_eq!(v.status, Status::Verified);
    assert_eq!((v.get("homology"), v.get("prank3"), v.get("direction")), (Some("H0=Z^4"), Some("yes"), Some("op-trivial")));
    let v = check(&symmetric(4), 2, Claim::Quillen);
    assert_eq!((v.status, v.get("direction")), (Status::Verified, Some("op-nontrivial")));
    let v = check(&c3xs3(), 3, Claim::Quillen);
    assert_eq!((v.status, v.get("op_order")), (Status::Verified, Some("9")));
}

#[test]
fn invariance_examples() {
    for (g, p) in [(a5(), 2), (symmetric(4), 2), (psl2_8(), 3)] {
        let v = check(&g, p, Claim::Invariance);
        assert_eq!(v.status, Status::Verified, "{v:?}");
    }
    assert_eq!(check(&psl2_8(), 3, Claim::Invariance).get("Sp"), Some("H0=Z^27"));
}

#[test]
fn capacity_becomes_skip() {
    let limits = crate::group::Limits { sylow_enumeration: 2, ..Default::default() };
    let g = Group::with_limits(5, a5().generators().to_vec(), limits).unwrap();
    let v = check(&g, 2, Claim::Brown);
    assert_eq!(v.status, Status::SkippedCapacity);
}

#[test]
fn solvable_family_of_a5() {
    let g = a5();
    let slv = solvable_family(&g).unwrap();
    assert_eq!(slv.len(), 58);
    let mut orders: Vec<usize> = slv.members().iter().map(|h| h.order()).collect();
    orders.dedup();
    assert_eq!(orders, [1, 2, 3, 4, 5, 6, 10, 12]);
    assert_eq!(is_separating_family(&g, &slv).unwrap(), None);
    let all = Family::new(&g, "all", g.subgroup_lattice().unwrap()).unwrap();
    assert_eq!(is_separating_family(&g, &all).unwrap(), Some(SeparationFailure::ContainsWhole));
    let mut two: Vec<Subgroup> = build_poset(&g, 2, crate::PosetKind::Sp).unwrap().elements().to_vec();
    two.push(Subgroup::trivial());
    let two = Family::new(&g, "S2", two).unwrap();
    match is_separating_family(&g, &two).unwrap() {
        Some(SeparationFailure::NotExtensionClosed { h, k }) => {
            assert!(h.is_trivial());
            assert_eq!(k.order(), 3);
        }
        other => panic!("{other:?}"),
    }
    let s3 = s3();
    assert_eq!(solvable_family(&s3).unwrap().len(), 6);
    // not closed under conjugation
    let one = g.subgroup(&[p("(1 2)(3 4)", 5)]).unwrap();
    assert!(Family::new(&g, "x", alloc::vec![one]).is_err());
}

#[test]
fn os_indices_of_a5() {
    let g = a5();
    let slv = solvable_family(&g).unwrap();
    let (i1, chi, index) = os_index_parts(&g, &slv, &Subgroup::trivial()).unwrap();
    assert_eq!((chi, index), (-59, 60));
    assert!(i1.is_one());
    for h in slv.maximal() {
        assert_eq!(os_index(&g, &slv, h).unwrap(), BigRational::one());
        assert_eq!(g.normalizer(h).unwrap(), *h);
    }
    let mut maximal_orders: Vec<usize> = slv.maximal().iter().map(|h| h.order()).collect();
    maximal_orders.dedup();
    assert_eq!(maximal_orders, [6, 10, 12]);
    let outside = g.whole().unwrap();
    assert!(os_index(&g, &slv, &outside).is_err());
    let ga = GroupAnalysis::new(&g, "A5");
    let v = ga.run(Claim::OsIndex, true).unwrap();
    assert_eq!((v.status, v.get("i1")), (Status::Verified, Some("1")));
    assert_eq!(ga.run(Claim::Separating, false).unwrap().status, Status::Verified);
}

#[test]
fn normal_stabilizers() {
    let s4 = symmetric(4);
    let sp = build_poset(&s4, 2, crate::PosetKind::Sp).unwrap();
    let r = normal_stabilizer_search(&s4, &sp).unwrap();
    assert!(r.acyclic && r.dimension == 2);
    let (chain, stab) = r.found.unwrap();
    assert_eq!(chain.len(), 1);
    assert_eq!((sp.elements()[chain[0] as usize].order(), stab.order()), (4, 24));
    let g = c3xs3();
    let ap = build_poset(&g, 3, crate::PosetKind::Ap).unwrap();
    // the central C3 factor is the first G-fixed vertex
    let (chain, stab) = normal_stabilizer_search(&g, &ap).unwrap().found.unwrap();
    assert_eq!((chain.len(), stab.order()), (1, 18));
    let a = a5();
    let bp = build_poset(&a, 2, crate::PosetKind::Bp).unwrap();
    let r = normal_stabilizer_search(&a, &bp).unwrap();
    assert!(!r.acyclic && r.found.is_none());
    assert!(normal_stabilizer_search(&a, &bp.restrict(&[0], crate::PosetKind::Custom)).is_err());
    let v = check(&s4, 2, Claim::NormalStab);
    assert_eq!((v.status, v.get("applicable")), (Status::Verified, Some("yes")));
    let v = check(&a, 2, Claim::NormalStab);
    assert_eq!((v.status, v.get("applicable")), (Status::Verified, Some("no")));
}

#[test]
fn retract_and_lemmaprank_verdicts() {
    let g = c3xs3();
    let a = Analysis::new(&g, "C3xS3", 3).unwrap();
    let h = g.subgroup(&[p("(4 5 6)", 6), p("(4 5)", 6)]).unwrap();
    let v = retract_check(&a, "S3", &h).unwrap();
    assert_eq!((v.claim.as_str(), v.status, v.get("hypothesis")), ("retract:S3", Status::Verified, Some("holds")));
    assert_eq!(v.get("homology_g"), v.get("homology_h"));
    let v = lemmaprank_normal_check(&a, "S3", &h).unwrap();
    assert_eq!((v.status, v.get("rank"), v.get("formula")), (Status::Verified, Some("2"), Some("2")));
    let g5 = a5();
    let a = Analysis::new(&g5, "A5", 2).unwrap();
    let v = retract_check(&a, "1", &Subgroup::trivial()).unwrap();
    assert_eq!(v.get("hypothesis"), Some("fails"));
    assert!(v.get("violating").unwrap().starts_with("order 2"));
    for (g, p) in [(c3xs3(), 3), (symmetric(4), 2), (a5_wreath_like(), 2)] {
        let v = check(&g, p, Claim::Lemmaprank);
        assert_eq!(v.status, Status::Verified, "{v:?}");
    }
}
