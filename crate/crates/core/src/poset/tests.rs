use alloc::vec::Vec;

use super::*;
use crate::fixtures::*;
use crate::group::Group;

fn orders(x: &SubgroupPoset) -> Vec<usize> {
    x.elements().iter().map(|h| h.order()).collect()
}

fn count(x: &SubgroupPoset, order: usize) -> usize {
    orders(x).into_iter().filter(|&o| o == order).count()
}

/// p-subgroups from the full subgroup lattice, an independent enumeration.
fn lattice_p_subgroups(g: &Group, p: u64) -> Vec<Subgroup> {
    g.subgroup_lattice()
        .unwrap()
        .into_iter()
        .filter(|h| !h.is_trivial() && crate::group::is_p_power(h.order() as u64, p))
        .collect()
}

#[test]
fn a5_posets() {
    let g = a5();
    let sp = build_poset(&g, 2, PosetKind::Sp).unwrap();
    assert_eq!((sp.len(), count(&sp, 2), count(&sp, 4)), (20, 15, 5));
    assert_eq!(sp.covers().len(), 15);
    assert_eq!(sp.height(), 1);
    let bp = build_poset(&g, 2, PosetKind::Bp).unwrap();
    assert_eq!(orders(&bp), [4; 5]);
    let isp = i_reduction(&g, &sp).unwrap();
    assert_eq!((isp.len(), isp.height(), isp.kind()), (5, 0, PosetKind::ISp));
    assert_eq!(p_rank(&g, 2).unwrap().rank, 2);
    let fixed = fixed_subposet(&g, &sp, &g.whole().unwrap()).unwrap();
    assert!(fixed.is_empty());
    let same = fixed_subposet(&g, &sp, &Subgroup::trivial()).unwrap();
    assert_eq!(same.elements(), sp.elements());
    assert!(sp.is_invariant() && bp.is_invariant() && isp.is_invariant());
}

#[test]
fn s4_posets() {
    let g = symmetric(4);
    let sp = build_poset(&g, 2, PosetKind::Sp).unwrap();
    assert_eq!(sp.height(), 2);
    let bp = build_poset(&g, 2, PosetKind::Bp).unwrap();
    assert_eq!(orders(&bp), [4, 8, 8, 8]);
    assert_eq!(bp.relation().above(0), [1, 2, 3]);
    let isp = i_reduction(&g, &sp).unwrap();
    assert_eq!(isp.elements(), bp.elements());
    assert_eq!(isp.height(), 1);
    let fixed = fixed_subposet(&g, &sp, &g.whole().unwrap()).unwrap();
    assert_eq!(fixed.len(), 1);
    assert_eq!(fixed.elements()[0], bp.elements()[0]);
    assert_eq!(fixed.kind(), PosetKind::Fixed);
}

#[test]
fn against_lattice_oracle() {
    for (g, primes) in [
        (symmetric(4), &[2u64, 3][..]),
        (a5(), &[2, 3, 5]),
        (c3xs3(), &[2, 3]),
        (d8(), &[2]),
        (c3_cubed_by_c3(), &[3]),
        (symmetric(5), &[2, 3]),
    ] {
        for &p in primes {
            let mut oracle = lattice_p_subgroups(&g, p);
            oracle.sort();
            let sp = build_poset(&g, p, PosetKind::Sp).unwrap();
            assert_eq!(sp.elements(), oracle.as_slice());
            let mut ea: Vec<Subgroup> =
                oracle.iter().filter(|h| g.is_elementary_abelian(h, p).unwrap()).cloned().collect();
            ea.sort();
            let ap = build_poset(&g, p, PosetKind::Ap).unwrap();
            assert_eq!(ap.elements(), ea.as_slice());
            let rad: Vec<Subgroup> = oracle
                .iter()
                .filter(|q| g.p_core_of(&g.normalizer_elementwise(&g.whole().unwrap(), q).unwrap(), p).unwrap() == **q)
                .cloned()
                .collect();
            let bp = build_poset(&g, p, PosetKind::Bp).unwrap();
            assert_eq!(bp.elements(), rad.as_slice());
            // relation is exactly inclusion
            for i in 0..sp.len() {
                for j in 0..sp.len() {
                    let incl = i != j && sp.elements()[i].is_subgroup_of(&sp.elements()[j]);
                    assert_eq!(sp.relation().less(i, j), incl);
                }
            }
            check_structural(&g, p, &sp, &ap, &bp);
        }
    }
}

fn check_structural(g: &Group, p: u64, sp: &SubgroupPoset, ap: &SubgroupPoset, bp: &SubgroupPoset) {
    let isp = i_reduction(g, sp).unwrap();
    let iap = i_reduction(g, ap).unwrap();
    for x in [sp, ap, bp, &isp, &iap] {
        assert!(x.is_invariant(), "{}", x.summary());
    }
    assert!(ap.elements().iter().all(|e| sp.index_of(e).is_some()));
    assert!(bp.elements().iter().all(|e| isp.index_of(e).is_some()));
    assert!(isp.elements().iter().all(|e| sp.index_of(e).is_some()));
    assert_eq!(i_reduction(g, &isp).unwrap().elements(), isp.elements());
    assert_eq!(i_reduction(g, &iap).unwrap().elements(), iap.elements());
    assert_eq!(p_rank(g, p).unwrap().rank as i64, ap.height() + 1);
}

#[test]
fn prime_not_dividing_order() {
    let x = build_poset(&a4(), 5, PosetKind::Sp).unwrap();
    assert!(x.is_empty());
    assert_eq!(x.height(), -1);
    assert_eq!(p_rank(&a4(), 5).unwrap().rank, 0);
    assert!(build_poset(&a4(), 4, PosetKind::Sp).is_err());
    assert!(build_poset(&a4(), 2, PosetKind::ISp).is_err());
}

#[test]
fn capacity_bound() {
    let limits = crate::group::Limits { sylow_enumeration: 4, ..Default::default() };
    let g = Group::with_limits(4, symmetric(4).generators().to_vec(), limits).unwrap();
    let err = build_poset(&g, 2, PosetKind::Sp).unwrap_err();
    assert!(err.is_capacity());
}

#[test]
fn ranks() {
    assert_eq!(p_rank(&psl2_8(), 3).unwrap().rank, 1);
    let g = a5_wreath_like();
    let w = p_rank(&g, 2).unwrap();
    assert_eq!(w.rank, 4);
    assert_eq!(w.witness.order(), 16);
    assert!(g.is_elementary_abelian(&w.witness, 2).unwrap());
    let n = g.subgroup(&[p("(1 2 3 4 5)", 10), p("(3 4 5)", 10), p("(6 7 8 9 10)", 10), p("(8 9 10)", 10)]).unwrap();
    assert_eq!(lemmaprank_eval(&g, &n, 2).unwrap().rank, 4);
}

#[test]
fn lemmaprank_examples() {
    let g = c3xs3();
    let n = g.subgroup(&[p("(4 5 6)", 6), p("(4 5)", 6)]).unwrap();
    let w = lemmaprank_eval(&g, &n, 3).unwrap();
    assert_eq!(w.rank, 2);
    let (a, c_rank) = w.decomposition.clone().unwrap();
    assert_eq!((a.order(), c_rank), (3, 1));
    assert!(g.is_elementary_abelian(&w.witness, 3).unwrap());
    assert_eq!(w.witness.order(), 9);
    let trivial = lemmaprank_eval(&g, &Subgroup::trivial(), 3).unwrap();
    assert_eq!(trivial.rank, 2);
    let not_normal = g.subgroup(&[p("(4 5)", 6)]).unwrap();
    assert!(matches!(lemmaprank_eval(&g, &not_normal, 2), Err(crate::Error::InvalidArgument(_))));
    for g in [symmetric(4), a5(), c3xs3(), d8(), c3_cubed_by_c3()] {
        for p in g.prime_divisors() {
            let rank = p_rank(&g, p).unwrap().rank;
            for n in g.normal_subgroups().unwrap() {
                assert_eq!(lemmaprank_eval(&g, &n, p).unwrap().rank, rank);
            }
        }
    }
}

#[test]
fn retract_examples() {
    let g = c3xs3();
    let h = g.subgroup(&[p("(4 5 6)", 6), p("(4 5)", 6)]).unwrap();
    let out = retract_reduce(&g, &h, 3).unwrap();
    assert!(out.hypothesis_holds);
    assert_eq!(out.schedule.len(), 3);
    assert_eq!(out.links.len(), 3);
    assert_eq!(out.reduced.as_ref().unwrap().len(), 1);
    let a = a5();
    let out = retract_reduce(&a, &Subgroup::trivial(), 2).unwrap();
    assert!(!out.hypothesis_holds);
    assert_eq!(out.violating.unwrap().order(), 2);
    let whole = a.whole().unwrap();
    let out = retract_reduce(&a, &whole, 2).unwrap();
    assert!(out.hypothesis_holds && out.schedule.is_empty());
    let ap = build_poset(&a, 2, PosetKind::Ap).unwrap();
    assert_eq!(out.reduced.unwrap().elements(), ap.elements());
}

#[test]
fn custom_posets() {
    let g = a5();
    let sp = build_poset(&g, 2, PosetKind::Sp).unwrap();
    let one = SubgroupPoset::from_subgroups(&g, 2, PosetKind::Custom, sp.elements()[15..16].to_vec()).unwrap();
    assert_eq!(i_reduction(&g, &one).unwrap().elements(), one.elements());
    let bad = SubgroupPoset::from_subgroups(&g, 2, PosetKind::Custom, alloc::vec![g.whole().unwrap()]);
    assert!(bad.is_err());
    assert_eq!("iap".parse::<PosetKind>().unwrap(), PosetKind::IAp);
    // a non-invariant member set has no action
    let part = sp.restrict(&[0], PosetKind::Custom);
    assert!(part.action().is_none());
}

