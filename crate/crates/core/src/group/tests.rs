use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;

use super::*;
use crate::fixtures::*;

fn brute_elements(g: &Group) -> BTreeSet<Permutation> {
    let n = g.degree();
    let mut seen = BTreeSet::new();
    seen.insert(Permutation::identity(n));
    let mut stack = vec![Permutation::identity(n)];
    while let Some(x) = stack.pop() {
        for s in g.generators() {
            let y = x.compose(s);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

fn is_closed(g: &Group, h: &Subgroup) -> bool {
    let t = g.table().unwrap();
    h.elements().iter().all(|&a| h.elements().iter().all(|&b| h.contains(t.mul(a, b))))
}

#[test]
fn generation_orders() {
    let trivial = Group::generate(5, vec![]).unwrap();
    assert_eq!(*trivial.order(), BigUint::from(1u32));
    assert_eq!(*a5().order(), BigUint::from(60u32));
    assert_eq!(brute_elements(&a5()).len(), 60);
    assert_eq!(*a5_wreath_like().order(), BigUint::from(7200u32));
    assert_eq!(*psl2_8().order(), BigUint::from(504u32));
    for g in [a4(), s3(), d8(), symmetric(5), c3xs3(), psl2_8()] {
        assert_eq!(g.order(), &BigUint::from(brute_elements(&g).len()));
        let all: BTreeSet<Permutation> = g.elements().into_iter().collect();
        assert_eq!(all, brute_elements(&g));
    }
}

#[test]
fn generation_errors() {
    let err = Group::generate(5, vec![p("(1 2)", 3)]).unwrap_err();
    assert_eq!(err, Error::DegreeMismatch { expected: 5, found: 3 });
    assert!(matches!(Group::from_generators(vec![]), Err(Error::InvalidSpec(_))));
    assert!(matches!(Group::generate(0, vec![]), Err(Error::InvalidSpec(_))));
}

#[test]
fn membership_and_identity() {
    let g = a5();
    assert!(g.contains(&Permutation::identity(5)));
    assert!(!g.contains(&p("(1 2)", 5)));
    assert_eq!(g.id_of(&Permutation::identity(5)).unwrap(), IDENTITY);
    assert!(matches!(g.id_of(&p("(1 2)", 5)), Err(Error::NotContained(_))));
}

#[test]
fn sylow_examples() {
    let g = a5();
    let s2 = g.sylow_subgroup(2).unwrap();
    assert_eq!(s2.order(), 4);
    assert!(is_closed(&g, &s2));
    assert!(g.sylow_subgroup(7).unwrap().is_trivial());
    assert!(matches!(g.sylow_subgroup(4), Err(Error::InvalidArgument(_))));
    let big = a5_wreath_like();
    let p2 = big.sylow_subgroup(2).unwrap();
    assert_eq!(p2.order(), 32);
    assert!(is_closed(&big, &p2));
}

#[test]
fn sylow_counts() {
    for g in [a5(), symmetric(4), a4(), psl2_8(), c3xs3()] {
        let whole = g.whole().unwrap();
        for p in g.prime_divisors() {
            let n = g.sylow_conjugates(&whole, p).unwrap().len();
            assert_eq!(n as u64 % p, 1, "Sylow {p} count {n}");
            assert_eq!(g.order() % BigUint::from(n), BigUint::from(0u32));
        }
    }
    assert_eq!(g_count(&a5(), 2), 5);
    assert_eq!(g_count(&a5(), 5), 6);
    assert_eq!(g_count(&psl2_8(), 3), 28);
}

fn g_count(g: &Group, p: u64) -> usize {
    g.sylow_conjugates(&g.whole().unwrap(), p).unwrap().len()
}

#[test]
fn normalizer_examples() {
    let s4 = symmetric(4);
    let v4 = s4.subgroup(&[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]).unwrap();
    assert_eq!(s4.normalizer(&v4).unwrap().order(), 24);
    let g = a5();
    let sylow = g.sylow_subgroup(2).unwrap();
    assert_eq!(g.normalizer(&sylow).unwrap().order(), 12);
    let whole = g.whole().unwrap();
    assert_eq!(g.normalizer(&whole).unwrap(), whole);
}

#[test]
fn normalizer_routes_agree() {
    for g in [symmetric(4), a5(), d8(), c3xs3()] {
        let whole = g.whole().unwrap();
        for h in g.subgroup_lattice().unwrap() {
            let a = g.normalizer_in(&whole, &h).unwrap();
            let b = g.normalizer_elementwise(&whole, &h).unwrap();
            assert_eq!(a, b);
            let c = g.centralizer(&h).unwrap();
            assert!(c.is_subgroup_of(&a));
            assert!(h.is_subgroup_of(&a));
            assert_eq!(g.order() % BigUint::from(a.order()), BigUint::from(0u32));
        }
    }
}

#[test]
fn centralizer_examples() {
    let g = s3();
    let c = g.subgroup(&[p("(1 2 3)", 3)]).unwrap();
    assert_eq!(g.centralizer(&c).unwrap(), c);
    let a = a5();
    assert_eq!(a.centralizer(&Subgroup::trivial()).unwrap().order(), 60);
    let inv = a.subgroup(&[p("(1 2)(3 4)", 5)]).unwrap();
    assert_eq!(a.centralizer(&inv).unwrap().order(), 4);
    let s4 = symmetric(4);
    let k = s4.subgroup(&[p("(1 2 3)", 4)]).unwrap();
    let h = s4.subgroup(&[p("(1 2)", 4)]).unwrap();
    assert!(matches!(s4.centralizer_in(&k, &h), Err(Error::NotContained(_))));
    assert!(matches!(s4.normalizer_in(&k, &h), Err(Error::NotContained(_))));
}

#[test]
fn p_core_examples() {
    assert!(a5().p_core(2).unwrap().is_trivial());
    let s4 = symmetric(4);
    let core = s4.p_core(2).unwrap();
    let v4 = s4.subgroup(&[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]).unwrap();
    assert_eq!(core, v4);
    assert!(s4.is_normal(&core).unwrap());
    let g = c3xs3();
    let o3 = g.p_core(3).unwrap();
    assert_eq!(o3.order(), 9);
    assert!(g.is_normal(&o3).unwrap());
    assert!(a5_wreath_like().p_core(2).unwrap().is_trivial());
}

#[test]
fn omega1_examples() {
    let c4 = group(4, &["(1 2 3 4)"]);
    let (o, ab) = c4.omega1(&c4.whole().unwrap(), 2).unwrap();
    assert_eq!((o.order(), ab), (2, true));
    let d = d8();
    let (o, ab) = d.omega1(&d.whole().unwrap(), 2).unwrap();
    assert_eq!((o.order(), ab), (8, false));
    let v = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    let (o, ab) = v.omega1(&v.whole().unwrap(), 2).unwrap();
    assert_eq!((o.order(), ab), (4, true));
    assert!(matches!(s3().omega1(&s3().whole().unwrap(), 2), Err(Error::InvalidArgument(_))));
}

#[test]
fn solvability() {
    assert!(symmetric(4).is_solvable());
    assert!(!a5().is_solvable());
    assert!(Group::generate(3, vec![]).unwrap().is_solvable());
    let tiny = Limits { materialize: 1, ..Limits::default() };
    for (g, expected) in [(symmetric(4), true), (a5(), false), (psl2_8(), false), (c3xs3(), true)] {
        let unmat = Group::with_limits(g.degree(), g.generators().to_vec(), tiny).unwrap();
        assert!(!unmat.is_materialized());
        assert_eq!(unmat.is_solvable(), expected);
        assert_eq!(g.is_solvable(), expected);
        assert!(unmat.table().unwrap_err().is_capacity());
        assert!(unmat.normalizer(&Subgroup::trivial()).unwrap_err().is_capacity());
    }
}

#[test]
fn products() {
    let d = direct_product(&s3(), &s3(), Limits::default()).unwrap();
    assert_eq!((d.degree(), d.order().clone()), (6, BigUint::from(36u32)));
    let inv = vec![vec![p("(1 3 2)", 3)]];
    let two = group(2, &["(1 2)"]);
    let s = semidirect_regular(&c3(), &two, &inv, Limits::default()).unwrap();
    assert_eq!(*s.order(), BigUint::from(6u32));
    assert!(!s.is_abelian(&s.whole().unwrap()).unwrap());
    let w = c3_cubed_by_c3();
    assert_eq!(w.degree(), 27);
    assert_eq!(brute_elements(&w).len(), 81);
    assert_eq!(*w.order(), BigUint::from(81u32));
}

#[test]
fn product_action_errors() {
    let two = group(2, &["(1 2)"]);
    let v4 = group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
    // (1 2)(3 4) -> (1 2 3 4) is not an element of V4
    let bad = vec![vec![p("(1 2 3 4)", 4), p("(1 3)(2 4)", 4)]];
    assert!(matches!(semidirect_regular(&v4, &two, &bad, Limits::default()), Err(Error::InvalidAction(_))));
    // both generators to the same involution: not injective
    let collapse = vec![vec![p("(1 2)(3 4)", 4), p("(1 2)(3 4)", 4)]];
    assert!(matches!(
        semidirect_regular(&v4, &two, &collapse, Limits::default()),
        Err(Error::InvalidAction(_))
    ));
    // C4 generator to an involution: not a homomorphism onto a bijection
    let c4 = group(4, &["(1 2 3 4)"]);
    let nonhom = vec![vec![p("(1 3)(2 4)", 4)]];
    assert!(matches!(semidirect_regular(&c4, &two, &nonhom, Limits::default()), Err(Error::InvalidAction(_))));
    let swap = vec![vec![p("(1 3)(2 4)", 4), p("(1 2)(3 4)", 4)]];
    let d8 = semidirect_regular(&v4, &two, &swap, Limits::default()).unwrap();
    assert_eq!(*d8.order(), BigUint::from(8u32));
    let tiny = Limits { materialize: 2, ..Limits::default() };
    let big_n = Group::with_limits(4, v4.generators().to_vec(), tiny).unwrap();
    assert!(semidirect_regular(&big_n, &two, &swap, tiny).unwrap_err().is_capacity());
}

#[test]
fn normal_subgroups_and_lattice() {
    let s4 = symmetric(4);
    let orders: Vec<usize> = s4.normal_subgroups().unwrap().iter().map(|n| n.order()).collect();
    assert_eq!(orders, [1, 4, 12, 24]);
    let big = a5_wreath_like();
    let orders: Vec<usize> = big.normal_subgroups().unwrap().iter().map(|n| n.order()).collect();
    assert_eq!(orders, [1, 60, 60, 3600, 7200]);
    assert_eq!(a5().subgroup_lattice().unwrap().len(), 59);
    assert_eq!(s4.subgroup_lattice().unwrap().len(), 30);
    assert!(big.subgroup_lattice().unwrap_err().is_capacity());
}

#[test]
fn lattice_matches_two_generated_oracle() {
    // every subgroup of S4 and of C3 x S3 is generated by at most two elements
    for g in [symmetric(4), c3xs3(), d8()] {
        let t = g.table().unwrap();
        let mut oracle = BTreeSet::new();
        for a in t.ids() {
            for b in t.ids() {
                oracle.insert(g.subgroup_from_ids(&[a, b]).unwrap());
            }
        }
        let lattice: BTreeSet<Subgroup> = g.subgroup_lattice().unwrap().into_iter().collect();
        assert_eq!(lattice, oracle);
    }
}
