//! Small named groups used across the unit tests.

use alloc::vec::Vec;

use crate::group::{direct_product, semidirect_regular, Group, Limits};
use crate::perm::Permutation;

pub(crate) fn p(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, n).unwrap()
}

pub(crate) fn group(n: usize, gens: &[&str]) -> Group {
    Group::generate(n, gens.iter().map(|g| p(g, n)).collect()).unwrap()
}

pub(crate) fn symmetric(n: usize) -> Group {
    let cycle: Vec<u32> = (0..n as u32).collect();
    Group::generate(
        n,
        alloc::vec![
            Permutation::from_cycles(n, &[&cycle]).unwrap(),
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap()
        ],
    )
    .unwrap()
}

pub(crate) fn a5() -> Group {
    group(5, &["(1 2 3 4 5)", "(3 4 5)"])
}

pub(crate) fn a4() -> Group {
    group(4, &["(1 2 3)", "(2 3 4)"])
}

pub(crate) fn s3() -> Group {
    group(3, &["(1 2 3)", "(1 2)"])
}

pub(crate) fn c3() -> Group {
    group(3, &["(1 2 3)"])
}

pub(crate) fn c3xs3() -> Group {
    direct_product(&c3(), &s3(), Limits::default()).unwrap()
}

pub(crate) fn d8() -> Group {
    group(4, &["(1 2 3 4)", "(1 3)"])
}

/// `(A5 x A5) : 2` with the involution acting as a transposition on both factors.
pub(crate) fn a5_wreath_like() -> Group {
    group(10, &["(1 2 3 4 5)", "(3 4 5)", "(6 7 8 9 10)", "(8 9 10)", "(1 2)(6 7)"])
}

pub(crate) fn psl2_8() -> Group {
    group(9, &["(1 2)(3 4)(5 6)(7 8)", "(2 3 5 4 7 8 6)", "(1 9)(3 6)(4 7)(5 8)"])
}

/// `C3^3 : C3`, the acting generator cycling the three factors.
pub(crate) fn c3_cubed_by_c3() -> Group {
    let n = group(9, &["(1 2 3)", "(4 5 6)", "(7 8 9)"]);
    let action = alloc::vec![alloc::vec![p("(4 5 6)", 9), p("(7 8 9)", 9), p("(1 2 3)", 9)]];
    semidirect_regular(&n, &c3(), &action, Limits::default()).unwrap()
}
